#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace buffon::cli {

/// Runs the command line (args excludes the program name) and returns the
/// process exit code: 0 success, 1 verification failure, 2 invalid input,
/// 3 resource bound.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace buffon::cli
