#pragma once

// Bundled verification suites: module property checks and the acceptance
// criteria. Every check catches its own exceptions and reports them as a failure.

#include <cstdint>
#include <string>
#include <vector>

namespace buffon {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  /// Runtime budget in seconds; 0 means unbounded. Exceeding it fails the check.
  double budget = 0;
};

/// intervals, polynomials, lamprey, geometry, riesz, slv, acceptance, all.
const std::vector<std::string>& suite_names();

/// Throws InvalidInput for an unknown suite.
std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed = 20240601);

inline constexpr int kAcceptanceCount = 10;

/// Criterion 1..10.
CheckResult run_acceptance(int criterion);

}  // namespace buffon
