// Runs the acceptance criteria and prints one line per criterion.

#include <iomanip>
#include <iostream>

#include "buffon/verify.hpp"

int main() {
  int failures = 0;
  for (int k = 1; k <= buffon::kAcceptanceCount; ++k) {
    const buffon::CheckResult r = buffon::run_acceptance(k);
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << std::fixed << std::setprecision(2) << r.seconds
              << " s, budget " << std::setprecision(0) << r.budget << " s) " << r.detail << std::endl;
    if (!r.pass) ++failures;
  }
  std::cout << (buffon::kAcceptanceCount - failures) << "/" << buffon::kAcceptanceCount << " criteria passed"
            << std::endl;
  return failures == 0 ? 0 : 1;
}
