#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

namespace buffon {

/// Dense integer matrix, row-major.
using IntMatrix = std::vector<std::vector<mpz_class>>;

struct IntegerSolution {
  std::vector<mpz_class> x;
  /// Basis of the integer kernel {v : A v = 0}.
  std::vector<std::vector<mpz_class>> kernel;
};

/// Solves A x = b over the integers by unimodular column reduction to
/// echelon form. Returns nullopt when no integer solution exists.
std::optional<IntegerSolution> solve_integer(const IntMatrix& a, const std::vector<mpz_class>& b);

}  // namespace buffon
