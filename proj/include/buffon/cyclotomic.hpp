#pragma once

#include <cstdint>
#include <vector>

#include "buffon/polynomial.hpp"

namespace buffon {

/// The s-th cyclotomic polynomial. Results are cached and the cache is thread-safe.
const IntPolynomial& cyclotomic(std::int64_t s);

struct CyclotomicFactor {
  std::int64_t s;
  int multiplicity;
};

/// Every s with Phi_s | p, in increasing order, with multiplicity.
std::vector<CyclotomicFactor> cyclotomic_divisors(const IntPolynomial& p);

/// Good/bad factorization of a digit polynomial relative to a scale L.
///
///   A = prod_{s in s1_list} Phi_s * prod_{s in s2_list} Phi_s * a3 * a4
///
/// s1_list holds the cyclotomic indices with gcd(s, L) != 1, s2_list those
/// coprime to L; both repeat an index once per multiplicity. a3 collects the
/// non-cyclotomic factors with a root on the unit circle, a4 the rest.
/// bad = prod over s2_list, good = A / bad.
struct FactorSplit {
  std::vector<std::int64_t> s1_list;
  std::vector<std::int64_t> s2_list;
  std::vector<CyclotomicFactor> cyclotomic;
  IntPolynomial a3;
  IntPolynomial a4;
  IntPolynomial good;
  IntPolynomial bad;
  std::int64_t s_A = 1;
  /// Set when the a3/a4 split relied on floating-point root location.
  bool a3_heuristic = false;
};

/// Roots closer than this to the unit circle count as lying on it.
inline constexpr double kUnitCircleTolerance = 1e-8;

FactorSplit factor_split(const IntPolynomial& a, std::int64_t L);

/// True iff prod_{k=1..j} B(x^{L^k}) has a coefficient outside {0, 1}.
bool is_stacking(const DigitSet& b, std::int64_t L, int j);

struct GoodCycConstruction {
  std::int64_t L1;  // L-smooth part of s
  std::int64_t M;   // s / L1, coprime to L
  int a;            // least exponent with L1 | L^a
  IntPolynomial F;  // Phi_{L1}
  IntPolynomial G;  // (x^{L^a} - 1) / ((x - 1) F)
};

/// Embeds Phi_s into the complement pair F * G = 1 + x + ... + x^{L^a - 1}
/// with Phi_s | F(x^M). Requires gcd(s, L) > 1.
GoodCycConstruction goodcyc_construction(std::int64_t s, std::int64_t L);

}  // namespace buffon
