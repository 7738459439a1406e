#pragma once

// Sets of large values: splitting the bad spectrum s_A = s1 s2, the lattice
// neighbourhoods Delta_j, and two constructions of Gamma with Gamma - Gamma
// inside Delta.
//
// Delta_j = (L^{-j}/s1) Z + (-w_j, w_j) with w_j = L^{-j} eta / (s1 s2) is open;
// it is stored as its closure, which is what the closed pieces of Gamma need.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "buffon/intervals.hpp"
#include "buffon/polynomial.hpp"
#include "buffon/rational.hpp"

namespace buffon {

struct Split {
  std::int64_t s1 = 1;
  std::int64_t s2 = 1;

  friend bool operator==(const Split& a, const Split& b) { return a.s1 == b.s1 && a.s2 == b.s2; }
};

struct SplitReport {
  std::int64_t s_A = 1;
  std::vector<Split> splits;
  /// s_A = 1: there is no bad factor and nothing to avoid.
  bool trivial = false;
  /// A split exists, or the case is trivial.
  bool feasible = false;
};

/// Factorizations s_A = s1 s2 with s1, s2 > 1, s2 < |A| and Phi_q not dividing
/// A for every q | s1. Ordered by s1.
SplitReport compatible_splits(const DigitSet& a, std::int64_t L);

/// Largest s1, ties to the smaller s2. Throws StructuralViolation when none exists.
Split default_split(const SplitReport& report);

/// Closure of Delta_j restricted to [lo, hi].
IntervalSet delta_set(std::int64_t s1, std::int64_t s2, const Rational& eta, int j, std::int64_t L,
                      const Rational& lo = Rational(-2), const Rational& hi = Rational(2));

/// Intersection of delta_set over j = 0..m-1.
IntervalSet delta_intersection(std::int64_t s1, std::int64_t s2, const Rational& eta, int m, std::int64_t L,
                               const Rational& lo = Rational(-2), const Rational& hi = Rational(2));

struct SLVConfig {
  int m = 1;
  Rational eta = Rational(1, 2);
  Rational M = Rational(10);
  Rational t = Rational(1);
  std::int64_t L = 2;
  Split split_a;
  /// Absent in single-set mode.
  std::optional<Split> split_b;

  void validate() const;
};

struct GammaResult {
  IntervalSet gamma;  // exact, inside [0, 1]
  Rational measure;
  /// Constructive lower bound: q^{-m} or the averaging floor.
  Rational floor;
  /// Discrete shifts tau_j in {0..q-1} (pigeonhole).
  std::vector<int> tau_discrete;
  /// Continuous translations, A levels first then B levels (averaging).
  std::vector<Rational> tau;
  IntervalSet delta;
  std::int64_t trials = 0;
};

/// [0,1] intersected with (L^{-j}/s1)(tau_j/q + Z) + [0, L^{-j} eta/(s1 s2)] over j.
IntervalSet gamma_tau(std::int64_t s1, std::int64_t s2, const Rational& eta, std::int64_t L,
                      const std::vector<int>& tau, int q = 4);

/// Maximizes |Gamma_tau| over tau in {0..q-1}^m. Needs q eta >= s2 so the q
/// shifts cover every period; q^m is capped at 10^6.
GammaResult gamma_pigeonhole(std::int64_t s1, std::int64_t s2, const Rational& eta, std::int64_t L, int m,
                             int q = 4);

/// ((M-1)(M-1/t)/M^2 * eta^2/(s2A s2B))^m, or ((M-1)/M * eta/s2A)^m without B.
Rational translated_floor(const SLVConfig& cfg);

/// Random translations tau in [0, M] (dyadic, denominator 2^20) applied to the
/// level pieces of A and of t^{-1} B. Runs batches of `trials` until the best
/// set reaches the floor; max_batches caps the budget.
GammaResult gamma_translated(const SLVConfig& cfg, std::int64_t trials, std::uint64_t seed,
                             int max_batches = 64);

/// Target Delta_A, intersected with t^{-1} Delta_B when B is present.
IntervalSet slv_delta(const SLVConfig& cfg);

struct SLVReport {
  bool containment = false;
  double c = 0;              // certified lower bound of |phi''| on Delta_0
  double min_product = 0;    // over the sampled xi in Gamma - Gamma
  double min_xi = 0;
  double product_floor = 0;  // c^{2m}, or c^m without B
  bool min_product_pass = false;
  double measure = 0;
  double c_star = 0;
  double measure_target = 0;  // L^{(c* - 1) m}
  bool measure_pass = false;
  /// epsilon with floor = L^{-(1 - epsilon) m}.
  double epsilon = 0;
  int samples = 0;
};

/// Checks a Gamma against its target. Containment failure throws
/// StructuralViolation; the other two checks are reported.
SLVReport verify_slv(const GammaResult& g, const DigitSet& a, const std::optional<DigitSet>& b,
                     const SLVConfig& cfg, int sample_count = 2000, double c_star = 0.1);

/// No zero k/s of a bad factor Phi_s of A lies in the closure of Delta_0.
bool bad_zeros_avoid_delta(const DigitSet& a, std::int64_t L, Split split, const Rational& eta);

}  // namespace buffon
