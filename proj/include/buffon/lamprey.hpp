#pragma once

// Weighted sums of roots of unity with exact rational angles.

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "buffon/polynomial.hpp"

namespace buffon {

/// The root of unity exp(2 pi i num/den), kept reduced with 0 <= num < den.
struct Angle {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Angle make(std::int64_t num, std::int64_t den);

  friend Angle operator+(const Angle& a, const Angle& b);
  friend Angle operator-(const Angle& a, const Angle& b);
  friend bool operator==(const Angle& a, const Angle& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator<(const Angle& a, const Angle& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
};

/// "a/q"; the zero angle prints as "0/1".
std::string to_string(const Angle& a);
/// Accepts "a/q" or an integer; reduces modulo 1.
Angle parse_angle(const std::string& text);

class RootSum {
 public:
  RootSum() = default;
  RootSum(std::initializer_list<std::pair<Angle, std::int64_t>> terms);

  /// Adds weight w at angle a; zero totals are dropped.
  void add(const Angle& a, std::int64_t w);

  const std::map<Angle, std::int64_t>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }
  /// Sum of |weight|.
  std::int64_t point_count() const;
  /// lcm of the denominators; 1 for the empty sum.
  std::int64_t order() const;

  RootSum rotated(const Angle& by) const;
  std::complex<double> numeric_value() const;

  friend RootSum operator+(const RootSum& a, const RootSum& b);
  friend RootSum operator-(const RootSum& a, const RootSum& b);
  friend RootSum operator*(std::int64_t k, const RootSum& a);
  friend bool operator==(const RootSum& a, const RootSum& b) { return a.terms_ == b.terms_; }

 private:
  std::map<Angle, std::int64_t> terms_;
};

std::string to_string(const RootSum& t);

/// {a/s mod 1 : a in A}, collisions accumulate weight.
RootSum from_digit_set(const DigitSet& a, std::int64_t s);

/// Exact test of sum w exp(2 pi i angle) == 0 via divisibility by Phi_order.
bool sigma_is_zero(const RootSum& t);

/// Raises every root to the m-th power.
RootSum power_map(const RootSum& t, std::int64_t m);

/// n points at rotation + j/n, weight one each.
RootSum polygon(std::int64_t n, const Angle& rotation = {});

/// {1/5, 2/5, 3/5, 4/5, 5/6, 1/6}: the pentagon with one vertex traded for
/// the opposite pair of a triangle.
RootSum lamprey_5_3();

struct PolygonTerm {
  std::int64_t weight;
  std::int64_t prime;
  Angle rotation;
};

/// Writes a vanishing sum as an integer combination of rotated prime polygons.
/// The result is verified by recombination before it is returned.
std::vector<PolygonTerm> decompose_prime_polygons(const RootSum& t);
RootSum recombine(const std::vector<PolygonTerm>& terms);

/// No proper non-empty sub-multiset vanishes. Support must be at most 12 points.
bool is_irreducible(const RootSum& t);

struct SixPointClass {
  bool triangles = false;
  bool segments = false;
  bool l53_rotation = false;

  bool none() const { return !triangles && !segments && !l53_rotation; }
  std::string label() const;
};

/// Shape of a vanishing six-point sum with unit weights.
SixPointClass classify_six_point(const RootSum& t);

struct SixPointSweep {
  std::int64_t subsets = 0;
  std::int64_t vanishing = 0;
  std::int64_t triangles = 0;
  std::int64_t segments = 0;
  std::int64_t l53 = 0;
  std::int64_t none = 0;
};

/// Classifies every vanishing 6-subset of the n-th roots of unity.
SixPointSweep six_point_sweep(std::int64_t n = 30);

struct ParasiticResult {
  bool trivial = false;
  int j0 = 0;  // shared 2-adic valuation
  int k0 = 0;  // shared 3-adic valuation
  std::vector<std::int64_t> s_values;
};

/// For |A| = 5: every s with Phi_s | A(x) and gcd(s, 5) = 1 has the same 2-
/// and 3-adic valuations. Throws StructuralViolation otherwise.
ParasiticResult parasitic_structure_check(const DigitSet& a);

struct MannResult {
  bool pass = false;
  std::vector<RootSum> pieces;     // minimal vanishing pieces, rotated to contain angle 0
  std::vector<std::int64_t> primes;  // primes used by their decompositions
};

/// Splits A_s into minimal vanishing pieces, decomposes each into prime
/// polygons and checks every prime divides s and is at most |A|.
MannResult mann_bound_check(const DigitSet& a, std::int64_t s);

}  // namespace buffon
