#pragma once

// Cantor iterates built from squares, their projections and counting functions.
//
// Level 0 is the unit square. Level 1 places squares of side 1/L at the
// digit points z_j, and level N+1 refines level N by adding L^{-N-1} z_j, so
// the level-N squares are z + [0, L^{-N}]^2 for z in Z_N.

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "buffon/intervals.hpp"
#include "buffon/polynomial.hpp"
#include "buffon/rational.hpp"

namespace buffon {

struct Point2 {
  Rational x;
  Rational y;
};

/// L distinct, non-collinear digit points; the similarity ratio is 1/L.
class SelfSimilarSystem {
 public:
  explicit SelfSimilarSystem(std::vector<Point2> digits);

  const std::vector<Point2>& digits() const { return digits_; }
  std::int64_t L() const { return static_cast<std::int64_t>(digits_.size()); }

 private:
  std::vector<Point2> digits_;
};

/// Digits A + iB with L = |A| |B| >= 4.
struct ProductSystem {
  DigitSet A;
  DigitSet B;
  std::int64_t L;

  ProductSystem(DigitSet a, DigitSet b);
  SelfSimilarSystem planar() const;
};

ProductSystem four_corner();

/// Lower-left corners of the level-N squares, exact.
std::vector<Point2> iterate_centers(const SelfSimilarSystem& sys, int N);
std::vector<std::pair<double, double>> iterate_centers_float(const SelfSimilarSystem& sys, int N);

/// Projection direction. An angle theta projects onto x cos(theta) + y sin(theta).
/// A slope t projects onto the axis coordinate u = x + t y, which is exact for
/// rational t; true lengths are axis lengths times scale() = 1/sqrt(1 + t^2).
class Direction {
 public:
  static Direction from_angle(double theta);
  static Direction from_slope(const Rational& t);

  bool is_slope() const { return slope_; }
  double theta() const;
  const Rational& slope() const { return t_; }
  double scale() const;
  /// Axis coefficients (cx, cy): u = cx x + cy y.
  std::pair<double, double> coefficients() const;
  std::string label() const;

 private:
  bool slope_ = false;
  double theta_ = 0;
  Rational t_;
};

struct ProjectionProfile {
  Direction direction;
  int N = 0;
  /// Projected squares in axis coordinates.
  IntervalSet shadow;
  /// Axis coordinate of the start of every projected square.
  std::vector<double> atoms;
  double scale = 1;
  /// Shadow length in true units.
  double measure = 0;
};

/// Exact mode needs a slope direction.
ProjectionProfile shadow(const SelfSimilarSystem& sys, int N, const Direction& dir,
                         NumericMode mode = NumericMode::floating);

/// Shadow length (true units) by a floating sort-and-sweep, without building the set.
double shadow_measure(const std::vector<std::pair<double, double>>& corners, int N, std::int64_t L,
                      double theta);

struct FavardEstimate {
  double estimate = 0;
  double error_indicator = 0;
  int grid = 0;
};

/// Midpoint rule for (1/pi) int_0^pi |proj_theta S_N| d theta on grid and on
/// 2 * grid points; the indicator is the difference of the two.
FavardEstimate favard(const SelfSimilarSystem& sys, int N, int grid_count);

/// Integer step function: values[i] holds on [breaks[i], breaks[i+1]).
template <class T>
struct StepFunction {
  std::vector<T> breaks;
  std::vector<std::int64_t> values;

  T integral() const {
    T s(0);
    for (std::size_t i = 0; i < values.size(); ++i) s += T(values[i]) * T(breaks[i + 1] - breaks[i]);
    return s;
  }
  T l2_squared() const {
    T s(0);
    for (std::size_t i = 0; i < values.size(); ++i)
      s += T(values[i] * values[i]) * T(breaks[i + 1] - breaks[i]);
    return s;
  }
  T measure_at_least(std::int64_t k) const {
    T s(0);
    for (std::size_t i = 0; i < values.size(); ++i)
      if (values[i] >= k) s += breaks[i + 1] - breaks[i];
    return s;
  }
  std::int64_t max_value() const {
    std::int64_t m = 0;
    for (auto v : values) m = std::max(m, v);
    return m;
  }
};

/// f_{n,theta}: the number of level-n squares whose projection covers a point.
/// Breakpoints are in axis coordinates; the *_true accessors convert to true units.
struct CountingFunction {
  Direction direction;
  int n = 0;
  double scale = 1;
  std::variant<StepFunction<Rational>, StepFunction<double>> f;

  double integral_true() const;
  double l2_squared_true() const;
  double measure_at_least_true(std::int64_t k) const;
  std::int64_t max_value() const;
};

CountingFunction counting_function(const SelfSimilarSystem& sys, int n, const Direction& dir,
                                   NumericMode mode = NumericMode::floating);

struct BadDirectionReport {
  /// ||f*||_2^2 with f* = max_{1 <= n <= N} f_n, true units.
  double f_star_l2_squared = 0;
  /// max_n ||f_n||_2^2, true units.
  double max_fn_l2_squared = 0;
  /// |{f* >= K}|, true units.
  double a_star_measure = 0;
  bool in_tilde_e = false;
};

BadDirectionReport bad_direction_test(const SelfSimilarSystem& sys, int N, std::int64_t K,
                                      const Direction& dir, NumericMode mode = NumericMode::floating);

struct DecayFit {
  double p = 0;
  double C = 0;
};

/// Least squares of log Fav = log C - p log N.
DecayFit decay_fit(const std::vector<std::pair<double, double>>& values);

}  // namespace buffon
