#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "buffon/error.hpp"
#include "buffon/geometry.hpp"

using namespace buffon;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

// Oracle: fraction of a fine grid on the projection axis covered by some
// projected square, scaled to a length.
double sampled_shadow(const SelfSimilarSystem& sys, int N, double theta, int samples) {
  const double c = std::cos(theta), s = std::sin(theta);
  const double side = std::pow(static_cast<double>(sys.L()), -N);
  std::vector<std::pair<double, double>> pieces;
  for (const auto& [x, y] : iterate_centers_float(sys, N)) {
    double v[4] = {c * x + s * y, c * (x + side) + s * y, c * x + s * (y + side), c * (x + side) + s * (y + side)};
    pieces.emplace_back(*std::min_element(v, v + 4), *std::max_element(v, v + 4));
  }
  double lo = pieces[0].first, hi = pieces[0].second;
  for (const auto& p : pieces) {
    lo = std::min(lo, p.first);
    hi = std::max(hi, p.second);
  }
  std::vector<char> hit(static_cast<std::size_t>(samples), 0);
  const double h = (hi - lo) / samples;
  for (const auto& p : pieces) {
    auto a = static_cast<long>(std::ceil((p.first - lo) / h - 0.5));
    auto b = static_cast<long>(std::floor((p.second - lo) / h - 0.5));
    for (long i = std::max(0L, a); i <= std::min(b, static_cast<long>(samples) - 1); ++i) hit[i] = 1;
  }
  return h * static_cast<double>(std::count(hit.begin(), hit.end(), 1));
}

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("systems validate their digits") {
    CHECK_THROWS_AS(SelfSimilarSystem({{q(0), q(0)}, {q(1), q(1)}, {q(2), q(2)}}), InvalidInput);
    CHECK_THROWS_AS(SelfSimilarSystem({{q(0), q(0)}, {q(0), q(0)}, {q(1), q(0)}}), InvalidInput);
    ProductSystem fc = four_corner();
    CHECK(fc.L == 4);
    CHECK(fc.planar().L() == 4);
  }

  TEST_CASE("iterates follow A_{N+1} = A_N + L^{-N-1} A") {
    const SelfSimilarSystem sys = four_corner().planar();
    CHECK(iterate_centers(sys, 0).size() == 1);
    auto z = iterate_centers(sys, 2);
    CHECK(z.size() == 16);
    bool found = std::any_of(z.begin(), z.end(), [](const Point2& p) { return p.x == q(17, 16) && p.y == q(17, 16); });
    CHECK(found);
    CHECK(iterate_centers_float(sys, 3).size() == 64);
    CHECK_THROWS_AS(iterate_centers(sys, 12), ResourceLimit);
  }

  TEST_CASE("directions") {
    Direction d = Direction::from_slope(q(1, 2));
    CHECK(d.is_slope());
    CHECK(d.scale() == doctest::Approx(1 / std::sqrt(1.25)));
    CHECK(d.theta() == doctest::Approx(std::atan(0.5)));
    CHECK(d.label() == "t=1/2");
    CHECK_THROWS_AS(Direction::from_angle(std::nan("")), InvalidInput);
  }

  TEST_CASE("the unit square") {
    const SelfSimilarSystem sys = four_corner().planar();
    for (const auto& t : {q(0), q(1, 3), q(-2, 5), q(3)}) {
      ProjectionProfile p = shadow(sys, 0, Direction::from_slope(t), NumericMode::exact);
      double want = (1 + std::abs(t.get_d())) / std::sqrt(1 + t.get_d() * t.get_d());
      CHECK(p.measure == doctest::Approx(want).epsilon(1e-14));
    }
    // (1/pi) int_0^pi (|cos| + |sin|) = 4/pi
    FavardEstimate f = favard(sys, 0, 512);
    CHECK(f.estimate == doctest::Approx(4 / std::numbers::pi).epsilon(1e-5));
    CHECK(f.error_indicator < 1e-5);
  }

  TEST_CASE("shadow lengths match a sampled oracle") {
    const SelfSimilarSystem sys = four_corner().planar();
    for (double theta : {0.3, 1.1, 2.4}) {
      for (int n = 1; n <= 3; ++n) {
        double got = shadow(sys, n, Direction::from_angle(theta)).measure;
        CHECK(got == doctest::Approx(sampled_shadow(sys, n, theta, 2000000)).epsilon(1e-3));
        auto corners = iterate_centers_float(sys, n);
        CHECK(shadow_measure(corners, n, sys.L(), theta) == doctest::Approx(got).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("exact and float shadows agree") {
    const SelfSimilarSystem sys = ProductSystem(DigitSet({0, 3, 4, 8, 9}), DigitSet({0, 1})).planar();
    for (const auto& t : {q(1, 3), q(2, 7), q(-5, 2)}) {
      Direction d = Direction::from_slope(t);
      double e = shadow(sys, 2, d, NumericMode::exact).measure;
      double f = shadow(sys, 2, d, NumericMode::floating).measure;
      CHECK(e == doctest::Approx(f).epsilon(1e-12));
    }
    CHECK_THROWS_AS(shadow(sys, 2, Direction::from_angle(0.2), NumericMode::exact), InvalidInput);
  }

  TEST_CASE("counting function on the x axis") {
    const SelfSimilarSystem sys = four_corner().planar();
    CountingFunction f = counting_function(sys, 1, Direction::from_slope(q(0)), NumericMode::exact);
    const auto& step = std::get<StepFunction<Rational>>(f.f);
    CHECK(step.max_value() == 2);
    CHECK(step.measure_at_least(2) == q(1, 2));
    CHECK(step.integral() == 1);
    CHECK(step.l2_squared() == 2);
  }

  TEST_CASE("counting integrals are exact") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> num(-12, 12), den(1, 9);
    const SelfSimilarSystem sys = four_corner().planar();
    for (int i = 0; i < 25; ++i) {
      const Rational t = q(num(rng), den(rng));
      for (int n = 1; n <= 3; ++n) {
        CountingFunction f = counting_function(sys, n, Direction::from_slope(t), NumericMode::exact);
        const auto& step = std::get<StepFunction<Rational>>(f.f);
        // L^n squares, each projecting to axis length L^{-n} (1 + |t|).
        CHECK(step.integral() == 1 + abs(t));
        // Cauchy-Schwarz on the support.
        CHECK(step.l2_squared() * step.measure_at_least(1) >= step.integral() * step.integral());
        CHECK(step.max_value() <= 64);
      }
    }
  }

  TEST_CASE("float counting functions track exact ones") {
    const SelfSimilarSystem sys = four_corner().planar();
    Direction d = Direction::from_slope(q(1, 3));
    CountingFunction e = counting_function(sys, 3, d, NumericMode::exact);
    CountingFunction f = counting_function(sys, 3, d, NumericMode::floating);
    CHECK(e.integral_true() == doctest::Approx(f.integral_true()).epsilon(1e-12));
    CHECK(e.l2_squared_true() == doctest::Approx(f.l2_squared_true()).epsilon(1e-12));
    CHECK(e.max_value() == f.max_value());
  }

  TEST_CASE("bad direction test along a stacked axis") {
    const SelfSimilarSystem sys = four_corner().planar();
    BadDirectionReport r = bad_direction_test(sys, 3, 2, Direction::from_slope(q(0)), NumericMode::exact);
    // Columns stack two squares from level 1 on, and the level sets are nested.
    CHECK(r.a_star_measure == doctest::Approx(0.5));
    CHECK_FALSE(r.in_tilde_e);
    CHECK(r.f_star_l2_squared >= r.max_fn_l2_squared - 1e-12);
    CHECK_THROWS_AS(bad_direction_test(sys, 3, 1, Direction::from_slope(q(0))), InvalidInput);
    CHECK_THROWS_AS(bad_direction_test(sys, 0, 2, Direction::from_slope(q(0))), InvalidInput);
  }

  TEST_CASE("Favard estimates decrease") {
    const SelfSimilarSystem sys = four_corner().planar();
    double prev = favard(sys, 1, 128).estimate;
    for (int n = 2; n <= 5; ++n) {
      double cur = favard(sys, n, 128).estimate;
      CHECK(cur < prev);
      prev = cur;
    }
    CHECK_THROWS_AS(favard(sys, 1, 8), InvalidInput);
  }

  TEST_CASE("decay fit recovers a power law") {
    std::vector<std::pair<double, double>> v;
    for (int n = 1; n <= 6; ++n) v.emplace_back(n, 2.0 * std::pow(n, -0.7));
    DecayFit f = decay_fit(v);
    CHECK(f.p == doctest::Approx(0.7));
    CHECK(f.C == doctest::Approx(2.0));
    CHECK_THROWS_AS(decay_fit({{1, 1}, {2, 0.5}}), InvalidInput);
  }
}
