#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "buffon/error.hpp"
#include "buffon/riesz.hpp"

using namespace buffon;

namespace {

std::complex<double> direct(const std::vector<double>& f, const std::vector<std::complex<double>>& c, double d,
                            double xi) {
  std::complex<double> s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) s += c[i] * std::polar(1.0, 2 * std::numbers::pi * f[i] * d * xi);
  return s;
}

const DigitSet& five() {
  static const DigitSet a({0, 3, 4, 8, 9});
  return a;
}

}  // namespace

TEST_SUITE("riesz") {
  TEST_CASE("exponential sums match direct evaluation") {
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> u(-3, 3);
    const std::vector<double> ints{0, 3, 4, 8, 9}, reals{0, 0.5, 1.7, -2.25};
    const std::vector<std::complex<double>> ci{1, {0, 1}, -0.5, 2, {1, -1}}, cr{1, 2, {0, 1}, -1};
    ExpPoly p(ints, ci, 25.0), r(reals, cr, 0.3);
    for (int i = 0; i < 200; ++i) {
      const double xi = u(rng);
      CHECK(std::abs(p(xi) - direct(ints, ci, 25.0, xi)) < 1e-10);
      CHECK(std::abs(r(xi) - direct(reals, cr, 0.3, xi)) < 1e-12);
      CHECK(std::abs(p(xi)) <= p.sup_bound() + 1e-12);
    }
    CHECK_THROWS_AS(ExpPoly({0, 1}, {1}), InvalidInput);
  }

  TEST_CASE("digit characters") {
    const TrigSystem sys = TrigSystem::single(five(), 5);
    CHECK(std::abs(sys.phi(0) - 1.0) < 1e-14);
    CHECK(std::abs(sys.phi(1.0 / 12)) < 1e-14);
    CHECK(std::abs(sys.phi(5.0 / 12)) < 1e-14);
    CHECK(std::abs(sys.phi(0.1)) > 0.1);
    const TrigSystem poly = TrigSystem::from_polynomial(generating_polynomial(five()), 5);
    for (double xi : {0.1, 0.37, 0.81}) CHECK(std::abs(poly.phi(xi) - sys.phi(xi)) < 1e-12);
    CHECK_THROWS_AS(TrigSystem::single(five(), 1), InvalidInput);
    CHECK_THROWS_AS(TrigSystem::from_polynomial(IntPolynomial({-1, 1}), 5), InvalidInput);
  }

  TEST_CASE("Riesz products") {
    const TrigSystem sys = TrigSystem::single(DigitSet({0, 1}), 4);
    CHECK(riesz_product(sys, {3, 3}, 0.123) == std::complex<double>(1, 0));
    const double xi = 0.2;
    std::complex<double> want = sys.phi(xi) * sys.phi(4 * xi) * sys.phi(16 * xi);
    CHECK(std::abs(riesz_product(sys, {0, 3}, xi) - want) < 1e-14);
    CHECK_THROWS_AS(riesz_product(sys, {2, 1}, xi), InvalidInput);
  }

  TEST_CASE("Parseval for distinct digit expansions") {
    // |A| distinct digits below L give orthonormal characters, so the
    // integral over a period is |A|^{-n}.
    const std::pair<std::vector<std::int64_t>, std::int64_t> cases[] = {{{0, 1}, 4}, {{0, 2, 5}, 7}};
    for (const auto& [digits, L] : cases) {
      const TrigSystem sys = TrigSystem::single(DigitSet(digits), L);
      for (int n = 1; n <= 3; ++n) {
        Quadrature q = integrate_sq(sys, {0, n}, 0.0, 1.0);
        CHECK(q.value == doctest::Approx(std::pow(static_cast<double>(digits.size()), -n)).epsilon(1e-9));
        CHECK(q.error_indicator < 1e-8);
      }
    }
  }

  TEST_CASE("quadrature validates its step") {
    const TrigSystem sys = TrigSystem::single(DigitSet({0, 1}), 4);
    CHECK_THROWS_AS(integrate_sq(sys, {0, 3}, 0.0, 1.0, 0.01), ResolutionError);
    CHECK_THROWS_AS(integrate_sq(sys, {0, 3}, 1.0, 0.0), InvalidInput);
    CHECK_NOTHROW(integrate_sq(sys, {0, 3}, 0.0, 1.0, 1e-3));
    const IntervalSet region = IntervalSet::Exact({{Rational(0), Rational(1, 4)}, {Rational(1, 2), Rational(1)}});
    const double split = integrate_sq(sys, {0, 2}, 0.0, 0.25).value + integrate_sq(sys, {0, 2}, 0.5, 1.0).value;
    CHECK(integrate_sq(sys, {0, 2}, region).value == doctest::Approx(split).epsilon(1e-12));
  }

  TEST_CASE("Salem lower bound") {
    const TrigSystem sys = TrigSystem::product(DigitSet({0, 1}), DigitSet({0, 1}), 0.5);
    SalemCheck full = salem_lower_bound_check(sys, {2, 6}, IntervalSet::Exact(Rational(0), Rational(1)));
    CHECK(full.pass);
    CHECK(full.rhs == doctest::Approx(std::pow(4.0, -4)));
    CHECK_THROWS_AS(salem_lower_bound_check(sys, {2, 6}, IntervalSet::Exact()), EmptySetError);
    CHECK_THROWS_AS(salem_lower_bound_check(sys, {2, 6}, IntervalSet::Exact(Rational(1, 2), Rational(3, 2))),
                    PreconditionError);
  }

  TEST_CASE("psi specifications") {
    SSVSpec s;
    CHECK_NOTHROW(s.validate());
    CHECK(s.psi(3, 5) == doctest::Approx(std::pow(5.0, -3)));
    s.psi_kind = PsiKind::square;
    CHECK(s.psi(3, 5) == doctest::Approx(std::pow(5.0, -9)));
    s.psi_kind = PsiKind::log;
    CHECK(s.psi(3, 5) == doctest::Approx(std::pow(5.0, -3 * std::log(3.0))));
    SSVSpec bad;
    bad.c3 = 0.4;
    CHECK_THROWS_AS(bad.validate(), InvalidInput);
    CHECK(parse_psi_kind("square") == PsiKind::square);
    CHECK(to_string(PsiKind::log) == "log");
    CHECK_THROWS_AS(parse_psi_kind("cubic"), InvalidInput);
  }

  TEST_CASE("sets of small values") {
    const TrigSystem sys = TrigSystem::single(five(), 5);
    IntervalSet all = ssv_set(sys, 2, 2.0, 1e-3);
    CHECK(all.to_float() == IntervalSet::Float(0.0, 1.0));
    CHECK_THROWS_AS(ssv_set(sys, 2, 0.01, 0.1), ResolutionError);
    CHECK_THROWS_AS(ssv_set(sys, 0, 0.01, 1e-3), InvalidInput);

    const int m = 3;
    const double threshold = 0.02;
    IntervalSet s = ssv_set(sys, m, threshold, 1e-6);
    CHECK(s.contains(IntervalSet(IntervalSet::Float(1.0 / 12, 1.0 / 12))));
    std::mt19937_64 rng(52);
    std::uniform_real_distribution<double> u(0, 1);
    int inside = 0;
    for (int i = 0; i < 20000; ++i) {
      const double xi = u(rng);
      if (std::abs(riesz_product(sys, {1, m + 1}, xi)) > threshold) continue;
      ++inside;
      CHECK(s.contains(IntervalSet(IntervalSet::Float(xi, xi))));
    }
    CHECK(inside > 0);
  }

  TEST_CASE("cover statistics") {
    CoverStats c = ssv_cover_stats(IntervalSet::Float(0.0, 1.0), 5, 2, 1.0);
    CHECK(c.count == 25);
    CHECK(c.c2_estimate == doctest::Approx(1.0));
    CHECK(ssv_cover_stats(IntervalSet::Float(), 5, 2, 1.0).count == 0);
    CHECK_THROWS_AS(ssv_cover_stats(IntervalSet::Float(0.0, 1.0), 5, 0, 1.0), InvalidInput);
  }

  TEST_CASE("double angle identity") {
    for (int m = 0; m <= 12; ++m) {
      DoubleAngleReport r = double_angle_check(2 * std::numbers::pi, m, 500, 53 + m);
      CHECK(r.samples == 500);
      CHECK(r.max_identity_error < 1e-6);
      CHECK(r.inequality_holds);
      CHECK(r.min_inequality_ratio >= 1 - 1e-9);
    }
    CHECK_THROWS_AS(double_angle_check(1.0, 13, 10, 1), InvalidInput);
  }

  TEST_CASE("pseudofactorization of four angles") {
    PseudofactorizationReport z = pseudofactorization_ratio(0, std::numbers::pi, 1.0, 1.0 + std::numbers::pi);
    CHECK(z.indeterminate);
    PseudofactorizationReport same = pseudofactorization_ratio(0.3, 0.3, 0.3, 0.3);
    CHECK_FALSE(same.indeterminate);
    CHECK(same.lhs == doctest::Approx(4.0));
    CHECK(same.rhs == doctest::Approx(1.0));
  }

  TEST_CASE("a bad factor defeats the small-value bound") {
    SSVFailureReport r = ssv_failure_demo(five(), 5, 16, 2.0);
    CHECK(r.s_star == 12);
    CHECK(r.xi0 == doctest::Approx(1.0 / 12));
    CHECK(r.zeros_exact);
    CHECK(r.interval_length == doctest::Approx(std::pow(5.0, -8)));
    CHECK(r.max_full <= r.threshold);
    CHECK(r.certified);
    CHECK(r.in_ssv);
    CHECK_THROWS_AS(ssv_failure_demo(five(), 6, 16, 2.0), PreconditionError);
    CHECK_THROWS_AS(ssv_failure_demo(DigitSet({0, 1}), 4, 16, 2.0), PreconditionError);
  }
}
