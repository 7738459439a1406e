#include <doctest.h>

#include <random>

#include "buffon/error.hpp"
#include "buffon/slv.hpp"

using namespace buffon;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

const DigitSet& five() {
  static const DigitSet a({0, 3, 4, 8, 9});
  return a;
}

// Oracle for |Gamma_tau| with s1 = 6, s2 = 2, eta = 1/2, q = 4: x lies in the
// level-j piece iff frac(6 L^j x - tau_j / 4) <= 1/4. All endpoints sit on the
// grid L^{-(m-1)} / 24, so testing cell midpoints of half that width is exact.
Rational grid_gamma_measure(std::int64_t L, const std::vector<int>& tau) {
  const int m = static_cast<int>(tau.size());
  long cells = 48;
  for (int j = 1; j < m; ++j) cells *= L;
  long hits = 0;
  for (long c = 0; c < cells; ++c) {
    const Rational x = make_rational(2 * c + 1, 2 * cells);
    bool in = true;
    Rational scale = 6;
    for (int j = 0; j < m && in; ++j, scale *= L) {
      Rational y = scale * x - make_rational(tau[j], 4);
      y -= floor_of(y);
      in = y <= q(1, 4);
    }
    if (in) ++hits;
  }
  return make_rational(hits, cells);
}

SLVConfig translated_config() {
  SLVConfig c;
  c.m = 2;
  c.eta = q(9, 10);
  c.M = 10;
  c.t = q(1, 2);
  c.L = 25;
  c.split_a = {6, 2};
  c.split_b = Split{6, 2};
  return c;
}

}  // namespace

TEST_SUITE("slv") {
  TEST_CASE("the closure of Delta_0 on [-2, 2]") {
    const IntervalSet d = delta_set(6, 2, q(1, 2), 0, 25);
    const auto& e = d.exact();
    CHECK(e.size() == 25);
    CHECK(e.measure() == 2);
    CHECK(e.contains(IntervalSet::Exact(q(-1, 24), q(1, 24))));
    CHECK(e.contains(q(1, 6) + q(1, 24)));
    CHECK_FALSE(e.contains(q(1, 12)));
  }

  TEST_CASE("Delta_j scales by L^{-j}") {
    const IntervalSet d = delta_set(6, 2, q(1, 2), 1, 25);
    const auto& e = d.exact();
    CHECK(e.size() == 601);
    CHECK(e.measure() == 2);
    CHECK(e.contains(q(1, 600)));
    CHECK_FALSE(e.contains(q(1, 300)));
    CHECK_THROWS_AS(delta_set(6, 2, q(1, 2), -1, 25), InvalidInput);
    IntervalSet both = delta_intersection(6, 2, q(1, 2), 2, 25);
    CHECK(both.exact() == intersect(delta_set(6, 2, q(1, 2), 0, 25), delta_set(6, 2, q(1, 2), 1, 25)).exact());
  }

  TEST_CASE("single-level shifts tile [0, 1]") {
    Rational total = 0;
    for (int tau = 0; tau < 4; ++tau) total += gamma_tau(6, 2, q(1, 2), 5, {tau}).exact().measure();
    CHECK(total == 1);
    CHECK_THROWS_AS(gamma_tau(6, 2, q(1, 2), 5, {4}), InvalidInput);
  }

  TEST_CASE("Gamma_tau matches a grid oracle") {
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<int> shift(0, 3), len(1, 3);
    for (int i = 0; i < 40; ++i) {
      std::vector<int> tau(static_cast<std::size_t>(len(rng)));
      for (auto& t : tau) t = shift(rng);
      CHECK(gamma_tau(6, 2, q(1, 2), 5, tau).exact().measure() == grid_gamma_measure(5, tau));
    }
  }

  TEST_CASE("pigeonhole maximizer") {
    // Frozen from an exhaustive grid-oracle search over tau in {0..3}^m.
    const Rational frozen[] = {q(1, 4), q(1, 10), q(1, 25)};
    for (int m = 1; m <= 3; ++m) {
      Rational best = 0;
      std::vector<int> tau(static_cast<std::size_t>(m), 0);
      for (int code = 0; code < (1 << (2 * m)); ++code) {
        for (int j = 0; j < m; ++j) tau[j] = (code >> (2 * j)) & 3;
        best = std::max(best, grid_gamma_measure(5, tau));
      }
      CHECK(best == frozen[m - 1]);
      GammaResult g = gamma_pigeonhole(6, 2, q(1, 2), 5, m);
      CHECK(g.measure == best);
      CHECK(g.gamma.exact().measure() == g.measure);
      CHECK(g.measure >= g.floor);
      CHECK(g.delta.contains(self_difference(g.gamma)));
      CHECK(gamma_tau(6, 2, q(1, 2), 5, g.tau_discrete).exact().measure() == g.measure);
    }
    CHECK(gamma_pigeonhole(6, 2, q(1, 2), 5, 4).measure == q(2, 125));
    CHECK(gamma_pigeonhole(6, 2, q(1, 2), 5, 5).measure == q(4, 625));
  }

  TEST_CASE("pigeonhole preconditions") {
    CHECK_THROWS_AS(gamma_pigeonhole(6, 2, q(1, 4), 5, 2), PreconditionError);
    CHECK_THROWS_AS(gamma_pigeonhole(6, 2, q(1, 2), 5, 10), ResourceLimit);
    GammaResult zero = gamma_pigeonhole(6, 2, q(1, 2), 5, 0);
    CHECK(zero.gamma.exact() == IntervalSet::Exact(q(0), q(1)));
  }

  TEST_CASE("translated construction") {
    const SLVConfig cfg = translated_config();
    const Rational base = q(72, 100) * q(81, 400);
    CHECK(translated_floor(cfg) == base * base);
    GammaResult g = gamma_translated(cfg, 64, 7);
    CHECK(g.measure >= g.floor);
    CHECK(g.gamma.exact().measure() == g.measure);
    CHECK(g.delta.contains(self_difference(g.gamma)));
    CHECK(g.tau.size() == 4);
    for (const auto& t : g.tau) CHECK((t >= 0 && t <= cfg.M));
    GammaResult again = gamma_translated(cfg, 64, 7);
    CHECK(again.gamma.exact() == g.gamma.exact());
  }

  TEST_CASE("translated construction for a single set") {
    SLVConfig c;
    c.m = 2;
    c.eta = q(1, 2);
    c.M = 10;
    c.L = 5;
    c.split_a = {6, 2};
    CHECK(translated_floor(c) == q(9, 40) * q(9, 40));
    GammaResult g = gamma_translated(c, 32, 3);
    CHECK(g.measure >= g.floor);
    CHECK(g.delta.contains(self_difference(g.gamma)));
    CHECK(g.delta.exact() == slv_delta(c).exact());
  }

  TEST_CASE("configuration validation") {
    SLVConfig c = translated_config();
    CHECK_NOTHROW(c.validate());
    SLVConfig bad_eta = c, bad_M = c, bad_t = c;
    bad_eta.eta = 1;
    bad_M.M = 2;  // needs M > 1/t = 2
    bad_t.t = 0;
    CHECK_THROWS_AS(bad_eta.validate(), InvalidInput);
    CHECK_THROWS_AS(bad_M.validate(), InvalidInput);
    CHECK_THROWS_AS(bad_t.validate(), InvalidInput);
  }

  TEST_CASE("floor monotonicity") {
    std::mt19937_64 rng(62);
    std::uniform_int_distribution<int> eta_num(1, 19), m(1, 4), M(3, 30);
    for (int i = 0; i < 100; ++i) {
      SLVConfig c = translated_config();
      c.eta = q(eta_num(rng), 20);
      c.m = m(rng);
      c.M = M(rng);
      SLVConfig up_eta = c, up_M = c, up_m = c;
      up_eta.eta = (c.eta + 1) / 2;
      up_M.M = c.M + 1;
      up_m.m = c.m + 1;
      const Rational f = translated_floor(c);
      CHECK(f > 0);
      CHECK(f < 1);
      CHECK(translated_floor(up_eta) > f);
      CHECK(translated_floor(up_M) > f);
      CHECK(translated_floor(up_m) < f);
    }
  }

  TEST_CASE("verification of a pigeonhole set") {
    SLVConfig c;
    c.m = 3;
    c.eta = q(1, 2);
    c.L = 5;
    c.split_a = {6, 2};
    GammaResult g = gamma_pigeonhole(6, 2, c.eta, 5, 3);
    SLVReport r = verify_slv(g, five(), std::nullopt, c);
    CHECK(r.containment);
    CHECK(r.c > 0);
    CHECK(r.min_product_pass);
    CHECK(r.min_product >= r.product_floor);
    CHECK(r.measure_pass);
    CHECK(r.measure == doctest::Approx(1.0 / 25));
    CHECK(r.samples > 0);
  }

  TEST_CASE("verification reports a small Gamma and rejects a wide one") {
    SLVConfig c;
    c.m = 3;
    c.eta = q(1, 2);
    c.L = 5;
    c.split_a = {6, 2};
    GammaResult small;
    small.gamma = IntervalSet::Exact(q(0), q(1, 1000));
    small.measure = q(1, 1000);
    small.floor = q(1, 64);
    small.delta = slv_delta(c);
    SLVReport r = verify_slv(small, five(), std::nullopt, c);
    CHECK(r.containment);
    CHECK_FALSE(r.measure_pass);

    GammaResult wide = small;
    wide.gamma = IntervalSet::Exact(q(0), q(1, 2));
    wide.measure = q(1, 2);
    CHECK_THROWS_AS(verify_slv(wide, five(), std::nullopt, c), StructuralViolation);
    CHECK_THROWS_AS(verify_slv(small, five(), five(), c), InvalidInput);
  }

  TEST_CASE("bad zeros stay outside Delta_0") {
    for (const auto& s : compatible_splits(five(), 25).splits) {
      CHECK(bad_zeros_avoid_delta(five(), 25, s, q(9, 10)));
      CHECK(bad_zeros_avoid_delta(five(), 25, s, q(1, 2)));
    }
  }
}
