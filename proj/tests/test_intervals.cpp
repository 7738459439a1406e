#include <doctest.h>

#include <random>

#include "buffon/error.hpp"
#include "buffon/intervals.hpp"

using namespace buffon;
using Exact = IntervalSet::Exact;
using Float = IntervalSet::Float;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

// Sets with endpoints on the grid (1/12) Z inside [-2, 2].
Exact random_grid_set(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 5), point(-24, 24);
  std::vector<BasicInterval<Rational>> pieces;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    int a = point(rng), b = point(rng);
    if (a > b) std::swap(a, b);
    pieces.push_back({q(a, 12), q(b, 12)});
  }
  return Exact(std::move(pieces));
}

// Oracle: count grid cells of width 1/24 whose midpoint lies in the set.
Rational grid_measure(const Exact& s) {
  long hits = 0;
  for (int k = -48; k < 48; ++k)
    if (s.contains(q(2 * k + 1, 48))) ++hits;
  return q(hits, 24);
}

}  // namespace

TEST_SUITE("intervals") {
  TEST_CASE("canonical form merges touching and overlapping pieces") {
    Exact s({{q(2), q(3)}, {q(0), q(1)}, {q(1), q(3, 2)}});
    REQUIRE(s.size() == 2);
    CHECK(s.intervals()[0].lo == 0);
    CHECK(s.intervals()[0].hi == q(3, 2));
    CHECK(s.measure() == q(5, 2));
    CHECK(s.lower() == 0);
    CHECK(s.upper() == 3);
  }

  TEST_CASE("lo > hi is rejected") { CHECK_THROWS_AS(Exact(q(1), q(0)), InvalidInput); }

  TEST_CASE("float mode merges gaps below the tolerance") {
    Float s({{0.0, 1.0}, {1.0 + 1e-13, 2.0}});
    CHECK(s.size() == 1);
    Float t({{0.0, 1.0}, {1.0 + 1e-6, 2.0}});
    CHECK(t.size() == 2);
  }

  TEST_CASE("union and intersection") {
    Exact a(q(0), q(2)), b({{q(1), q(3)}, {q(5), q(6)}});
    CHECK(unite(a, b) == Exact({{q(0), q(3)}, {q(5), q(6)}}));
    CHECK(intersect(a, b) == Exact(q(1), q(2)));
    CHECK(intersect(a, Exact(q(3), q(4))).empty());
  }

  TEST_CASE("self difference") {
    CHECK(self_difference(Exact(q(0), q(1))) == Exact(q(-1), q(1)));
    Exact two({{q(0), q(1)}, {q(3), q(4)}});
    CHECK(self_difference(two) == Exact({{q(-4), q(-2)}, {q(-1), q(1)}, {q(2), q(4)}}));
    CHECK_THROWS_AS(self_difference(Exact()), EmptySetError);
  }

  TEST_CASE("affine maps") {
    Exact s({{q(0), q(1)}, {q(2), q(3)}});
    CHECK(affine(s, q(-2), q(1)) == Exact({{q(-5), q(-3)}, {q(-1), q(1)}}));
    CHECK_THROWS_AS(affine(s, q(0), q(1)), DegenerateScale);
  }

  TEST_CASE("cover counts") {
    CHECK(cover_count(Exact(q(0), q(1)), q(1, 4)) == 4);
    CHECK(cover_count(Exact({{q(0), q(1, 10)}, {q(5), q(51, 10)}}), q(1, 4)) == 2);
    CHECK(cover_count(Float(0.0, 1.0), 0.3) == 4);
  }

  TEST_CASE("runtime sets refuse mixed modes") {
    IntervalSet e = Exact(q(0), q(1));
    IntervalSet f = Float(0.0, 1.0);
    CHECK_THROWS_AS(unite(e, f), ModeMismatch);
    CHECK_THROWS_AS(intersect(e, f), ModeMismatch);
    CHECK(unite(e, e).mode() == NumericMode::exact);
    CHECK(e.to_float() == Float(0.0, 1.0));
    CHECK(mode_name(NumericMode::floating) == "float");
  }

  TEST_CASE("containment is tolerance aware in float mode") {
    Float s(0.0, 1.0);
    CHECK(s.contains(Float(0.0, 1.0 + 1e-13)));
    CHECK_FALSE(s.contains(Float(0.0, 1.1)));
    Exact e(q(0), q(1));
    CHECK_FALSE(e.contains(Exact(q(0), q(1) + q(1, 1000000))));
  }

  TEST_CASE("measures agree with a grid oracle") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
      Exact s = random_grid_set(rng), t = random_grid_set(rng);
      CHECK(s.measure() == grid_measure(s));
      CHECK(unite(s, t).measure() == grid_measure(unite(s, t)));
      CHECK(intersect(s, t).measure() == grid_measure(intersect(s, t)));
    }
  }

  TEST_CASE("lattice identities") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 200; ++i) {
      Exact a = random_grid_set(rng), b = random_grid_set(rng), c = random_grid_set(rng);
      CHECK(unite(a, b) == unite(b, a));
      CHECK(intersect(a, b) == intersect(b, a));
      CHECK(intersect(a, unite(b, c)) == unite(intersect(a, b), intersect(a, c)));
      CHECK(unite(a, b).measure() + intersect(a, b).measure() == a.measure() + b.measure());
    }
  }

  TEST_CASE("self difference properties") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
      Exact s = random_grid_set(rng);
      if (s.empty()) continue;
      Exact d = self_difference(s);
      CHECK(d == affine(d, q(-1), q(0)));
      CHECK(d.contains(q(0)));
      CHECK(d.measure() >= s.measure());
      CHECK(d.upper() == s.upper() - s.lower());
    }
  }

  TEST_CASE("float operations track exact ones") {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 200; ++i) {
      Exact s = random_grid_set(rng), t = random_grid_set(rng);
      IntervalSet fs = IntervalSet(s).to_float(), ft = IntervalSet(t).to_float();
      CHECK(unite(fs, ft).measure() == doctest::Approx(unite(s, t).measure().get_d()).epsilon(1e-12));
      if (!s.empty())
        CHECK(self_difference(fs).measure() == doctest::Approx(self_difference(s).measure().get_d()).epsilon(1e-12));
    }
  }
}
