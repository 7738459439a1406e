#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "buffon/cyclotomic.hpp"
#include "buffon/error.hpp"
#include "buffon/integer_linear.hpp"
#include "buffon/numtheory.hpp"
#include "buffon/polynomial.hpp"
#include "buffon/slv.hpp"

using namespace buffon;

namespace {

IntPolynomial P(std::vector<std::int64_t> c) { return IntPolynomial(std::move(c)); }

std::complex<double> root(std::int64_t k, std::int64_t s) {
  return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(s));
}

DigitSet random_digits(std::mt19937_64& rng, int max_size, int max_digit) {
  std::uniform_int_distribution<int> size(2, max_size), digit(1, max_digit);
  std::vector<std::int64_t> d{0};
  const int n = size(rng);
  while (static_cast<int>(d.size()) < n) {
    std::int64_t x = digit(rng);
    if (std::find(d.begin(), d.end(), x) == d.end()) d.push_back(x);
  }
  return DigitSet(d);
}

}  // namespace

TEST_SUITE("polynomials") {
  TEST_CASE("number theory helpers") {
    CHECK(totient(12) == 4);
    CHECK(totient(1) == 1);
    CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
    CHECK(prime_divisors(60) == std::vector<std::int64_t>{2, 3, 5});
    CHECK(valuation(48, 2) == 4);
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(91));
    CHECK(ipow(5, 3) == 125);
    CHECK_THROWS_AS(ipow(10, 30), ResourceLimit);
  }

  TEST_CASE("polynomial arithmetic") {
    IntPolynomial a = P({-1, 0, 1}), b = P({1, 1});
    CHECK(a.degree() == 2);
    CHECK(IntPolynomial().degree() == -1);
    CHECK(a * b == P({-1, -1, 1, 1}));
    CHECK(exact_divide(a, b) == P({-1, 1}));
    CHECK_FALSE(exact_divide(a, P({2, 1})).has_value());
    CHECK(gcd(a, P({1, 2, 1})) == P({1, 1}));
    CHECK(reciprocal(P({1, 2, 3})) == P({3, 2, 1}));
    CHECK(dilate(P({1, 1}), 3) == P({1, 0, 0, 1}));
    CHECK(derivative(P({5, 3, 2})) == P({3, 4}));
    CHECK(squarefree_part(P({1, 2, 1})) == P({1, 1}));
    CHECK(a.eval(std::int64_t{3}) == 8);
    CHECK(to_string(P({1, 0, 0, 1})) == "1 + x^3");
  }

  TEST_CASE("digit sets validate their input") {
    CHECK(DigitSet({4, 0, 3}).digits() == std::vector<std::int64_t>{0, 3, 4});
    CHECK_THROWS_WITH_AS(DigitSet({1, 2}), "digit set must contain 0", InvalidInput);
    CHECK_THROWS_AS(DigitSet({0, -1}), InvalidInput);
    CHECK_THROWS_AS(DigitSet({0, 1, 1}), InvalidInput);
    CHECK_THROWS_AS(DigitSet({0}), InvalidInput);
    CHECK(generating_polynomial(DigitSet({0, 3, 4, 8, 9})) == P({1, 0, 0, 1, 1, 0, 0, 0, 1, 1}));
  }

  TEST_CASE("known cyclotomic polynomials") {
    CHECK(cyclotomic(1) == P({-1, 1}));
    CHECK(cyclotomic(2) == P({1, 1}));
    CHECK(cyclotomic(12) == P({1, 0, -1, 0, 1}));
    CHECK(cyclotomic(5) == P({1, 1, 1, 1, 1}));
    CHECK(cyclotomic(105)[7] == -2);
  }

  TEST_CASE("cyclotomic degrees and roots") {
    for (std::int64_t s = 1; s <= 80; ++s) {
      const IntPolynomial& p = cyclotomic(s);
      CHECK(p.degree() == totient(s));
      for (std::int64_t k = 1; k <= s; ++k)
        if (std::gcd(k, s) == 1) CHECK(std::abs(p.eval(root(k, s))) < 1e-7);
    }
  }

  TEST_CASE("x^n - 1 is the product of Phi_d over d | n") {
    for (std::size_t n = 1; n <= 48; ++n) {
      IntPolynomial p = IntPolynomial::constant(1);
      for (auto d : divisors(static_cast<std::int64_t>(n))) p = p * cyclotomic(d);
      CHECK(p == IntPolynomial::x_pow_minus_one(n));
    }
  }

  TEST_CASE("cyclotomic divisors of the five-digit example") {
    const IntPolynomial g = generating_polynomial(DigitSet({0, 3, 4, 8, 9}));
    auto cd = cyclotomic_divisors(g);
    REQUIRE(cd.size() == 1);
    CHECK(cd[0].s == 12);
    CHECK(cd[0].multiplicity == 1);
  }

  TEST_CASE("cyclotomic divisors match a numeric root oracle") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 60; ++i) {
      const DigitSet a = random_digits(rng, 7, 20);
      const IntPolynomial g = generating_polynomial(a);
      std::vector<std::int64_t> oracle;
      for (std::int64_t s = 2; s <= 2 * 20 * 20 + 2; ++s)
        if (totient(s) <= g.degree() && std::abs(g.eval(root(1, s))) < 1e-9) oracle.push_back(s);
      std::vector<std::int64_t> got;
      for (const auto& f : cyclotomic_divisors(g)) got.push_back(f.s);
      CHECK(got == oracle);
    }
  }

  TEST_CASE("factor split of the five-digit example") {
    const IntPolynomial g = generating_polynomial(DigitSet({0, 3, 4, 8, 9}));
    FactorSplit coprime = factor_split(g, 25);
    CHECK(coprime.s2_list == std::vector<std::int64_t>{12});
    CHECK(coprime.s1_list.empty());
    CHECK(coprime.bad == cyclotomic(12));
    CHECK(coprime.s_A == 12);
    CHECK(coprime.good * coprime.bad == g);
    FactorSplit shared = factor_split(g, 10);
    CHECK(shared.s1_list == std::vector<std::int64_t>{12});
    CHECK(shared.bad.is_one());
    CHECK(shared.s_A == 1);
  }

  TEST_CASE("factor split of the four-corner digits") {
    FactorSplit f = factor_split(generating_polynomial(DigitSet({0, 1})), 4);
    CHECK(f.s1_list == std::vector<std::int64_t>{2});
    CHECK(f.bad.is_one());
  }

  TEST_CASE("factor split reassembles") {
    std::mt19937_64 rng(22);
    const std::int64_t Ls[] = {4, 6, 10, 25};
    std::uniform_int_distribution<int> pick(0, 3);
    for (int i = 0; i < 80; ++i) {
      const DigitSet a = random_digits(rng, 6, 15);
      const std::int64_t L = Ls[pick(rng)];
      const IntPolynomial g = generating_polynomial(a);
      FactorSplit f = factor_split(g, L);
      IntPolynomial rebuilt = f.a3 * f.a4;
      for (auto s : f.s1_list) rebuilt = rebuilt * cyclotomic(s);
      for (auto s : f.s2_list) rebuilt = rebuilt * cyclotomic(s);
      CHECK(rebuilt == g);
      for (auto s : f.s1_list) CHECK(std::gcd(s, L) != 1);
      for (auto s : f.s2_list) CHECK(std::gcd(s, L) == 1);
    }
  }

  TEST_CASE("factor split rejects non-digit polynomials") {
    CHECK_THROWS_AS(factor_split(P({2, 1}), 4), InvalidInput);
    CHECK_THROWS_AS(factor_split(P({0, 1, 1}), 4), InvalidInput);
  }

  TEST_CASE("compatible splits") {
    SplitReport r = compatible_splits(DigitSet({0, 3, 4, 8, 9}), 25);
    CHECK(r.s_A == 12);
    CHECK(r.splits == std::vector<Split>{{3, 4}, {4, 3}, {6, 2}});
    CHECK(default_split(r) == Split{6, 2});

    SplitReport trivial = compatible_splits(DigitSet({0, 1}), 4);
    CHECK(trivial.trivial);
    CHECK(trivial.feasible);
    CHECK(trivial.splits.empty());

    // Phi_3 | 1 + x + x^2 and gcd(3, 4) = 1, but no s2 < 3 divides 3 with s1 > 1.
    SplitReport prime = compatible_splits(DigitSet({0, 1, 2}), 4);
    CHECK(prime.s_A == 3);
    CHECK_FALSE(prime.trivial);
    CHECK_FALSE(prime.feasible);
    CHECK_THROWS_AS(default_split(prime), StructuralViolation);
  }

  TEST_CASE("stacking") {
    CHECK_FALSE(is_stacking(DigitSet({0, 1}), 4, 4));
    CHECK(is_stacking(DigitSet({0, 1, 2}), 2, 2));
  }

  TEST_CASE("good cyclotomic construction") {
    GoodCycConstruction c = goodcyc_construction(12, 10);
    CHECK(c.L1 == 4);
    CHECK(c.M == 3);
    CHECK(c.a == 2);
    CHECK(c.F == cyclotomic(4));
    CHECK(c.F * c.G * P({-1, 1}) == IntPolynomial::x_pow_minus_one(100));
    CHECK(divides(cyclotomic(12), dilate(c.F, static_cast<std::size_t>(c.M))));
    CHECK_THROWS_AS(goodcyc_construction(3, 10), PreconditionError);
  }

  TEST_CASE("integer linear systems") {
    IntMatrix a{{mpz_class(2), mpz_class(3)}, {mpz_class(4), mpz_class(1)}};
    auto sol = solve_integer(a, {mpz_class(7), mpz_class(9)});
    REQUIRE(sol.has_value());
    CHECK(sol->x[0] * 2 + sol->x[1] * 3 == 7);
    CHECK(sol->x[0] * 4 + sol->x[1] == 9);
    CHECK_FALSE(solve_integer({{mpz_class(2)}}, {mpz_class(1)}).has_value());

    IntMatrix k{{mpz_class(1), mpz_class(1), mpz_class(1)}};
    auto ks = solve_integer(k, {mpz_class(3)});
    REQUIRE(ks.has_value());
    CHECK(ks->kernel.size() == 2);
    for (const auto& v : ks->kernel) CHECK(v[0] + v[1] + v[2] == 0);
  }
}
