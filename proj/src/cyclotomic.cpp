#include "buffon/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numeric>

#include <Eigen/Dense>

#include "buffon/error.hpp"
#include "buffon/numtheory.hpp"

namespace buffon {

namespace {

std::mutex cache_mutex;
std::map<std::int64_t, IntPolynomial>& cache() {
  static std::map<std::int64_t, IntPolynomial> c;
  return c;
}

IntPolynomial divide_or_throw(const IntPolynomial& a, const IntPolynomial& b, const char* what) {
  auto q = exact_divide(a, b);
  if (!q) throw InternalError(what);
  return *q;
}

std::vector<std::complex<double>> roots(const IntPolynomial& p) {
  const int n = p.degree();
  if (n < 1) return {};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  const double lead = static_cast<double>(p.leading());
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -static_cast<double>(p[static_cast<std::size_t>(i)]) / lead;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<std::complex<double>> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(solver.eigenvalues()(i));
  return out;
}

// Rounds prod (x - r) to an integer polynomial; nullopt if any coefficient is
// not close to an integer.
std::optional<IntPolynomial> round_monic(const std::vector<std::complex<double>>& rs) {
  std::vector<std::complex<double>> c{1.0};
  for (const auto& r : rs) {
    std::vector<std::complex<double>> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  std::vector<std::int64_t> out;
  out.reserve(c.size());
  for (const auto& v : c) {
    double rounded = std::round(v.real());
    if (std::abs(v.real() - rounded) > 1e-6 || std::abs(v.imag()) > 1e-6) return std::nullopt;
    out.push_back(static_cast<std::int64_t>(rounded));
  }
  return IntPolynomial(std::move(out));
}

// Smallest factor of the squarefree polynomial g in Z[x] whose roots include
// every root of g on the unit circle.
IntPolynomial unit_circle_factor(const IntPolynomial& g) {
  auto rs = roots(g);
  std::vector<std::complex<double>> on;
  std::vector<std::vector<std::complex<double>>> off_groups;
  for (const auto& r : rs) {
    if (std::abs(std::abs(r) - 1.0) < kUnitCircleTolerance) {
      on.push_back(r);
    } else if (std::abs(r.imag()) < 1e-10) {
      off_groups.push_back({std::complex<double>(r.real(), 0.0)});
    } else if (r.imag() > 0) {
      off_groups.push_back({r, std::conj(r)});
    }
  }
  if (on.empty()) return IntPolynomial::constant(1);
  const std::size_t k = off_groups.size();
  if (k <= 16) {
    std::vector<std::uint32_t> masks(std::size_t{1} << k);
    std::iota(masks.begin(), masks.end(), 0u);
    std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
      return __builtin_popcount(a) < __builtin_popcount(b);
    });
    for (auto mask : masks) {
      auto chosen = on;
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1u) chosen.insert(chosen.end(), off_groups[i].begin(), off_groups[i].end());
      auto f = round_monic(chosen);
      if (f && divides(*f, g)) return *f;
    }
  }
  return g;
}

}  // namespace

const IntPolynomial& cyclotomic(std::int64_t s) {
  if (s < 1) throw InvalidInput("cyclotomic index must be positive");
  {
    std::lock_guard lock(cache_mutex);
    auto it = cache().find(s);
    if (it != cache().end()) return it->second;
  }
  if (s > 1'000'000) throw ResourceLimit("cyclotomic index too large");
  IntPolynomial p = IntPolynomial::x_pow_minus_one(static_cast<std::size_t>(s));
  for (auto d : divisors(s)) {
    if (d == s) continue;
    p = divide_or_throw(p, cyclotomic(d), "cyclotomic division failed");
  }
  std::lock_guard lock(cache_mutex);
  return cache().emplace(s, std::move(p)).first->second;
}

std::vector<CyclotomicFactor> cyclotomic_divisors(const IntPolynomial& p) {
  if (p.is_zero()) throw InvalidInput("cyclotomic_divisors of the zero polynomial");
  std::vector<CyclotomicFactor> out;
  const std::int64_t deg = p.degree();
  if (deg < 1) return out;
  // totient(s) >= sqrt(s / 2), so totient(s) <= deg forces s <= 2 deg^2.
  const std::int64_t bound = 2 * deg * deg + 2;
  IntPolynomial rest = p;
  for (std::int64_t s = 1; s <= bound; ++s) {
    if (totient(s) > rest.degree()) continue;
    int mult = 0;
    while (rest.degree() >= 1) {
      auto q = exact_divide(rest, cyclotomic(s));
      if (!q) break;
      rest = std::move(*q);
      ++mult;
    }
    if (mult > 0) out.push_back({s, mult});
  }
  return out;
}

FactorSplit factor_split(const IntPolynomial& a, std::int64_t L) {
  if (L < 2) throw InvalidInput("factor_split needs L >= 2");
  if (a.is_zero() || a[0] != 1) throw PreconditionError("factor_split needs A(0) = 1");
  for (auto c : a.coeffs())
    if (c != 0 && c != 1) throw PreconditionError("factor_split needs 0/1 coefficients");

  FactorSplit out;
  out.cyclotomic = cyclotomic_divisors(a);
  IntPolynomial rest = a;
  out.bad = IntPolynomial::constant(1);
  IntPolynomial good_cyc = IntPolynomial::constant(1);
  for (const auto& f : out.cyclotomic) {
    const bool coprime = std::gcd(f.s, L) == 1;
    for (int i = 0; i < f.multiplicity; ++i) {
      rest = divide_or_throw(rest, cyclotomic(f.s), "cyclotomic factor does not divide");
      if (coprime) {
        out.s2_list.push_back(f.s);
        out.bad = out.bad * cyclotomic(f.s);
        out.s_A = lcm_checked(out.s_A, f.s);
      } else {
        out.s1_list.push_back(f.s);
        good_cyc = good_cyc * cyclotomic(f.s);
      }
    }
  }

  out.a3 = IntPolynomial::constant(1);
  if (rest.degree() >= 1) {
    IntPolynomial g = gcd(rest, reciprocal(rest));
    if (g.degree() >= 1) {
      out.a3_heuristic = true;
      IntPolynomial f = unit_circle_factor(squarefree_part(g));
      while (f.degree() >= 1) {
        IntPolynomial h = gcd(f, rest);
        if (h.degree() < 1) break;
        out.a3 = out.a3 * h;
        rest = divide_or_throw(rest, h, "unit-circle factor does not divide");
      }
    }
  }
  // Normalize the sign so that a4(0) = 1 like A itself.
  if (rest[0] < 0) {
    rest = rest * IntPolynomial::constant(-1);
    out.a3 = out.a3 * IntPolynomial::constant(-1);
  }
  out.a4 = std::move(rest);
  out.good = good_cyc * out.a3 * out.a4;

  if (!(out.good * out.bad == a)) throw InternalError("factor_split reassembly mismatch");
  return out;
}

bool is_stacking(const DigitSet& b, std::int64_t L, int j) {
  if (L < 2) throw InvalidInput("is_stacking needs L >= 2");
  if (j < 1) throw InvalidInput("is_stacking needs j >= 1");
  double terms = std::pow(static_cast<double>(b.size()), j);
  if (terms > 1e7) throw ResourceLimit("stacking expansion exceeds 10^7 terms");
  std::vector<std::int64_t> exps{0};
  std::int64_t scale = 1;
  for (int k = 1; k <= j; ++k) {
    if (__builtin_mul_overflow(scale, L, &scale)) throw ResourceLimit("stacking exponent overflow");
    std::vector<std::int64_t> next;
    next.reserve(exps.size() * b.size());
    for (auto e : exps)
      for (auto d : b.digits()) {
        std::int64_t v;
        if (__builtin_mul_overflow(d, scale, &v) || __builtin_add_overflow(v, e, &v))
          throw ResourceLimit("stacking exponent overflow");
        next.push_back(v);
      }
    exps = std::move(next);
  }
  std::sort(exps.begin(), exps.end());
  return std::adjacent_find(exps.begin(), exps.end()) != exps.end();
}

GoodCycConstruction goodcyc_construction(std::int64_t s, std::int64_t L) {
  if (s < 1 || L < 2) throw InvalidInput("goodcyc_construction needs s >= 1, L >= 2");
  if (std::gcd(s, L) == 1) throw PreconditionError("goodcyc_construction needs gcd(s, L) > 1");
  GoodCycConstruction out;
  out.L1 = 1;
  for (auto [p, e] : factorize(s))
    if (L % p == 0) out.L1 *= ipow(p, e);
  out.M = s / out.L1;
  out.a = 1;
  std::int64_t La = L;
  while (La % out.L1 != 0) {
    if (__builtin_mul_overflow(La, L, &La) || La > 1'000'000)
      throw ResourceLimit("L^a exceeds the desk bound");
    ++out.a;
  }
  if (La > 1'000'000) throw ResourceLimit("L^a exceeds the desk bound");
  out.F = cyclotomic(out.L1);
  IntPolynomial full = IntPolynomial::x_pow_minus_one(static_cast<std::size_t>(La));
  full = divide_or_throw(full, cyclotomic(1), "x - 1 does not divide x^n - 1");
  out.G = divide_or_throw(full, out.F, "Phi_{L1} does not divide the geometric sum");
  return out;
}

}  // namespace buffon
