#include "buffon/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "buffon/cyclotomic.hpp"
#include "buffon/error.hpp"
#include "buffon/geometry.hpp"
#include "buffon/intervals.hpp"
#include "buffon/lamprey.hpp"
#include "buffon/numtheory.hpp"
#include "buffon/polynomial.hpp"
#include "buffon/riesz.hpp"
#include "buffon/slv.hpp"

namespace buffon {

namespace {

using Exact = IntervalSet::Exact;
using Outcome = std::pair<bool, std::string>;

CheckResult timed(const std::string& name, double budget, const std::function<Outcome()>& body) {
  CheckResult r;
  r.name = name;
  r.budget = budget;
  const auto start = std::chrono::steady_clock::now();
  try {
    auto [pass, detail] = body();
    r.pass = pass;
    r.detail = std::move(detail);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget > 0 && r.seconds > budget) {
    r.pass = false;
    std::ostringstream s;
    s << r.detail << "; runtime " << r.seconds << " s exceeds " << budget << " s";
    r.detail = s.str();
  }
  return r;
}

std::string fmt(double x) {
  std::ostringstream s;
  s.imbue(std::locale::classic());
  s.precision(6);
  s << x;
  return s.str();
}

const DigitSet& example_a() {
  static const DigitSet a({0, 3, 4, 8, 9});
  return a;
}

Exact random_exact_set(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 5), point(-24, 24);
  std::vector<BasicInterval<Rational>> pieces;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    int a = point(rng), b = point(rng);
    if (a > b) std::swap(a, b);
    pieces.push_back({make_rational(a, 12), make_rational(b, 12)});
  }
  return Exact(std::move(pieces));
}

// ---------------------------------------------------------------- intervals

std::vector<CheckResult> intervals_suite(std::uint64_t seed) {
  std::vector<CheckResult> out;
  out.push_back(timed("intervals.inclusion_exclusion", 0, [&]() -> Outcome {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 300; ++i) {
      Exact s = random_exact_set(rng), t = random_exact_set(rng);
      if (unite(s, t).measure() + intersect(s, t).measure() != s.measure() + t.measure())
        return {false, "failed at sample " + std::to_string(i)};
    }
    return {true, "300 exact pairs"};
  }));
  out.push_back(timed("intervals.self_difference", 0, [&]() -> Outcome {
    std::mt19937_64 rng(seed + 1);
    for (int i = 0; i < 300; ++i) {
      Exact s = random_exact_set(rng);
      if (s.empty()) continue;
      Exact d = self_difference(s);
      Exact neg = affine(d, Rational(-1), Rational(0));
      if (!(d == neg) || !d.contains(Rational(0)) || d.measure() < s.measure())
        return {false, "failed at sample " + std::to_string(i)};
    }
    return {true, "symmetric, contains 0, |S - S| >= |S|"};
  }));
  out.push_back(timed("intervals.affine_measure", 0, [&]() -> Outcome {
    std::mt19937_64 rng(seed + 2);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    for (int i = 0; i < 300; ++i) {
      Exact s = random_exact_set(rng);
      int a = num(rng);
      if (a == 0) a = 1;
      Rational scale = make_rational(a, den(rng)), shift = make_rational(num(rng), den(rng));
      if (affine(s, scale, shift).measure() != abs(scale) * s.measure())
        return {false, "failed at sample " + std::to_string(i)};
    }
    return {true, "|aS + b| = |a||S|"};
  }));
  out.push_back(timed("intervals.float_matches_exact", 0, [&]() -> Outcome {
    std::mt19937_64 rng(seed + 3);
    for (int i = 0; i < 300; ++i) {
      Exact s = random_exact_set(rng), t = random_exact_set(rng);
      IntervalSet fs = IntervalSet(s).to_float(), ft = IntervalSet(t).to_float();
      double e1 = std::abs(unite(fs, ft).measure() - unite(s, t).measure().get_d());
      double e2 = std::abs(intersect(fs, ft).measure() - intersect(s, t).measure().get_d());
      if (e1 > 1e-9 || e2 > 1e-9) return {false, "failed at sample " + std::to_string(i)};
    }
    return {true, "float and exact measures agree to 1e-9"};
  }));
  return out;
}

// -------------------------------------------------------------- polynomials

Outcome phi12_check() {
  const IntPolynomial g = generating_polynomial(example_a());
  if (!exact_divide(g, cyclotomic(12))) return {false, "Phi_12 does not divide"};
  // Every s with totient(s) <= 9 satisfies s <= 2 * 9^2.
  std::vector<std::int64_t> found;
  for (std::int64_t s = 1; s <= 162; ++s)
    if (totient(s) <= 9 && divides(cyclotomic(s), g)) found.push_back(s);
  if (found != std::vector<std::int64_t>{12}) return {false, "unexpected cyclotomic divisors"};
  auto cd = cyclotomic_divisors(g);
  if (cd.size() != 1 || cd[0].s != 12 || cd[0].multiplicity != 1)
    return {false, "cyclotomic_divisors disagrees with the direct search"};
  return {true, "Phi_12 is the only cyclotomic divisor"};
}

std::vector<CheckResult> polynomials_suite(std::uint64_t seed) {
  std::vector<CheckResult> out;
  out.push_back(timed("polynomials.cyclotomic_product", 0, []() -> Outcome {
    for (std::size_t n = 1; n <= 60; ++n) {
      IntPolynomial p = IntPolynomial::constant(1);
      for (auto d : divisors(static_cast<std::int64_t>(n))) p = p * cyclotomic(d);
      if (!(p == IntPolynomial::x_pow_minus_one(n))) return {false, "fails for n = " + std::to_string(n)};
    }
    return {true, "x^n - 1 = prod Phi_d for n <= 60"};
  }));
  out.push_back(timed("polynomials.phi12", 0, phi12_check));
  out.push_back(timed("polynomials.factor_split_reassembly", 0, [&]() -> Outcome {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size(2, 6), digit(1, 15), pick(0, 2);
    const std::int64_t Ls[] = {4, 6, 10};
    for (int i = 0; i < 150; ++i) {
      std::vector<std::int64_t> d{0};
      const int n = size(rng);
      while (static_cast<int>(d.size()) < n) {
        std::int64_t x = digit(rng);
        if (std::find(d.begin(), d.end(), x) == d.end()) d.push_back(x);
      }
      const DigitSet a(d);
      const std::int64_t L = Ls[pick(rng)];
      const IntPolynomial g = generating_polynomial(a);
      const FactorSplit f = factor_split(g, L);
      IntPolynomial bad = IntPolynomial::constant(1);
      for (auto s : f.s2_list) {
        if (std::gcd(s, L) != 1) return {false, "bad index shares a factor with L"};
        bad = bad * cyclotomic(s);
      }
      for (auto s : f.s1_list)
        if (std::gcd(s, L) == 1) return {false, "good index coprime to L"};
      if (!(bad == f.bad) || !(f.good * f.bad == g)) return {false, "reassembly failed"};
    }
    return {true, "150 random digit sets"};
  }));
  out.push_back(timed("polynomials.compatible_splits", 0, []() -> Outcome {
    SplitReport r = compatible_splits(example_a(), 25);
    std::vector<Split> want{{3, 4}, {4, 3}, {6, 2}};
    if (r.s_A != 12 || r.splits != want) return {false, "unexpected splits"};
    if (!(default_split(r) == Split{6, 2})) return {false, "unexpected default split"};
    SplitReport t = compatible_splits(DigitSet({0, 1}), 4);
    if (!t.trivial || !t.feasible || !t.splits.empty()) return {false, "{0,1} should be trivial"};
    return {true, "{0,3,4,8,9}: (3,4) (4,3) (6,2)"};
  }));
  return out;
}

// ------------------------------------------------------------------ lamprey

Outcome lamprey_acceptance() {
  const RootSum l = lamprey_5_3();
  if (!sigma_is_zero(l)) return {false, "L_5:3 does not vanish"};
  if (!is_irreducible(l)) return {false, "L_5:3 is reducible"};
  const SixPointSweep sw = six_point_sweep(30);
  std::ostringstream d;
  d << sw.vanishing << " vanishing of " << sw.subsets << " subsets: " << sw.triangles << " triangles, "
    << sw.segments << " segments, " << sw.l53 << " L_5:3, " << sw.none << " none";
  return {sw.none == 0 && sw.vanishing > 0, d.str()};
}

std::vector<CheckResult> lamprey_suite(std::uint64_t seed) {
  std::vector<CheckResult> out;
  out.push_back(timed("lamprey.l53_and_sweep", 60, lamprey_acceptance));
  out.push_back(timed("lamprey.decompose_recombine", 0, [&]() -> Outcome {
    std::mt19937_64 rng(seed);
    const std::int64_t primes[] = {2, 3, 5};
    std::uniform_int_distribution<int> pick(0, 2), count(1, 4), weight(1, 3), rot(0, 29);
    for (int i = 0; i < 100; ++i) {
      RootSum t;
      const int n = count(rng);
      for (int k = 0; k < n; ++k)
        t = t + weight(rng) * polygon(primes[pick(rng)], Angle::make(rot(rng), 30));
      if (!sigma_is_zero(t)) return {false, "polygon sum does not vanish"};
      if (!(recombine(decompose_prime_polygons(t)) == t)) return {false, "recombination differs"};
    }
    return {true, "100 random polygon sums"};
  }));
  out.push_back(timed("lamprey.mann_bound", 0, []() -> Outcome {
    int checked = 0;
    for (const auto& d : std::vector<std::vector<std::int64_t>>{{0, 3, 4, 8, 9}, {0, 1, 2}, {0, 2, 4, 6}, {0, 1, 5, 6}}) {
      const DigitSet a(d);
      for (const auto& f : cyclotomic_divisors(generating_polynomial(a))) {
        MannResult r = mann_bound_check(a, f.s);
        ++checked;
        if (!r.pass) return {false, "fails for s = " + std::to_string(f.s)};
      }
    }
    return {true, std::to_string(checked) + " (A, s) pairs"};
  }));
  return out;
}

// ----------------------------------------------------------------- geometry

std::vector<CheckResult> geometry_suite(std::uint64_t) {
  std::vector<CheckResult> out;
  const SelfSimilarSystem sys = four_corner().planar();
  out.push_back(timed("geometry.unit_square_favard", 0, [&]() -> Outcome {
    FavardEstimate f = favard(sys, 0, 512);
    double err = std::abs(f.estimate - 4 / std::numbers::pi);
    return {err < 1e-5, "|Fav(S_0) - 4/pi| = " + fmt(err)};
  }));
  out.push_back(timed("geometry.counting_integral", 0, [&]() -> Outcome {
    for (const auto& t : {make_rational(1, 3), make_rational(1, 2), make_rational(-2, 5)})
      for (int n = 1; n <= 4; ++n) {
        CountingFunction f = counting_function(sys, n, Direction::from_slope(t), NumericMode::exact);
        const auto& step = std::get<StepFunction<Rational>>(f.f);
        if (step.integral() != 1 + abs(t)) return {false, "axis integral differs from 1 + |t|"};
      }
    return {true, "sum of projected lengths is exact"};
  }));
  out.push_back(timed("geometry.shadow_exact_vs_float", 0, [&]() -> Outcome {
    for (int n = 1; n <= 4; ++n) {
      Direction dir = Direction::from_slope(make_rational(1, 3));
      double e = shadow(sys, n, dir, NumericMode::exact).measure;
      double f = shadow(sys, n, dir, NumericMode::floating).measure;
      if (std::abs(e - f) > 1e-9) return {false, "modes disagree at n = " + std::to_string(n)};
    }
    return {true, "agree to 1e-9"};
  }));
  out.push_back(timed("geometry.favard_decreasing", 0, [&]() -> Outcome {
    double prev = favard(sys, 1, 256).estimate;
    for (int n = 2; n <= 5; ++n) {
      double cur = favard(sys, n, 256).estimate;
      if (!(cur < prev)) return {false, "not decreasing at N = " + std::to_string(n)};
      prev = cur;
    }
    return {true, "N = 1..5"};
  }));
  return out;
}

// -------------------------------------------------------------------- riesz

Outcome parseval_check(const DigitSet& a, std::int64_t L, int max_gap) {
  const TrigSystem sys = TrigSystem::single(a, L);
  double worst = 0;
  for (int d = 1; d <= max_gap; ++d) {
    const double want = std::pow(static_cast<double>(a.size()), -d);
    const double got = integrate_sq(sys, {0, d}, 0.0, 1.0).value;
    worst = std::max(worst, std::abs(got - want) / want);
  }
  return {worst <= 1e-6, "max relative error " + fmt(worst)};
}

Outcome double_angle_all(std::uint64_t seed) {
  double worst = 0;
  bool holds = true;
  for (int m = 1; m <= 10; ++m) {
    DoubleAngleReport r = double_angle_check(2 * std::numbers::pi, m, 1000, seed + m);
    worst = std::max(worst, r.max_identity_error);
    holds = holds && r.inequality_holds;
  }
  return {worst < 1e-9 && holds, "max identity error " + fmt(worst) + (holds ? "; inequality holds" : "; inequality fails")};
}

std::vector<CheckResult> riesz_suite(std::uint64_t seed) {
  std::vector<CheckResult> out;
  out.push_back(timed("riesz.parseval_small", 0, []() { return parseval_check(DigitSet({0, 1}), 4, 4); }));
  out.push_back(timed("riesz.double_angle", 0, [&]() { return double_angle_all(seed); }));
  out.push_back(timed("riesz.ssv_superset", 0, [&]() -> Outcome {
    const TrigSystem sys = TrigSystem::single(example_a(), 5);
    const int m = 4;
    const double threshold = std::pow(5.0, -m);
    IntervalSet s = ssv_set(sys, m, threshold, 1e-6);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0, 1);
    int inside = 0;
    for (int i = 0; i < 20000; ++i) {
      double xi = u(rng);
      if (std::abs(riesz_product(sys, {1, m + 1}, xi)) > threshold) continue;
      ++inside;
      if (!s.contains(IntervalSet(IntervalSet::Float(xi, xi))))
        return {false, "small value at " + fmt(xi) + " not covered"};
    }
    return {true, std::to_string(inside) + " sampled small values covered"};
  }));
  return out;
}

// ---------------------------------------------------------------------- slv

Outcome pigeonhole_acceptance() {
  const Rational eta(1, 2);
  std::ostringstream d;
  for (int m = 1; m <= 5; ++m) {
    GammaResult g = gamma_pigeonhole(6, 2, eta, 5, m);
    Rational floor = 1;
    for (int i = 0; i < m; ++i) floor /= 4;
    if (g.measure < floor) return {false, "measure below 4^-m at m = " + std::to_string(m)};
    if (!g.delta.contains(self_difference(g.gamma))) return {false, "containment fails at m = " + std::to_string(m)};
    d << (m > 1 ? ", " : "") << "m=" << m << ": " << to_string(g.measure);
  }
  return {true, d.str()};
}

SLVConfig acceptance_translated_config() {
  SLVConfig cfg;
  cfg.m = 2;
  cfg.eta = Rational(9, 10);
  cfg.M = 10;
  cfg.t = Rational(1, 2);
  cfg.L = 25;
  cfg.split_a = {6, 2};
  cfg.split_b = Split{6, 2};
  return cfg;
}

Outcome translated_acceptance() {
  const SLVConfig cfg = acceptance_translated_config();
  const Rational base = make_rational(72, 100) * make_rational(81, 400);
  if (translated_floor(cfg) != base * base) return {false, "floor formula differs"};
  GammaResult g = gamma_translated(cfg, 64, 7);
  if (g.measure < g.floor) return {false, "measure below floor"};
  if (!g.delta.contains(self_difference(g.gamma))) return {false, "containment fails"};
  return {true, "measure " + fmt(to_double(g.measure)) + " >= floor " + fmt(to_double(g.floor)) + " after " +
                    std::to_string(g.trials) + " trials"};
}

std::vector<CheckResult> slv_suite(std::uint64_t seed) {
  std::vector<CheckResult> out;
  const Rational eta(1, 2);
  out.push_back(timed("slv.pigeonhole_tiling", 0, [&]() -> Outcome {
    Rational total = 0;
    for (int tau = 0; tau < 4; ++tau) total += gamma_tau(6, 2, eta, 5, {tau}).exact().measure();
    return {total == 1, "sum over tau of |Gamma_tau| = " + to_string(total)};
  }));
  out.push_back(timed("slv.pigeonhole_floor", 0, []() -> Outcome {
    for (int m = 1; m <= 3; ++m) {
      GammaResult g = gamma_pigeonhole(6, 2, Rational(1, 2), 5, m);
      if (g.measure < g.floor || !g.delta.contains(self_difference(g.gamma)))
        return {false, "fails at m = " + std::to_string(m)};
    }
    return {true, "m = 1..3"};
  }));
  out.push_back(timed("slv.bad_zeros_avoid_delta", 0, []() -> Outcome {
    for (const auto& s : compatible_splits(example_a(), 25).splits)
      if (!bad_zeros_avoid_delta(example_a(), 25, s, Rational(9, 10)))
        return {false, "zero inside Delta for split (" + std::to_string(s.s1) + "," + std::to_string(s.s2) + ")"};
    return {true, "all compatible splits"};
  }));
  out.push_back(timed("slv.floor_monotone", 0, []() -> Outcome {
    SLVConfig c = acceptance_translated_config();
    const Rational f0 = translated_floor(c);
    SLVConfig up_eta = c, up_M = c, up_m = c;
    up_eta.eta = Rational(19, 20);
    up_M.M = 12;
    up_m.m = 3;
    bool ok = translated_floor(up_eta) > f0 && translated_floor(up_M) > f0 && translated_floor(up_m) < f0;
    return {ok, "increasing in eta and M, decreasing in m"};
  }));
  out.push_back(timed("slv.translated_single_set", 0, [&]() -> Outcome {
    SLVConfig c;
    c.m = 2;
    c.eta = Rational(1, 2);
    c.M = 10;
    c.L = 5;
    c.split_a = {6, 2};
    GammaResult g = gamma_translated(c, 32, seed);
    bool ok = g.measure >= g.floor && g.delta.contains(self_difference(g.gamma));
    return {ok, "measure " + fmt(to_double(g.measure)) + ", floor " + fmt(to_double(g.floor))};
  }));
  out.push_back(timed("slv.verify_pigeonhole", 0, []() -> Outcome {
    SLVConfig c;
    c.m = 3;
    c.eta = Rational(1, 2);
    c.L = 5;
    c.split_a = {6, 2};
    GammaResult g = gamma_pigeonhole(6, 2, c.eta, 5, 3);
    SLVReport r = verify_slv(g, example_a(), std::nullopt, c);
    bool ok = r.containment && r.min_product_pass && r.measure_pass;
    return {ok, "min product " + fmt(r.min_product) + " vs " + fmt(r.product_floor)};
  }));
  return out;
}

// --------------------------------------------------------------- acceptance

Outcome parasitic_sweep() {
  int sets = 0, nontrivial = 0;
  std::vector<std::int64_t> d(5, 0);
  for (std::int64_t a = 1; a <= 11; ++a)
    for (std::int64_t b = a + 1; b <= 11; ++b)
      for (std::int64_t c = b + 1; c <= 11; ++c)
        for (std::int64_t e = c + 1; e <= 11; ++e) {
          const DigitSet A({0, a, b, c, e});
          const IntPolynomial g = generating_polynomial(A);
          ParasiticResult r = parasitic_structure_check(A);
          // Independent oracle: roots of unity located numerically.
          std::vector<std::int64_t> oracle;
          for (std::int64_t s = 2; s <= 200; ++s) {
            if (std::gcd(s, std::int64_t{5}) != 1) continue;
            if (std::abs(g.eval(std::polar(1.0, 2 * std::numbers::pi / static_cast<double>(s)))) < 1e-9)
              oracle.push_back(s);
          }
          if (oracle != r.s_values) {
            std::ostringstream msg;
            msg << "oracle disagrees for A = {0," << a << "," << b << "," << c << "," << e << "}";
            return {false, msg.str()};
          }
          ++sets;
          if (!r.trivial) ++nontrivial;
        }
  return {true, std::to_string(sets) + " sets, " + std::to_string(nontrivial) + " with coprime cyclotomic factors"};
}

Outcome parseval_acceptance() {
  std::ostringstream d;
  bool ok = true;
  const std::pair<std::vector<std::int64_t>, std::int64_t> cases[] = {{{0, 1}, 4}, {{0, 1, 2}, 6}, {{0, 3, 4, 8, 9}, 10}};
  for (const auto& [digits, L] : cases) {
    auto [pass, detail] = parseval_check(DigitSet(digits), L, 6);
    ok = ok && pass;
    d << "L=" << L << ": " << detail << "; ";
  }
  return {ok, d.str()};
}

Outcome ssv_failure_acceptance() {
  const RootSum base = from_digit_set(example_a(), 12);
  std::int64_t power = 1;
  for (int k = 0; k <= 6; ++k) {
    if (!sigma_is_zero(power_map(base, power))) return {false, "phi_A(5^k/12) != 0 at k = " + std::to_string(k)};
    power = power * 5 % 12;
  }
  SSVFailureReport r = ssv_failure_demo(example_a(), 5, 16, 2.0);
  const double want = std::pow(5.0, -8);
  bool ok = r.s_star == 12 && r.zeros_exact && r.interval_length >= want * (1 - 1e-12) && r.certified && r.in_ssv;
  return {ok, "interval [" + fmt(r.interval_lo) + ", " + fmt(r.interval_hi) + "], sup " + fmt(r.max_full) +
                  ", certified bound " + fmt(r.partial_bound) + " <= 5^-16 = " + fmt(r.threshold)};
}

Outcome favard_regression() {
  const SelfSimilarSystem sys = four_corner().planar();
  std::ostringstream d;
  double prev = 0;
  bool ok = true;
  for (int n = 1; n <= 8; ++n) {
    double f = favard(sys, n, 2048).estimate;
    if (n > 1 && !(f < prev)) ok = false;
    if (n * f < 0.05) ok = false;
    d << (n > 1 ? ", " : "") << "N=" << n << ": " << fmt(f);
    prev = f;
  }
  return {ok, d.str()};
}

Outcome salem_acceptance() {
  const ProductSystem fc = four_corner();
  const int m = 2;
  std::vector<std::pair<std::string, IntervalSet>> gammas{
      {"[0,1]", Exact(Rational(0), Rational(1))},
      {"[0,1/2]", Exact(Rational(0), Rational(1, 2))},
      {"pigeonhole", gamma_pigeonhole(6, 2, Rational(1, 2), 5, 3).gamma}};
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& t : {Rational(1, 3), Rational(1, 2), Rational(2, 3)}) {
    const TrigSystem sys = TrigSystem::product(fc.A, fc.B, to_double(t));
    for (int gap = 4; gap <= 6; ++gap)
      for (const auto& [name, g] : gammas) {
        SalemCheck c = salem_lower_bound_check(sys, {m, m + gap}, g);
        worst = std::min(worst, c.lhs / c.rhs);
        if (!c.pass)
          return {false, "fails for t = " + to_string(t) + ", n - m = " + std::to_string(gap) + ", Gamma = " + name};
      }
  }
  return {true, "27 cases; smallest lhs/rhs " + fmt(worst)};
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"intervals", "polynomials", "lamprey", "geometry",
                                              "riesz",     "slv",         "acceptance", "all"};
  return names;
}

CheckResult run_acceptance(int criterion) {
  switch (criterion) {
    case 1: return timed("acceptance.1.cyclotomic_exactness", 1, phi12_check);
    case 2: return timed("acceptance.2.lamprey_suite", 60, lamprey_acceptance);
    case 3: return timed("acceptance.3.parasitic_sweep", 120, parasitic_sweep);
    case 4: return timed("acceptance.4.parseval_oracle", 30, parseval_acceptance);
    case 5: return timed("acceptance.5.gamma_pigeonhole", 30, pigeonhole_acceptance);
    case 6: return timed("acceptance.6.translated_floor", 60, translated_acceptance);
    case 7: return timed("acceptance.7.ssv_failure", 30, ssv_failure_acceptance);
    case 8: return timed("acceptance.8.double_angle", 5, [] { return double_angle_all(20240601); });
    case 9: return timed("acceptance.9.favard_regression", 600, favard_regression);
    case 10: return timed("acceptance.10.salem_bound", 60, salem_acceptance);
    default: throw InvalidInput("acceptance criteria are numbered 1..10");
  }
}

std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed) {
  static const std::map<std::string, std::function<std::vector<CheckResult>(std::uint64_t)>> modules{
      {"intervals", intervals_suite}, {"polynomials", polynomials_suite}, {"lamprey", lamprey_suite},
      {"geometry", geometry_suite},   {"riesz", riesz_suite},             {"slv", slv_suite}};
  if (suite == "acceptance") {
    std::vector<CheckResult> out;
    for (int k = 1; k <= kAcceptanceCount; ++k) out.push_back(run_acceptance(k));
    return out;
  }
  if (suite == "all") {
    std::vector<CheckResult> out;
    for (const auto& name : suite_names()) {
      if (name == "all") continue;
      auto part = run_suite(name, seed);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  auto it = modules.find(suite);
  if (it == modules.end()) throw InvalidInput("unknown suite \"" + suite + "\"");
  return it->second(seed);
}

}  // namespace buffon
