#include "buffon/riesz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <numeric>
#include <random>

#include "buffon/cyclotomic.hpp"
#include "buffon/error.hpp"
#include "buffon/lamprey.hpp"
#include "buffon/parallel.hpp"

namespace buffon {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr std::size_t kMaxDense = 4096;
// Quadrature sums are split into this many blocks regardless of the worker
// count, which keeps the floating-point summation order fixed.
constexpr std::size_t kBlocks = 64;

std::complex<double> cis_frac(double x) {
  double f = x - std::floor(x);
  return {std::cos(kTwoPi * f), std::sin(kTwoPi * f)};
}

double powi(std::int64_t L, int k) { return std::pow(static_cast<double>(L), k); }

ExpPoly digit_factor(const DigitSet& a, double dilation) {
  std::vector<double> f;
  std::vector<std::complex<double>> c;
  const double w = 1.0 / static_cast<double>(a.size());
  for (auto d : a.digits()) {
    f.push_back(static_cast<double>(d));
    c.emplace_back(w, 0.0);
  }
  return ExpPoly(std::move(f), std::move(c), dilation);
}

struct SimpsonPair {
  double fine = 0;    // sum with step h weights
  double coarse = 0;  // sum with step 2h weights, even indices only
};

// Simpson sums of |P|^2 on [a, b] with n (a multiple of 4) subintervals.
SimpsonPair simpson(const TrigSystem& sys, RieszRange range, double a, double b, std::int64_t n) {
  const double h = (b - a) / static_cast<double>(n);
  const std::size_t blocks = std::min<std::size_t>(kBlocks, static_cast<std::size_t>(n + 1));
  std::vector<SimpsonPair> partial(blocks);
  parallel_for(blocks, [&](std::size_t blk) {
    const std::int64_t total = n + 1;
    const std::int64_t lo = total * static_cast<std::int64_t>(blk) / static_cast<std::int64_t>(blocks);
    const std::int64_t hi = total * static_cast<std::int64_t>(blk + 1) / static_cast<std::int64_t>(blocks);
    SimpsonPair s;
    for (std::int64_t i = lo; i < hi; ++i) {
      const double x = (i == n) ? b : a + h * static_cast<double>(i);
      const double v = std::norm(riesz_product(sys, range, x));
      const double wf = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
      s.fine += wf * v;
      if (i % 2 == 0) {
        const std::int64_t j = i / 2, half = n / 2;
        const double wc = (j == 0 || j == half) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
        s.coarse += wc * v;
      }
    }
    partial[blk] = s;
  });
  SimpsonPair out;
  for (const auto& p : partial) {
    out.fine += p.fine;
    out.coarse += p.coarse;
  }
  out.fine *= h / 3.0;
  out.coarse *= 2.0 * h / 3.0;
  return out;
}

double resolve_step(const TrigSystem& sys, RieszRange range, double step) {
  const double max_step = 0.1 * powi(sys.L(), -range.hi);
  if (step < 0) throw InvalidInput("quadrature step must be positive");
  if (step == 0) return max_step;
  if (step > max_step * (1 + 1e-12))
    throw ResolutionError("quadrature step exceeds L^{-n}/10 and does not resolve the integrand");
  return step;
}

void check_range(RieszRange range) {
  if (range.lo < 0 || range.hi < range.lo) throw InvalidInput("Riesz range needs 0 <= lo <= hi");
}

}  // namespace

ExpPoly::ExpPoly(std::vector<double> freqs, std::vector<std::complex<double>> coeffs, double dilation)
    : freqs_(std::move(freqs)), coeffs_(std::move(coeffs)), dilation_(dilation) {
  if (freqs_.size() != coeffs_.size()) throw InvalidInput("frequency and coefficient counts differ");
  bool integral = !freqs_.empty();
  double max_f = 0;
  for (double f : freqs_) {
    if (f < 0 || f != std::floor(f)) integral = false;
    max_f = std::max(max_f, f);
  }
  if (integral && max_f < static_cast<double>(kMaxDense)) {
    dense_.assign(static_cast<std::size_t>(max_f) + 1, 0.0);
    for (std::size_t j = 0; j < freqs_.size(); ++j) dense_[static_cast<std::size_t>(freqs_[j])] += coeffs_[j];
  }
}

std::complex<double> ExpPoly::operator()(double xi) const {
  const double x = dilation_ * xi;
  if (!dense_.empty()) {
    const std::complex<double> z = cis_frac(x);
    std::complex<double> acc = 0;
    for (auto it = dense_.rbegin(); it != dense_.rend(); ++it) acc = acc * z + *it;
    return acc;
  }
  std::complex<double> acc = 0;
  for (std::size_t j = 0; j < freqs_.size(); ++j) acc += coeffs_[j] * cis_frac(freqs_[j] * x);
  return acc;
}

double ExpPoly::lipschitz() const {
  double s = 0;
  for (std::size_t j = 0; j < freqs_.size(); ++j) s += std::abs(coeffs_[j]) * std::abs(freqs_[j]);
  return kTwoPi * std::abs(dilation_) * s;
}

double ExpPoly::sup_bound() const {
  double s = 0;
  for (const auto& c : coeffs_) s += std::abs(c);
  return s;
}

TrigSystem TrigSystem::product(const DigitSet& a, const DigitSet& b, double t, std::int64_t L) {
  TrigSystem s;
  s.L_ = L > 0 ? L : static_cast<std::int64_t>(a.size() * b.size());
  if (s.L_ < 2) throw InvalidInput("L must be at least 2");
  s.factors_.push_back(digit_factor(a, 1.0));
  s.factors_.push_back(digit_factor(b, t));
  return s;
}

TrigSystem TrigSystem::single(const DigitSet& a, std::int64_t L) {
  if (L < 2) throw InvalidInput("L must be at least 2");
  TrigSystem s;
  s.L_ = L;
  s.factors_.push_back(digit_factor(a, 1.0));
  return s;
}

TrigSystem TrigSystem::from_polynomial(const IntPolynomial& p, std::int64_t L, bool normalize) {
  if (L < 2) throw InvalidInput("L must be at least 2");
  if (p.is_zero()) throw InvalidInput("zero polynomial has no trigonometric system");
  double scale = 1.0;
  if (normalize) {
    std::int64_t at_one = p.eval(std::int64_t{1});
    if (at_one == 0) throw InvalidInput("cannot normalize a polynomial vanishing at 1");
    scale = 1.0 / static_cast<double>(at_one);
  }
  std::vector<double> f;
  std::vector<std::complex<double>> c;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (p.coeffs()[k] == 0) continue;
    f.push_back(static_cast<double>(k));
    c.emplace_back(scale * static_cast<double>(p.coeffs()[k]), 0.0);
  }
  TrigSystem s;
  s.L_ = L;
  s.factors_.emplace_back(std::move(f), std::move(c));
  return s;
}

TrigSystem TrigSystem::self_similar(const SelfSimilarSystem& sys, double theta) {
  const double cx = std::cos(theta), cy = std::sin(theta);
  const double w = 1.0 / static_cast<double>(sys.L());
  std::vector<double> f;
  std::vector<std::complex<double>> c;
  for (const auto& z : sys.digits()) {
    f.push_back(cx * z.x.get_d() + cy * z.y.get_d());
    c.emplace_back(w, 0.0);
  }
  TrigSystem s;
  s.L_ = sys.L();
  s.factors_.emplace_back(std::move(f), std::move(c));
  return s;
}

TrigSystem TrigSystem::from_factors(std::vector<ExpPoly> factors, std::int64_t L) {
  if (L < 2) throw InvalidInput("L must be at least 2");
  if (factors.empty()) throw InvalidInput("trigonometric system needs at least one factor");
  TrigSystem s;
  s.L_ = L;
  s.factors_ = std::move(factors);
  return s;
}

std::complex<double> TrigSystem::phi(double xi) const {
  std::complex<double> v = 1;
  for (const auto& f : factors_) v *= f(xi);
  return v;
}

double TrigSystem::sup_bound() const {
  double s = 1;
  for (const auto& f : factors_) s *= f.sup_bound();
  return s;
}

double TrigSystem::lipschitz() const {
  // Product rule with every other factor bounded by its supremum.
  double total = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    double term = factors_[i].lipschitz();
    for (std::size_t j = 0; j < factors_.size(); ++j)
      if (j != i) term *= factors_[j].sup_bound();
    total += term;
  }
  return total;
}

std::complex<double> riesz_product(const TrigSystem& sys, RieszRange range, double xi) {
  check_range(range);
  std::complex<double> v = 1;
  double scale = powi(sys.L(), range.lo);
  for (int k = range.lo; k < range.hi; ++k) {
    v *= sys.phi(scale * xi);
    scale *= static_cast<double>(sys.L());
  }
  return v;
}

Quadrature integrate_sq(const TrigSystem& sys, RieszRange range, double a, double b, double step) {
  check_range(range);
  if (!(a <= b)) throw InvalidInput("integration interval needs a <= b");
  const double h = resolve_step(sys, range, step);
  Quadrature q;
  if (a == b) return q;
  double cells = std::ceil((b - a) / h);
  if (cells > 2e9) throw ResourceLimit("quadrature needs more than 2e9 points");
  std::int64_t n = std::max<std::int64_t>(4, static_cast<std::int64_t>(cells));
  n = (n + 3) / 4 * 4;
  SimpsonPair s = simpson(sys, range, a, b, n);
  q.value = s.fine;
  q.error_indicator = std::abs(s.fine - s.coarse);
  q.points = n + 1;
  return q;
}

Quadrature integrate_sq(const TrigSystem& sys, RieszRange range, const IntervalSet& region, double step) {
  Quadrature total;
  const IntervalSet::Float pieces = region.to_float();
  for (const auto& piece : pieces.intervals()) {
    Quadrature q = integrate_sq(sys, range, piece.lo, piece.hi, step);
    total.value += q.value;
    total.error_indicator += q.error_indicator;
    total.points += q.points;
  }
  return total;
}

SalemCheck salem_lower_bound_check(const TrigSystem& sys, RieszRange range, const IntervalSet& gamma) {
  check_range(range);
  if (gamma.empty() || !(gamma.measure() > 0)) throw EmptySetError("Salem check needs a set of positive measure");
  auto g = gamma.to_float();
  if (g.lower() < -kMergeEpsilon || g.upper() > 1 + kMergeEpsilon)
    throw PreconditionError("Salem check needs Gamma inside [0, 1]");
  SalemCheck out;
  out.lhs = integrate_sq(sys, range, self_difference(gamma)).value;
  out.rhs = powi(sys.L(), range.lo - range.hi) * gamma.measure();
  out.pass = out.lhs >= out.rhs / 4;
  return out;
}

PoissonCheck poisson_check(const TrigSystem& sys, int m, int n, double K) {
  if (m < 0 || n < m) throw InvalidInput("poisson_check needs 0 <= m <= n");
  PoissonCheck out;
  out.integral = integrate_sq(sys, {m, n}, 0.0, powi(sys.L(), -m)).value;
  out.bound = 2.0 * K * powi(sys.L(), -n);
  out.within = out.integral <= out.bound;
  return out;
}

void SSVSpec::validate() const {
  if (!(c1 > 0)) throw InvalidInput("SSV constant c1 must be positive");
  if (!(c2 > 0) || !(c3 > c2)) throw InvalidInput("SSV constants need c3 > c2 > 0");
}

double SSVSpec::psi(int m, std::int64_t L) const {
  if (m < 1) throw InvalidInput("SSV order m must be at least 1");
  const double md = m;
  double e = 0;
  switch (psi_kind) {
    case PsiKind::linear: e = c1 * md; break;
    case PsiKind::log: e = c1 * md * std::log(md); break;
    case PsiKind::square: e = c1 * md * md; break;
  }
  return std::pow(static_cast<double>(L), -e);
}

std::string to_string(PsiKind kind) {
  switch (kind) {
    case PsiKind::linear: return "linear";
    case PsiKind::log: return "log";
    case PsiKind::square: return "square";
  }
  return "linear";
}

PsiKind parse_psi_kind(const std::string& text) {
  if (text == "linear") return PsiKind::linear;
  if (text == "log") return PsiKind::log;
  if (text == "square") return PsiKind::square;
  throw InvalidInput("unknown psi kind '" + text + "' (expected linear, log or square)");
}

IntervalSet ssv_set(const TrigSystem& sys, int m, double threshold, double resolution) {
  if (m < 1) throw InvalidInput("ssv_set needs m >= 1");
  if (!(resolution > 0)) throw InvalidInput("ssv_set needs a positive resolution");
  if (resolution > powi(sys.L(), -m)) throw ResolutionError("ssv_set resolution must be at most L^{-m}");
  const RieszRange range{1, m + 1};
  const double sup = sys.sup_bound();
  if (threshold >= std::pow(sup, m)) return IntervalSet(IntervalSet::Float(0.0, 1.0));

  double lip = 0;
  for (int k = 1; k <= m; ++k) lip += powi(sys.L(), k);
  lip *= sys.lipschitz() * std::pow(sup, m - 1);

  std::size_t roots = 1;
  while (roots < 4096 && 1.0 / static_cast<double>(roots) > resolution) roots *= 2;
  std::vector<std::vector<BasicInterval<double>>> found(roots);
  parallel_for(roots, [&](std::size_t r) {
    std::vector<std::pair<double, double>> stack{{static_cast<double>(r) / roots, static_cast<double>(r + 1) / roots}};
    auto& out = found[r];
    while (!stack.empty()) {
      auto [a, b] = stack.back();
      stack.pop_back();
      const double half = 0.5 * (b - a);
      const double v = std::abs(riesz_product(sys, range, a + half));
      if (v - lip * half > threshold) continue;
      if (v + lip * half <= threshold || b - a <= resolution) {
        if (!out.empty() && out.back().hi >= a) {
          out.back().hi = b;
        } else {
          out.push_back({a, b});
        }
        continue;
      }
      // Right half first so the left half is processed next and output stays sorted.
      stack.push_back({a + half, b});
      stack.push_back({a, a + half});
    }
  });
  std::vector<BasicInterval<double>> all;
  for (auto& f : found) all.insert(all.end(), f.begin(), f.end());
  return IntervalSet(IntervalSet::Float::from_sorted(std::move(all)));
}

IntervalSet ssv_set(const TrigSystem& sys, int m, const SSVSpec& spec, double resolution) {
  spec.validate();
  return ssv_set(sys, m, spec.psi(m, sys.L()), resolution);
}

CoverStats ssv_cover_stats(const IntervalSet& ssv, std::int64_t L, int m, double c3) {
  if (m < 1) throw InvalidInput("ssv_cover_stats needs m >= 1");
  if (!(c3 > 0)) throw InvalidInput("ssv_cover_stats needs c3 > 0");
  CoverStats out;
  if (ssv.empty()) return out;
  out.count = cover_count(ssv, std::pow(static_cast<double>(L), -c3 * m));
  out.c2_estimate = std::log(static_cast<double>(out.count)) / (m * std::log(static_cast<double>(L)));
  return out;
}

DoubleAngleReport double_angle_check(double alpha, int m, int samples, std::uint64_t seed) {
  if (m < 0 || m > 12) throw InvalidInput("double_angle_check needs 0 <= m <= 12");
  if (samples < 1) throw InvalidInput("double_angle_check needs at least one sample");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  DoubleAngleReport out;
  out.min_inequality_ratio = std::numeric_limits<double>::infinity();
  const double four_m = std::pow(4.0, m);
  for (int i = 0; i < samples; ++i) {
    const double x = alpha * (1.0 - unif(rng));
    double all = 1, even = 1, p2 = 1;
    for (int k = 0; k <= 2 * m; ++k, p2 *= 2) {
      const double c = std::cos(p2 * x);
      all *= c;
      if (k % 2 == 0) even *= c;
    }
    const double lhs = 2 * four_m * std::sin(x) * all;
    const double rhs = std::sin(2 * four_m * x);
    out.max_identity_error = std::max(out.max_identity_error, std::abs(lhs - rhs));
    const double s = std::sin(x);
    if (s != 0) {
      const double bound = 0.5 / four_m * std::abs(rhs / s);
      if (std::abs(even) < bound * (1 - 1e-9)) out.inequality_holds = false;
      if (bound > 0) out.min_inequality_ratio = std::min(out.min_inequality_ratio, std::abs(even) / bound);
    }
    ++out.samples;
  }
  return out;
}

PseudofactorizationReport pseudofactorization_ratio(double x1, double x2, double x3, double x4) {
  constexpr double kZero = 1e-12;
  const double x[4] = {x1, x2, x3, x4};
  std::complex<double> s = 0;
  for (double v : x) s += std::polar(1.0, v);
  PseudofactorizationReport out;
  out.lhs = std::abs(s);
  out.rhs = 1;
  for (int j = 0; j < 4; ++j)
    for (int k = j + 1; k < 4; ++k) out.rhs *= std::abs(std::cos((x[j] - x[k]) / 2));
  const bool lhs_zero = out.lhs < kZero, rhs_zero = out.rhs < kZero;
  if (rhs_zero && lhs_zero) {
    out.indeterminate = true;
    out.ratio = std::numeric_limits<double>::quiet_NaN();
  } else if (rhs_zero) {
    out.ratio = std::numeric_limits<double>::infinity();
  } else {
    out.ratio = out.lhs / out.rhs;
  }
  return out;
}

SSVFailureReport ssv_failure_demo(const DigitSet& a, std::int64_t L, int m, double beta, int samples) {
  if (m < 1) throw InvalidInput("ssv_failure_demo needs m >= 1");
  if (!(beta > 0)) throw InvalidInput("ssv_failure_demo needs beta > 0");
  if (samples < 2) throw InvalidInput("ssv_failure_demo needs at least two samples");
  const FactorSplit split = factor_split(generating_polynomial(a), L);
  if (split.s2_list.empty()) throw PreconditionError("digit set has no cyclotomic factor coprime to L");
  if (std::gcd(split.s_A, L) != 1) throw PreconditionError("ssv_failure_demo needs gcd(s_A, L) = 1");

  SSVFailureReport out;
  out.s_star = *std::max_element(split.s2_list.begin(), split.s2_list.end());
  out.xi0 = 1.0 / static_cast<double>(out.s_star);
  out.zero_exponents = m;
  out.zeros_exact = true;
  const RootSum base = from_digit_set(a, out.s_star);
  std::int64_t power = 1;
  for (int k = 0; k <= m; ++k) {
    if (!sigma_is_zero(power_map(base, power))) out.zeros_exact = false;
    power = power * (L % out.s_star) % out.s_star;
  }

  const int root_m = static_cast<int>(std::floor(std::sqrt(static_cast<double>(m))));
  out.interval_length = std::pow(static_cast<double>(L), -beta * root_m);
  out.interval_hi = out.xi0;
  out.interval_lo = out.xi0 - out.interval_length;
  const TrigSystem sys = TrigSystem::single(a, L);
  for (int i = 0; i < samples; ++i) {
    const double xi = out.interval_lo + out.interval_length * i / (samples - 1);
    out.max_partial = std::max(out.max_partial, std::abs(riesz_product(sys, {0, root_m + 1}, xi)));
    out.max_full = std::max(out.max_full, std::abs(riesz_product(sys, {0, m + 1}, xi)));
  }
  out.partial_bound = 1;
  for (int k = 0; k <= root_m; ++k)
    out.partial_bound *= std::min(1.0, sys.lipschitz() * powi(L, k) * out.interval_length);
  out.threshold = powi(L, -m);
  out.in_ssv = out.max_full <= out.threshold;
  out.certified = out.partial_bound <= out.threshold;
  return out;
}

}  // namespace buffon
