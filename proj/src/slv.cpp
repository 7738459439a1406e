#include "buffon/slv.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "buffon/cyclotomic.hpp"
#include "buffon/error.hpp"
#include "buffon/numtheory.hpp"
#include "buffon/parallel.hpp"

namespace buffon {

namespace {

using Exact = IntervalSet::Exact;
using Piece = BasicInterval<Rational>;

constexpr std::int64_t kMaxPieces = 5'000'000;
constexpr std::int64_t kMaxLeaves = 1'000'000;
constexpr int kDyadicBits = 20;
constexpr int kDenseSamples = 4096;

Rational frac(const Rational& x) { return x - Rational(floor_of(x)); }

// [lo, hi] intersected with off + P Z + [0, w].
Exact periodic_pieces(const Rational& period, const Rational& off, const Rational& width, const Rational& lo,
                      const Rational& hi) {
  mpz_class k0 = floor_of((lo - off - width) / period);
  mpz_class k1 = floor_of((hi - off) / period);
  mpz_class count = k1 - k0 + 1;
  if (count > kMaxPieces) throw ResourceLimit("lattice neighbourhood needs more than 5e6 pieces");
  std::vector<Piece> pieces;
  pieces.reserve(count.get_ui());
  for (mpz_class k = k0; k <= k1; ++k) {
    Rational a = off + Rational(k) * period;
    Rational b = a + width;
    if (b < lo || a > hi) continue;
    pieces.push_back({a < lo ? lo : a, b > hi ? hi : b});
  }
  return Exact::from_sorted(std::move(pieces));
}

void check_eta(const Rational& eta) {
  if (sgn(eta) <= 0 || eta >= 1) throw InvalidInput("eta must lie in (0, 1)");
}

void check_split(Split s) {
  if (s.s1 < 2 || s.s2 < 2) throw InvalidInput("split factors must exceed 1");
}

// Lower bound of |p(e^{2 pi i xi})| on the closure of (1/s1) Z + [-w, w].
double certified_min_on_delta0(const IntPolynomial& p, Split s, const Rational& eta) {
  const double w = to_double(eta / Rational(s.s1 * s.s2));
  double lip = 0;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k)
    lip += std::abs(static_cast<double>(p.coeffs()[k])) * static_cast<double>(k);
  lip *= 2 * std::numbers::pi;
  const double h = 2 * w / kDenseSamples;
  double lowest = std::numeric_limits<double>::infinity();
  for (std::int64_t k = 0; k < s.s1; ++k) {
    const double centre = static_cast<double>(k) / static_cast<double>(s.s1);
    for (int i = 0; i <= kDenseSamples; ++i) {
      const double xi = centre - w + h * i;
      const double v = std::abs(p.eval(std::polar(1.0, 2 * std::numbers::pi * xi)));
      lowest = std::min(lowest, v);
    }
  }
  return std::max(0.0, lowest - lip * h / 2);
}

double abs_at(const IntPolynomial& p, const Rational& xi_mod1) {
  return std::abs(p.eval(std::polar(1.0, 2 * std::numbers::pi * to_double(xi_mod1))));
}

}  // namespace

SplitReport compatible_splits(const DigitSet& a, std::int64_t L) {
  const IntPolynomial poly = generating_polynomial(a);
  const FactorSplit fs = factor_split(poly, L);
  SplitReport out;
  out.s_A = fs.s_A;
  if (fs.s_A == 1) {
    out.trivial = true;
    out.feasible = true;
    return out;
  }
  const auto n = static_cast<std::int64_t>(a.size());
  for (std::int64_t s1 : divisors(fs.s_A)) {
    const std::int64_t s2 = fs.s_A / s1;
    if (s1 < 2 || s2 < 2 || s2 >= n) continue;
    bool ok = true;
    for (std::int64_t q : divisors(s1))
      if (divides(cyclotomic(q), poly)) {
        ok = false;
        break;
      }
    if (ok) out.splits.push_back({s1, s2});
  }
  out.feasible = !out.splits.empty();
  return out;
}

Split default_split(const SplitReport& report) {
  if (report.splits.empty()) throw StructuralViolation("no compatible split of the bad spectrum");
  Split best = report.splits.front();
  for (const auto& s : report.splits)
    if (s.s1 > best.s1 || (s.s1 == best.s1 && s.s2 < best.s2)) best = s;
  return best;
}

IntervalSet delta_set(std::int64_t s1, std::int64_t s2, const Rational& eta, int j, std::int64_t L,
                      const Rational& lo, const Rational& hi) {
  check_eta(eta);
  if (s1 < 1 || s2 < 1) throw InvalidInput("split factors must be positive");
  if (j < 0) throw InvalidInput("level j must be non-negative");
  if (L < 2) throw InvalidInput("L must be at least 2");
  if (hi < lo) throw InvalidInput("empty range");
  const Rational scale = rational_power(L, -j);
  const Rational period = scale / Rational(s1);
  const Rational w = scale * eta / Rational(s1 * s2);
  return periodic_pieces(period, -w, 2 * w, lo, hi);
}

IntervalSet delta_intersection(std::int64_t s1, std::int64_t s2, const Rational& eta, int m, std::int64_t L,
                               const Rational& lo, const Rational& hi) {
  IntervalSet out = Exact(lo, hi);
  for (int j = 0; j < m; ++j) out = intersect(out, delta_set(s1, s2, eta, j, L, lo, hi));
  return out;
}

void SLVConfig::validate() const {
  if (m < 0) throw InvalidInput("m must be non-negative");
  check_eta(eta);
  if (M <= 1) throw InvalidInput("M must exceed 1");
  if (sgn(t) <= 0 || t > 1) throw InvalidInput("t must lie in (0, 1]");
  if (L < 2) throw InvalidInput("L must be at least 2");
  check_split(split_a);
  if (split_b) check_split(*split_b);
  if (split_b && M <= 1 / t) throw InvalidInput("M must exceed 1/t");
}

IntervalSet gamma_tau(std::int64_t s1, std::int64_t s2, const Rational& eta, std::int64_t L,
                      const std::vector<int>& tau, int q) {
  check_eta(eta);
  if (q < 1) throw InvalidInput("shift count q must be positive");
  Exact out(Rational(0), Rational(1));
  for (std::size_t j = 0; j < tau.size() && !out.intervals().empty(); ++j) {
    if (tau[j] < 0 || tau[j] >= q) throw InvalidInput("shift outside {0..q-1}");
    const Rational scale = rational_power(L, -static_cast<int>(j));
    const Rational period = scale / Rational(s1);
    const Rational off = period * make_rational(tau[j], q);
    const Rational w = scale * eta / Rational(s1 * s2);
    out = intersect(out, periodic_pieces(period, off, w, Rational(0), Rational(1)));
  }
  return out;
}

GammaResult gamma_pigeonhole(std::int64_t s1, std::int64_t s2, const Rational& eta, std::int64_t L, int m,
                             int q) {
  check_eta(eta);
  if (s1 < 1 || s2 < 1) throw InvalidInput("split factors must be positive");
  if (L < 2) throw InvalidInput("L must be at least 2");
  if (m < 0) throw InvalidInput("m must be non-negative");
  if (q < 1) throw InvalidInput("shift count q must be positive");
  if (Rational(q) * eta < Rational(s2))
    throw PreconditionError("q eta < s2: the shifted pieces do not cover [0, 1]");
  double leaves = std::pow(static_cast<double>(q), m);
  if (leaves > static_cast<double>(kMaxLeaves)) throw ResourceLimit("q^m exceeds 10^6");

  // levels[j][tau] is the level-j piece family with shift tau.
  std::vector<std::vector<Exact>> levels(m);
  for (int j = 0; j < m; ++j) {
    const Rational scale = rational_power(L, -j);
    const Rational period = scale / Rational(s1);
    const Rational w = scale * eta / Rational(s1 * s2);
    for (int tau = 0; tau < q; ++tau)
      levels[j].push_back(periodic_pieces(period, period * make_rational(tau, q), w, Rational(0), Rational(1)));
  }

  struct Best {
    Rational measure = -1;
    std::vector<int> tau;
    Exact set;
  };

  GammaResult out;
  mpz_class qm;
  mpz_ui_pow_ui(qm.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(m));
  out.floor = Rational(1) / Rational(qm);
  out.delta = delta_intersection(s1, s2, eta, m, L);
  out.trials = static_cast<std::int64_t>(leaves);

  if (m == 0) {
    out.gamma = Exact(Rational(0), Rational(1));
    out.measure = 1;
    return out;
  }

  std::vector<Best> branch(q);
  parallel_for(static_cast<std::size_t>(q), [&](std::size_t t0) {
    Best best;
    std::vector<int> tau(m, 0);
    tau[0] = static_cast<int>(t0);
    std::vector<Exact> prefix(m);
    prefix[0] = levels[0][t0];
    // Iterative depth-first search over tau_1..tau_{m-1}.
    auto dfs = [&](auto&& self, int depth) -> void {
      const Exact& cur = prefix[depth - 1];
      Rational mu = cur.measure();
      if (mu <= best.measure) return;
      if (depth == m) {
        best.measure = mu;
        best.tau = tau;
        best.set = cur;
        return;
      }
      for (int t = 0; t < q; ++t) {
        tau[depth] = t;
        prefix[depth] = intersect(cur, levels[depth][t]);
        self(self, depth + 1);
      }
    };
    dfs(dfs, 1);
    branch[t0] = std::move(best);
  });

  std::size_t win = 0;
  for (std::size_t i = 1; i < branch.size(); ++i)
    if (branch[i].measure > branch[win].measure) win = i;
  out.gamma = branch[win].set;
  out.measure = branch[win].measure;
  out.tau_discrete = branch[win].tau;
  if (out.measure < out.floor) throw InternalError("pigeonhole maximizer below q^{-m}");
  return out;
}

Rational translated_floor(const SLVConfig& cfg) {
  cfg.validate();
  Rational base;
  if (cfg.split_b) {
    base = (cfg.M - 1) * (cfg.M - 1 / cfg.t) / (cfg.M * cfg.M) * cfg.eta * cfg.eta /
           Rational(cfg.split_a.s2 * cfg.split_b->s2);
  } else {
    base = (cfg.M - 1) / cfg.M * cfg.eta / Rational(cfg.split_a.s2);
  }
  Rational out(1);
  for (int i = 0; i < cfg.m; ++i) out *= base;
  return out;
}

IntervalSet slv_delta(const SLVConfig& cfg) {
  cfg.validate();
  IntervalSet d = delta_intersection(cfg.split_a.s1, cfg.split_a.s2, cfg.eta, cfg.m, cfg.L);
  if (cfg.split_b) {
    // t^{-1} Delta_B on [-2, 2] comes from Delta_B on [-2t, 2t].
    IntervalSet db = delta_intersection(cfg.split_b->s1, cfg.split_b->s2, cfg.eta, cfg.m, cfg.L, -2 * cfg.t,
                                        2 * cfg.t);
    d = intersect(d, affine(db, 1 / cfg.t, Rational(0)));
  }
  return d;
}

namespace {

// Level pieces translated by tau, on [0, 1]. `stretch` is 1 for A and 1/t for B.
Exact translated_level(Split s, const Rational& eta, std::int64_t L, int j, const Rational& stretch,
                       const Rational& tau) {
  const Rational scale = stretch * rational_power(L, -j);
  const Rational period = scale / Rational(s.s1);
  const Rational w = scale * eta / Rational(s.s1 * s.s2);
  Rational off = -tau;
  off -= Rational(floor_of(off / period)) * period;
  return periodic_pieces(period, off, w, Rational(0), Rational(1));
}

Exact translated_gamma(const SLVConfig& cfg, const std::vector<Rational>& tau) {
  Exact out(Rational(0), Rational(1));
  for (int j = 0; j < cfg.m && !out.intervals().empty(); ++j)
    out = intersect(out, translated_level(cfg.split_a, cfg.eta, cfg.L, j, Rational(1), tau[j]));
  if (cfg.split_b)
    for (int j = 0; j < cfg.m && !out.intervals().empty(); ++j)
      out = intersect(out, translated_level(*cfg.split_b, cfg.eta, cfg.L, j, 1 / cfg.t, tau[cfg.m + j]));
  return out;
}

}  // namespace

GammaResult gamma_translated(const SLVConfig& cfg, std::int64_t trials, std::uint64_t seed, int max_batches) {
  cfg.validate();
  if (trials < 1) throw InvalidInput("trials must be positive");
  if (max_batches < 1) throw InvalidInput("max_batches must be positive");

  GammaResult out;
  out.floor = translated_floor(cfg);
  out.delta = slv_delta(cfg);
  if (cfg.m == 0) {
    out.gamma = Exact(Rational(0), Rational(1));
    out.measure = 1;
    return out;
  }

  const std::size_t dims = static_cast<std::size_t>(cfg.m) * (cfg.split_b ? 2 : 1);
  const mpz_class denom = mpz_class(1) << kDyadicBits;
  const mpz_class top_z = floor_of(cfg.M * Rational(denom));
  if (!top_z.fits_slong_p()) throw InvalidInput("M is too large");
  const auto top = static_cast<std::int64_t>(top_z.get_si());

  Rational best_measure = -1;
  std::vector<Rational> best_tau;
  for (int batch = 0; batch < max_batches; ++batch) {
    std::vector<Rational> measures(static_cast<std::size_t>(trials));
    std::vector<std::vector<Rational>> taus(static_cast<std::size_t>(trials));
    parallel_for(static_cast<std::size_t>(trials), [&](std::size_t i) {
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(batch), static_cast<std::uint32_t>(i)};
      std::mt19937_64 rng(seq);
      std::uniform_int_distribution<std::int64_t> pick(0, top);
      std::vector<Rational> tau(dims);
      for (auto& x : tau) {
        x = Rational(mpz_class(static_cast<long>(pick(rng))), denom);
        x.canonicalize();
      }
      measures[i] = translated_gamma(cfg, tau).measure();
      taus[i] = std::move(tau);
    });
    out.trials += trials;
    for (std::size_t i = 0; i < measures.size(); ++i)
      if (measures[i] > best_measure) {
        best_measure = measures[i];
        best_tau = taus[i];
      }
    if (best_measure >= out.floor) break;
  }
  if (best_measure < out.floor) {
    std::ostringstream msg;
    msg << "best measure " << to_double(best_measure) << " below floor " << to_double(out.floor) << " after "
        << out.trials << " trials";
    throw SamplingBudgetExceeded(msg.str());
  }
  out.gamma = translated_gamma(cfg, best_tau);
  out.measure = best_measure;
  out.tau = std::move(best_tau);
  return out;
}

SLVReport verify_slv(const GammaResult& g, const DigitSet& a, const std::optional<DigitSet>& b,
                     const SLVConfig& cfg, int sample_count, double c_star) {
  cfg.validate();
  if (g.gamma.empty()) throw EmptySetError("gamma is empty");
  if (sample_count < 1) throw InvalidInput("sample_count must be positive");
  if (b.has_value() != cfg.split_b.has_value()) throw InvalidInput("B and its split must be given together");
  if (g.gamma.mode() != NumericMode::exact || g.delta.mode() != NumericMode::exact)
    throw ModeMismatch("SLV verification needs exact sets");

  SLVReport rep;
  const IntervalSet diff = self_difference(g.gamma);
  rep.containment = g.delta.contains(diff);
  if (!rep.containment) throw StructuralViolation("gamma - gamma is not contained in delta");

  const IntPolynomial bad_a = factor_split(generating_polynomial(a), cfg.L).bad;
  std::optional<IntPolynomial> bad_b;
  rep.c = certified_min_on_delta0(bad_a, cfg.split_a, cfg.eta);
  if (b) {
    bad_b = factor_split(generating_polynomial(*b), cfg.L).bad;
    rep.c = std::min(rep.c, certified_min_on_delta0(*bad_b, *cfg.split_b, cfg.eta));
  }
  rep.product_floor = std::pow(rep.c, (b ? 2 : 1) * cfg.m);

  // Sample points at evenly spaced measure quantiles of Gamma - Gamma.
  const Exact& d = diff.exact();
  const Rational total = d.measure();
  rep.min_product = std::numeric_limits<double>::infinity();
  rep.samples = sample_count;
  std::size_t piece = 0;
  Rational before = 0;
  for (int i = 0; i < sample_count; ++i) {
    const Rational target = total * make_rational(2 * i + 1, 2 * sample_count);
    while (piece + 1 < d.intervals().size() && before + d.intervals()[piece].length() < target) {
      before += d.intervals()[piece].length();
      ++piece;
    }
    const auto& iv = d.intervals()[piece];
    Rational xi = iv.lo + (target - before);
    if (xi > iv.hi) xi = iv.hi;
    double prod = 1;
    Rational ra = frac(xi);
    Rational rb = frac(cfg.t * xi);
    for (int k = 0; k < cfg.m; ++k) {
      prod *= abs_at(bad_a, ra);
      if (bad_b) prod *= abs_at(*bad_b, rb);
      ra = frac(Rational(cfg.L) * ra);
      rb = frac(Rational(cfg.L) * rb);
    }
    if (prod < rep.min_product) {
      rep.min_product = prod;
      rep.min_xi = to_double(xi);
    }
  }
  rep.min_product_pass = rep.min_product >= rep.product_floor;

  rep.measure = to_double(g.measure);
  rep.c_star = c_star;
  const double logL = std::log(static_cast<double>(cfg.L));
  rep.measure_target = std::exp((c_star - 1) * cfg.m * logL);
  rep.measure_pass = rep.measure >= rep.measure_target;
  rep.epsilon = cfg.m > 0 && sgn(g.floor) > 0
                    ? 1 + std::log(to_double(g.floor)) / (cfg.m * logL)
                    : 1;
  return rep;
}

bool bad_zeros_avoid_delta(const DigitSet& a, std::int64_t L, Split split, const Rational& eta) {
  check_eta(eta);
  const FactorSplit fs = factor_split(generating_polynomial(a), L);
  const Rational w = eta / Rational(split.s1 * split.s2);
  for (std::int64_t s : fs.s2_list)
    for (std::int64_t k = 0; k < s; ++k) {
      if (std::gcd(k, s) != 1) continue;
      // Distance from k/s to the nearest point of (1/s1) Z.
      const Rational x = make_rational(k, s) * Rational(split.s1);
      const Rational f = frac(x);
      const Rational dist = (f < Rational(1, 2) ? f : 1 - f) / Rational(split.s1);
      if (dist <= w) return false;
    }
  return true;
}

}  // namespace buffon
