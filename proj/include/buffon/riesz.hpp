#pragma once

// Trigonometric polynomials, Riesz products and their sets of small values.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "buffon/geometry.hpp"
#include "buffon/intervals.hpp"
#include "buffon/polynomial.hpp"

namespace buffon {

/// sum_j c_j exp(2 pi i lambda_j dilation xi). Integer frequencies in a small
/// range are evaluated by Horner's rule on exp(2 pi i frac(dilation xi)).
class ExpPoly {
 public:
  ExpPoly(std::vector<double> freqs, std::vector<std::complex<double>> coeffs, double dilation = 1.0);

  std::complex<double> operator()(double xi) const;
  /// Upper bound on |d/dxi|.
  double lipschitz() const;
  /// Upper bound on |value|.
  double sup_bound() const;

 private:
  std::vector<double> freqs_;
  std::vector<std::complex<double>> coeffs_;
  double dilation_;
  std::vector<std::complex<double>> dense_;  // non-empty on the Horner path
};

/// phi(xi) = product of factors; the Riesz products dilate it by powers of L.
class TrigSystem {
 public:
  /// phi_t(xi) = phi_A(xi) phi_B(t xi); L defaults to |A| |B|.
  static TrigSystem product(const DigitSet& a, const DigitSet& b, double t, std::int64_t L = 0);
  /// phi_A alone, dilated by L.
  static TrigSystem single(const DigitSet& a, std::int64_t L);
  /// p(exp(2 pi i xi)), divided by p(1) when normalize is set.
  static TrigSystem from_polynomial(const IntPolynomial& p, std::int64_t L, bool normalize = true);
  /// (1/L) sum_j exp(2 pi i proj_theta(z_j) xi).
  static TrigSystem self_similar(const SelfSimilarSystem& sys, double theta);
  /// Arbitrary factors, for example a pure cosine.
  static TrigSystem from_factors(std::vector<ExpPoly> factors, std::int64_t L);

  std::complex<double> phi(double xi) const;
  std::int64_t L() const { return L_; }
  double lipschitz() const;
  double sup_bound() const;

 private:
  std::vector<ExpPoly> factors_;
  std::int64_t L_ = 2;
};

/// Exponents [lo, hi) of the product prod_k phi(L^k xi).
struct RieszRange {
  int lo = 0;
  int hi = 0;
};

std::complex<double> riesz_product(const TrigSystem& sys, RieszRange range, double xi);

struct Quadrature {
  double value = 0;
  /// |S(h) - S(2h)| for the composite Simpson sums.
  double error_indicator = 0;
  std::int64_t points = 0;
};

/// Composite Simpson integral of |riesz_product|^2 over [a, b]. step = 0 picks
/// L^{-hi} / 10; larger steps are rejected.
Quadrature integrate_sq(const TrigSystem& sys, RieszRange range, double a, double b, double step = 0);
Quadrature integrate_sq(const TrigSystem& sys, RieszRange range, const IntervalSet& region, double step = 0);

struct SalemCheck {
  double lhs = 0;  // integral of |P_1|^2 over Gamma - Gamma
  double rhs = 0;  // L^{m-n} |Gamma|
  bool pass = false;
};

/// Passes iff lhs >= rhs / 4. Gamma must lie in [0, 1] with positive measure.
SalemCheck salem_lower_bound_check(const TrigSystem& sys, RieszRange range, const IntervalSet& gamma);

struct PoissonCheck {
  double integral = 0;  // int_0^{L^{-m}} |P_1|^2
  double bound = 0;     // 2 K L^{-n}
  bool within = false;
};

PoissonCheck poisson_check(const TrigSystem& sys, int m, int n, double K);

enum class PsiKind { linear, log, square };

struct SSVSpec {
  PsiKind psi_kind = PsiKind::linear;
  double c1 = 1.0;
  double c2 = 0.5;
  double c3 = 1.0;

  void validate() const;
  /// L^{-c1 m}, L^{-c1 m log m} or L^{-c1 m^2}.
  double psi(int m, std::int64_t L) const;
};

std::string to_string(PsiKind kind);
PsiKind parse_psi_kind(const std::string& text);

/// Cover of {xi in [0,1] : |prod_{k=1..m} phi(L^k xi)| <= threshold} by cells
/// of width at most resolution. Cells are discarded only when a Lipschitz
/// bound proves them disjoint from the set, so the result is a superset.
IntervalSet ssv_set(const TrigSystem& sys, int m, double threshold, double resolution);
IntervalSet ssv_set(const TrigSystem& sys, int m, const SSVSpec& spec, double resolution);

struct CoverStats {
  std::int64_t count = 0;
  double c2_estimate = 0;
};

/// count = cover_count(ssv, L^{-c3 m}); c2_estimate = log_L(count) / m.
CoverStats ssv_cover_stats(const IntervalSet& ssv, std::int64_t L, int m, double c3);

struct DoubleAngleReport {
  double max_identity_error = 0;
  bool inequality_holds = true;
  /// Smallest |prod cos(4^k x)| / (4^{-m} |sin(2 4^m x) / sin x| / 2) seen.
  double min_inequality_ratio = 0;
  int samples = 0;
};

/// Samples x = alpha u with u uniform in (0, 1].
DoubleAngleReport double_angle_check(double alpha, int m, int samples, std::uint64_t seed);

struct PseudofactorizationReport {
  double lhs = 0;
  double rhs = 0;
  double ratio = 0;
  /// Both sides vanish, so the ratio carries no information.
  bool indeterminate = false;
};

PseudofactorizationReport pseudofactorization_ratio(double x1, double x2, double x3, double x4);

struct SSVFailureReport {
  std::int64_t s_star = 0;  // largest bad cyclotomic index
  double xi0 = 0;           // 1 / s_star
  int zero_exponents = 0;   // recurring zero verified for k = 0..zero_exponents
  bool zeros_exact = false;
  double interval_lo = 0;
  double interval_hi = 0;
  double interval_length = 0;
  double max_partial = 0;  // max of prod_{k <= sqrt m} |phi_A(L^k xi)| on the interval
  double max_full = 0;     // max of prod_{k <= m} |phi_A(L^k xi)| on the interval
  /// prod_{k <= sqrt m} min(1, Lip(phi_A) L^k length): a bound valid on the whole interval.
  double partial_bound = 0;
  double threshold = 0;  // L^{-m}
  bool in_ssv = false;   // max_full <= threshold
  bool certified = false;  // partial_bound <= threshold
};

/// A bad cyclotomic factor of A gives phi_A a zero at 1/s that recurs under
/// xi -> L xi when gcd(s, L) = 1. This measures the product on
/// [xi0 - L^{-beta sqrt m}, xi0].
SSVFailureReport ssv_failure_demo(const DigitSet& a, std::int64_t L, int m, double beta, int samples = 4097);

}  // namespace buffon
