#include "buffon/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <gmpxx.h>

#include "buffon/error.hpp"

namespace buffon {

namespace {

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceLimit("polynomial coefficient overflow");
  return r;
}

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceLimit("polynomial coefficient overflow");
  return r;
}

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

QPoly to_q(const IntPolynomial& p) {
  QPoly q;
  q.reserve(p.coeffs().size());
  for (auto c : p.coeffs()) q.emplace_back(static_cast<long>(c));
  return q;
}

// Remainder of a modulo b over Q; b nonzero.
QPoly q_mod(QPoly a, const QPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    mpq_class f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

IntPolynomial primitive_from_q(const QPoly& p) {
  if (p.empty()) return {};
  mpz_class den = 1;
  for (const auto& c : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> z;
  z.reserve(p.size());
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_class v = c.get_num() * (den / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    z.push_back(v);
  }
  if (sgn(z.back()) < 0) g = -g;
  std::vector<std::int64_t> out;
  out.reserve(z.size());
  for (auto& v : z) {
    v /= g;
    if (!v.fits_slong_p()) throw ResourceLimit("polynomial gcd coefficient overflow");
    out.push_back(v.get_si());
  }
  return IntPolynomial(std::move(out));
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::constant(std::int64_t c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(std::int64_t c, std::size_t k) {
  std::vector<std::int64_t> v(k + 1, 0);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::x_pow_minus_one(std::size_t n) {
  std::vector<std::int64_t> v(n + 1, 0);
  v[0] = -1;
  v[n] += 1;
  return IntPolynomial(std::move(v));
}

std::int64_t IntPolynomial::eval(std::int64_t x) const {
  std::int64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = add_checked(mul_checked(acc, x), *it);
  return acc;
}

std::complex<double> IntPolynomial::eval(std::complex<double> z) const {
  std::complex<double> acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + static_cast<double>(*it);
  return acc;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<std::int64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = add_checked(a[i], b[i]);
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<std::int64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = add_checked(a[i], mul_checked(-1, b[i]));
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      v[i + j] = add_checked(v[i + j], mul_checked(a.c_[i], b.c_[j]));
  }
  return IntPolynomial(std::move(v));
}

std::optional<IntPolynomial> exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw InvalidInput("division by the zero polynomial");
  if (a.is_zero()) return IntPolynomial{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<std::int64_t> rem = a.coeffs();
  const auto& d = b.coeffs();
  const std::int64_t lead = d.back();
  std::vector<std::int64_t> q(rem.size() - d.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    std::int64_t top = rem[k + d.size() - 1];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    std::int64_t f = top / lead;
    q[k] = f;
    for (std::size_t i = 0; i < d.size(); ++i)
      rem[k + i] = add_checked(rem[k + i], mul_checked(-f, d[i]));
  }
  for (std::size_t i = 0; i + 1 < d.size(); ++i)
    if (rem[i] != 0) return std::nullopt;
  return IntPolynomial(std::move(q));
}

bool divides(const IntPolynomial& b, const IntPolynomial& a) { return exact_divide(a, b).has_value(); }

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  QPoly x = to_q(a), y = to_q(b);
  while (!y.empty()) {
    QPoly r = q_mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return primitive_from_q(x);
}

IntPolynomial reciprocal(const IntPolynomial& p) {
  std::vector<std::int64_t> v(p.coeffs().rbegin(), p.coeffs().rend());
  // Leading zeros of the reversed list correspond to factors of x in p.
  auto first = std::find_if(v.begin(), v.end(), [](std::int64_t c) { return c != 0; });
  v.erase(v.begin(), first);
  return IntPolynomial(std::move(v));
}

IntPolynomial dilate(const IntPolynomial& p, std::size_t k) {
  if (k == 0) throw InvalidInput("dilation by zero");
  if (p.is_zero()) return {};
  std::vector<std::int64_t> v(static_cast<std::size_t>(p.degree()) * k + 1, 0);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) v[i * k] = p.coeffs()[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial derivative(const IntPolynomial& p) {
  if (p.degree() < 1) return {};
  std::vector<std::int64_t> v(p.coeffs().size() - 1);
  for (std::size_t i = 1; i < p.coeffs().size(); ++i)
    v[i - 1] = mul_checked(static_cast<std::int64_t>(i), p.coeffs()[i]);
  return IntPolynomial(std::move(v));
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.degree() < 1) return p;
  IntPolynomial g = gcd(p, derivative(p));
  IntPolynomial prim = primitive_from_q(to_q(p));
  auto q = exact_divide(prim, g);
  if (!q) throw InternalError("squarefree part: gcd does not divide");
  return *q;
}

std::int64_t content(const IntPolynomial& p) {
  std::int64_t g = 0;
  for (auto c : p.coeffs()) g = std::gcd(g, c);
  return g;
}

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    std::int64_t c = p.coeffs()[k];
    if (c == 0) continue;
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag;
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

DigitSet::DigitSet(std::vector<std::int64_t> digits) : d_(std::move(digits)) {
  std::sort(d_.begin(), d_.end());
  if (d_.empty() || d_.front() != 0) {
    if (!d_.empty() && d_.front() < 0) throw InvalidInput("digit set entries must be non-negative");
    throw InvalidInput("digit set must contain 0");
  }
  if (std::adjacent_find(d_.begin(), d_.end()) != d_.end())
    throw InvalidInput("digit set has repeated digits");
  if (d_.size() < 2) throw InvalidInput("digit set needs at least two digits");
}

IntPolynomial generating_polynomial(const DigitSet& a) {
  if (a.max() > 1'000'000) throw ResourceLimit("digit set too large for a dense polynomial");
  std::vector<std::int64_t> v(static_cast<std::size_t>(a.max()) + 1, 0);
  for (auto d : a.digits()) v[static_cast<std::size_t>(d)] = 1;
  return IntPolynomial(std::move(v));
}

}  // namespace buffon
