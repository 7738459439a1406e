#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace buffon {

/// Integer polynomial, coefficient k multiplies x^k. Trailing zeros are trimmed
/// so the zero polynomial has an empty coefficient list. Arithmetic throws
/// ResourceLimit if a coefficient leaves the int64 range.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::int64_t> coeffs);

  static IntPolynomial constant(std::int64_t c);
  static IntPolynomial monomial(std::int64_t c, std::size_t k);
  /// x^n - 1
  static IntPolynomial x_pow_minus_one(std::size_t n);

  const std::vector<std::int64_t>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  std::int64_t operator[](std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
  std::int64_t leading() const { return c_.empty() ? 0 : c_.back(); }

  std::int64_t eval(std::int64_t x) const;
  std::complex<double> eval(std::complex<double> z) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<std::int64_t> c_;
};

/// Division in Z[x]. Returns the quotient when b divides a exactly, otherwise nullopt.
std::optional<IntPolynomial> exact_divide(const IntPolynomial& a, const IntPolynomial& b);
bool divides(const IntPolynomial& b, const IntPolynomial& a);

/// Greatest common divisor over Q, normalized to a primitive integer
/// polynomial with positive leading coefficient. gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// x^deg p(1/x)
IntPolynomial reciprocal(const IntPolynomial& p);
/// p(x^k)
IntPolynomial dilate(const IntPolynomial& p, std::size_t k);
IntPolynomial derivative(const IntPolynomial& p);
/// p / gcd(p, p'), primitive.
IntPolynomial squarefree_part(const IntPolynomial& p);
std::int64_t content(const IntPolynomial& p);

std::string to_string(const IntPolynomial& p);

/// Strictly increasing non-negative integers with 0 first and at least two entries.
class DigitSet {
 public:
  /// Sorts the input; rejects missing 0, negatives, repeats and singletons.
  explicit DigitSet(std::vector<std::int64_t> digits);

  const std::vector<std::int64_t>& digits() const { return d_; }
  std::size_t size() const { return d_.size(); }
  std::int64_t max() const { return d_.back(); }

  friend bool operator==(const DigitSet& a, const DigitSet& b) { return a.d_ == b.d_; }

 private:
  std::vector<std::int64_t> d_;
};

IntPolynomial generating_polynomial(const DigitSet& a);

}  // namespace buffon
