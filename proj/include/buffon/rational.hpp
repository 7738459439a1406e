#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace buffon {

/// Exact rational scalar. Always kept in canonical (reduced) form.
using Rational = mpq_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "p", "p/q" or a plain decimal such as "-0.25" (converted exactly).
Rational parse_rational(std::string_view text);

/// Always "p/q", including integers ("3/1").
std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

mpz_class floor_of(const Rational& q);
mpz_class ceil_of(const Rational& q);

/// L^e as an exact rational; negative exponents allowed.
Rational rational_power(std::int64_t base, int exponent);

}  // namespace buffon
