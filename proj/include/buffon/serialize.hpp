#pragma once

// JSON forms of the library types. Rationals are written as "p/q" strings.

#include <json.hpp>

#include "buffon/cyclotomic.hpp"
#include "buffon/intervals.hpp"
#include "buffon/lamprey.hpp"
#include "buffon/polynomial.hpp"
#include "buffon/slv.hpp"

namespace buffon {

/// {"mode": "exact"|"float", "intervals": [[lo, hi], ...]}
void to_json(nlohmann::json& j, const IntervalSet& s);
void from_json(const nlohmann::json& j, IntervalSet& s);

/// Coefficient array, constant term first.
void to_json(nlohmann::json& j, const IntPolynomial& p);

void to_json(nlohmann::json& j, const FactorSplit& f);

/// [["a/q", weight], ...]
void to_json(nlohmann::json& j, const RootSum& t);
void from_json(const nlohmann::json& j, RootSum& t);

void to_json(nlohmann::json& j, const PolygonTerm& t);
void to_json(nlohmann::json& j, const Split& s);
void to_json(nlohmann::json& j, const SplitReport& r);
void to_json(nlohmann::json& j, const GammaResult& g);
void to_json(nlohmann::json& j, const SLVReport& r);

/// Accepts a number or a "p/q" / decimal string.
Rational rational_from_json(const nlohmann::json& j);

}  // namespace buffon
