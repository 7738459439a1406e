#include "buffon/serialize.hpp"

#include "buffon/error.hpp"

namespace buffon {

using nlohmann::json;

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(mpz_class(std::to_string(j.get<long long>())));
  // The shortest round-trip form, so 0.9 reads as 9/10.
  if (j.is_number_float()) {
    const std::string text = j.dump();
    if (text.find_first_of("eE") == std::string::npos) return parse_rational(text);
    return Rational(j.get<double>());
  }
  throw InvalidInput("expected a rational number");
}

void to_json(json& j, const IntervalSet& s) {
  json pieces = json::array();
  s.visit([&](const auto& set) {
    for (const auto& p : set.intervals()) {
      if constexpr (std::is_same_v<std::decay_t<decltype(p.lo)>, Rational>)
        pieces.push_back({to_string(p.lo), to_string(p.hi)});
      else
        pieces.push_back({p.lo, p.hi});
    }
  });
  j = json{{"mode", mode_name(s.mode())}, {"intervals", pieces}};
}

void from_json(const json& j, IntervalSet& s) {
  if (!j.is_object() || !j.contains("intervals")) throw InvalidInput("interval set needs an \"intervals\" array");
  const std::string mode = j.value("mode", std::string("exact"));
  const json& arr = j.at("intervals");
  if (!arr.is_array()) throw InvalidInput("\"intervals\" must be an array");
  auto pair_of = [](const json& p) {
    if (!p.is_array() || p.size() != 2) throw InvalidInput("each interval is a [lo, hi] pair");
    return std::pair<const json&, const json&>(p[0], p[1]);
  };
  if (mode == "exact") {
    std::vector<BasicInterval<Rational>> pieces;
    for (const auto& p : arr) {
      auto [lo, hi] = pair_of(p);
      pieces.push_back({rational_from_json(lo), rational_from_json(hi)});
    }
    s = IntervalSet::Exact(std::move(pieces));
  } else if (mode == "float") {
    std::vector<BasicInterval<double>> pieces;
    for (const auto& p : arr) {
      auto [lo, hi] = pair_of(p);
      if (!lo.is_number() || !hi.is_number()) throw InvalidInput("float intervals need numeric endpoints");
      pieces.push_back({lo.get<double>(), hi.get<double>()});
    }
    s = IntervalSet::Float(std::move(pieces));
  } else {
    throw InvalidInput("unknown interval mode \"" + mode + "\"");
  }
}

void to_json(json& j, const IntPolynomial& p) { j = p.coeffs(); }

void to_json(json& j, const FactorSplit& f) {
  json cyc = json::array();
  for (const auto& c : f.cyclotomic) cyc.push_back({{"s", c.s}, {"multiplicity", c.multiplicity}});
  j = json{{"cyclotomic", cyc},   {"s1_list", f.s1_list}, {"s2_list", f.s2_list},
           {"a3", f.a3},          {"a4", f.a4},           {"good", f.good},
           {"bad", f.bad},        {"s_A", f.s_A},         {"a3_heuristic", f.a3_heuristic}};
}

void to_json(json& j, const RootSum& t) {
  j = json::array();
  for (const auto& [angle, w] : t.terms()) j.push_back({to_string(angle), w});
}

void from_json(const json& j, RootSum& t) {
  if (!j.is_array()) throw InvalidInput("root sum must be an array of [angle, weight] pairs");
  RootSum out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_number_integer())
      throw InvalidInput("root sum entries are [\"a/q\", integer weight]");
    out.add(parse_angle(p[0].get<std::string>()), p[1].get<std::int64_t>());
  }
  t = std::move(out);
}

void to_json(json& j, const PolygonTerm& t) {
  j = json{{"weight", t.weight}, {"prime", t.prime}, {"rotation", to_string(t.rotation)}};
}

void to_json(json& j, const Split& s) { j = json::array({s.s1, s.s2}); }

void to_json(json& j, const SplitReport& r) {
  j = json{{"s_A", r.s_A}, {"splits", r.splits}, {"trivial", r.trivial}, {"feasible", r.feasible}};
}

void to_json(json& j, const GammaResult& g) {
  json tau = json::array();
  for (const auto& x : g.tau) tau.push_back(to_string(x));
  j = json{{"gamma", g.gamma},
           {"measure", to_string(g.measure)},
           {"measure_float", to_double(g.measure)},
           {"floor", to_string(g.floor)},
           {"floor_float", to_double(g.floor)},
           {"tau_discrete", g.tau_discrete},
           {"tau", tau},
           {"trials", g.trials}};
}

void to_json(json& j, const SLVReport& r) {
  j = json{{"containment", r.containment},
           {"min_product", {{"pass", r.min_product_pass},
                            {"value", r.min_product},
                            {"floor", r.product_floor},
                            {"c", r.c},
                            {"xi", r.min_xi},
                            {"samples", r.samples}}},
           {"measure_vs_K", {{"pass", r.measure_pass},
                             {"measure", r.measure},
                             {"target", r.measure_target},
                             {"c_star", r.c_star}}},
           {"epsilon", r.epsilon}};
}

}  // namespace buffon
