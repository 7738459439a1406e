#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <new>
#include <optional>
#include <sstream>

#include "buffon/cyclotomic.hpp"
#include "buffon/error.hpp"
#include "buffon/geometry.hpp"
#include "buffon/lamprey.hpp"
#include "buffon/parallel.hpp"
#include "buffon/riesz.hpp"
#include "buffon/serialize.hpp"
#include "buffon/slv.hpp"
#include "buffon/verify.hpp"

namespace buffon::cli {

namespace {

using nlohmann::json;

// Flags shared by every subcommand. Unset flags leave the config alone.
struct Common {
  std::string config_path;
  std::string out_path;
  std::string mode;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> threads;
  std::optional<int> grid;
  std::vector<std::string> params;
  std::string suite = "all";
};

std::string num(double x) {
  std::ostringstream s;
  s.imbue(std::locale::classic());
  s.precision(15);
  s << x;
  return s.str();
}

json load_config(const Common& c) {
  json cfg = json::object();
  if (!c.config_path.empty()) {
    std::ifstream in(c.config_path);
    if (!in) throw InvalidInput("cannot read config file " + c.config_path);
    try {
      cfg = json::parse(in);
    } catch (const json::parse_error& e) {
      throw InvalidInput(std::string("config is not valid JSON: ") + e.what());
    }
    if (!cfg.is_object()) throw InvalidInput("config must be a JSON object");
  }
  for (const auto& p : c.params) {
    auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw InvalidInput("--param expects key=value, got " + p);
    const std::string key = p.substr(0, eq), value = p.substr(eq + 1);
    json v = json::parse(value, nullptr, false);
    cfg[key] = v.is_discarded() ? json(value) : v;
  }
  if (!c.mode.empty()) cfg["mode"] = c.mode;
  if (c.seed) cfg["seed"] = *c.seed;
  if (c.grid) cfg["grid"] = *c.grid;
  return cfg;
}

template <class T>
T get(const json& cfg, const std::string& key, T fallback) {
  if (!cfg.contains(key)) return fallback;
  try {
    return cfg.at(key).get<T>();
  } catch (const json::exception&) {
    throw InvalidInput("config field \"" + key + "\" has the wrong type");
  }
}

Rational get_rational(const json& cfg, const std::string& key, const Rational& fallback) {
  if (!cfg.contains(key)) return fallback;
  return rational_from_json(cfg.at(key));
}

NumericMode get_mode(const json& cfg) {
  const std::string m = get<std::string>(cfg, "mode", "float");
  if (m == "exact") return NumericMode::exact;
  if (m == "float") return NumericMode::floating;
  throw InvalidInput("mode must be exact or float");
}

DigitSet digits_from(const json& j, const std::string& key) {
  if (!j.is_array()) throw InvalidInput("\"" + key + "\" must be an array of integers");
  std::vector<std::int64_t> d;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InvalidInput("\"" + key + "\" must be an array of integers");
    d.push_back(x.get<std::int64_t>());
  }
  return DigitSet(d);
}

DigitSet require_digits(const json& cfg, const std::string& key) {
  if (!cfg.contains(key)) throw InvalidInput("config needs \"" + key + "\"");
  return digits_from(cfg.at(key), key);
}

std::optional<DigitSet> optional_digits(const json& cfg, const std::string& key) {
  if (!cfg.contains(key)) return std::nullopt;
  return digits_from(cfg.at(key), key);
}

// "system": {"A": [...], "B": [...]} | {"digits": [[x, y], ...]}; default four-corner.
SelfSimilarSystem get_system(const json& cfg) {
  if (!cfg.contains("system")) return four_corner().planar();
  const json& s = cfg.at("system");
  if (s.is_string() && s.get<std::string>() == "four_corner") return four_corner().planar();
  if (!s.is_object()) throw InvalidInput("\"system\" must be an object or \"four_corner\"");
  if (s.contains("digits")) {
    std::vector<Point2> pts;
    for (const auto& p : s.at("digits")) {
      if (!p.is_array() || p.size() != 2) throw InvalidInput("planar digits are [x, y] pairs");
      pts.push_back({rational_from_json(p[0]), rational_from_json(p[1])});
    }
    return SelfSimilarSystem(std::move(pts));
  }
  return ProductSystem(require_digits(s, "A"), require_digits(s, "B")).planar();
}

int get_positive(const json& cfg, const std::string& key, int fallback) {
  int v = get<int>(cfg, key, fallback);
  if (v < 1) throw InvalidInput("\"" + key + "\" must be positive");
  return v;
}

int get_nonneg(const json& cfg, const std::string& key, int fallback) {
  int v = get<int>(cfg, key, fallback);
  if (v < 0) throw InvalidInput("\"" + key + "\" must be non-negative");
  return v;
}

// phi_A alone, or phi_A(xi) phi_B(t xi) when B is given.
TrigSystem get_trig(const json& cfg, std::int64_t& L) {
  const DigitSet a = require_digits(cfg, "A");
  auto b = optional_digits(cfg, "B");
  if (b) {
    const double t = to_double(get_rational(cfg, "t", Rational(1)));
    L = get<std::int64_t>(cfg, "L", static_cast<std::int64_t>(a.size() * b->size()));
    return TrigSystem::product(a, *b, t, L);
  }
  L = get<std::int64_t>(cfg, "L", static_cast<std::int64_t>(a.size()));
  return TrigSystem::single(a, L);
}

// ------------------------------------------------------------------ commands

int cmd_favard(const json& cfg, std::ostream& out) {
  const SelfSimilarSystem sys = get_system(cfg);
  const int lo = get_nonneg(cfg, "N_min", 1), hi = get_nonneg(cfg, "N_max", 6);
  const int grid = get_positive(cfg, "grid", 256);
  if (hi < lo) throw InvalidInput("N_max must be at least N_min");
  std::ostringstream s;
  s << "N,fav_estimate,error_indicator\n";
  for (int n = lo; n <= hi; ++n) {
    FavardEstimate f = favard(sys, n, grid);
    s << n << ',' << num(f.estimate) << ',' << num(f.error_indicator) << '\n';
  }
  out << s.str();
  return 0;
}

std::vector<Direction> get_directions(const json& cfg) {
  std::vector<Direction> dirs;
  if (cfg.contains("t")) {
    const json& t = cfg.at("t");
    if (t.is_array())
      for (const auto& x : t) dirs.push_back(Direction::from_slope(rational_from_json(x)));
    else
      dirs.push_back(Direction::from_slope(rational_from_json(t)));
  }
  if (cfg.contains("theta")) {
    const json& th = cfg.at("theta");
    auto angle = [](const json& x) {
      if (!x.is_number()) throw InvalidInput("\"theta\" must be numeric");
      return Direction::from_angle(x.get<double>());
    };
    if (th.is_array())
      for (const auto& x : th) dirs.push_back(angle(x));
    else
      dirs.push_back(angle(th));
  }
  if (dirs.empty()) throw InvalidInput("config needs \"t\" or \"theta\"");
  return dirs;
}

std::string direction_label(const Direction& d) {
  return d.is_slope() ? to_string(d.slope()) : num(d.theta());
}

int cmd_shadow(const json& cfg, std::ostream& out) {
  const SelfSimilarSystem sys = get_system(cfg);
  const int n = get_nonneg(cfg, "N", 4);
  const NumericMode mode = get_mode(cfg);
  const std::string id = get<std::string>(cfg, "system_id", "system");
  const auto dirs = get_directions(cfg);
  if (mode == NumericMode::exact)
    for (const auto& d : dirs)
      if (!d.is_slope()) throw InvalidInput("exact mode needs slope directions \"t\"");
  std::ostringstream s;
  s << "system_id,N,theta_or_t,shadow_measure\n";
  for (const auto& d : dirs) {
    ProjectionProfile p = shadow(sys, n, d, mode);
    s << id << ',' << n << ',' << direction_label(d) << ',' << num(p.measure) << '\n';
  }
  out << s.str();
  return 0;
}

int cmd_counting(const json& cfg, std::ostream& out) {
  const SelfSimilarSystem sys = get_system(cfg);
  const int n = get_nonneg(cfg, "n", 3);
  const NumericMode mode = get_mode(cfg);
  const auto dirs = get_directions(cfg);
  if (dirs.size() != 1) throw InvalidInput("counting takes a single direction");
  if (mode == NumericMode::exact && !dirs[0].is_slope()) throw InvalidInput("exact mode needs a slope \"t\"");
  CountingFunction f = counting_function(sys, n, dirs[0], mode);
  std::ostringstream s;
  s << "axis_lo,axis_hi,count\n";
  std::visit(
      [&](const auto& step) {
        for (std::size_t i = 0; i < step.values.size(); ++i) {
          if constexpr (std::is_same_v<std::decay_t<decltype(step)>, StepFunction<Rational>>)
            s << to_string(step.breaks[i]) << ',' << to_string(step.breaks[i + 1]);
          else
            s << num(step.breaks[i]) << ',' << num(step.breaks[i + 1]);
          s << ',' << step.values[i] << '\n';
        }
      },
      f.f);
  out << s.str();
  return 0;
}

int cmd_factor(const json& cfg, std::ostream& out) {
  const DigitSet a = require_digits(cfg, "A");
  const std::int64_t L = get<std::int64_t>(cfg, "L", 0);
  if (L < 2) throw InvalidInput("config needs \"L\" >= 2");
  const IntPolynomial g = generating_polynomial(a);
  json j;
  j["A"] = a.digits();
  j["L"] = L;
  j["polynomial"] = g;
  j["factor_split"] = factor_split(g, L);
  j["compatible_splits"] = compatible_splits(a, L);
  if (a.size() == 5) {
    ParasiticResult p = parasitic_structure_check(a);
    j["parasitic"] = {{"trivial", p.trivial}, {"j0", p.j0}, {"k0", p.k0}, {"s_values", p.s_values}};
  }
  out << j.dump(2) << '\n';
  return 0;
}

int cmd_ssv(const json& cfg, std::ostream& out) {
  std::int64_t L = 0;
  const TrigSystem sys = get_trig(cfg, L);
  const int m = get_positive(cfg, "m", 4);
  SSVSpec spec;
  if (cfg.contains("psi")) {
    const json& p = cfg.at("psi");
    spec.psi_kind = parse_psi_kind(get<std::string>(p, "kind", "linear"));
    spec.c1 = get<double>(p, "c1", spec.c1);
    spec.c2 = get<double>(p, "c2", spec.c2);
    spec.c3 = get<double>(p, "c3", spec.c3);
  }
  spec.validate();
  const double resolution = get<double>(cfg, "resolution", std::pow(static_cast<double>(L), -m) / 8);
  IntervalSet set = ssv_set(sys, m, spec, resolution);
  CoverStats stats = ssv_cover_stats(set, L, m, spec.c3);
  json j;
  j["m"] = m;
  j["L"] = L;
  j["psi"] = {{"kind", to_string(spec.psi_kind)}, {"c1", spec.c1}, {"c2", spec.c2}, {"c3", spec.c3}};
  j["threshold"] = spec.psi(m, L);
  j["measure"] = set.measure();
  j["cover_count"] = stats.count;
  j["c2_estimate"] = stats.c2_estimate;
  j["set"] = set;
  if (cfg.contains("beta")) {
    const double beta = get<double>(cfg, "beta", 2.0);
    SSVFailureReport r = ssv_failure_demo(require_digits(cfg, "A"), L, m, beta);
    j["failure_demo"] = {{"s_star", r.s_star},
                         {"xi0", r.xi0},
                         {"zeros_exact", r.zeros_exact},
                         {"interval", {r.interval_lo, r.interval_hi}},
                         {"interval_length", r.interval_length},
                         {"max_partial", r.max_partial},
                         {"max_full", r.max_full},
                         {"partial_bound", r.partial_bound},
                         {"threshold", r.threshold},
                         {"in_ssv", r.in_ssv},
                         {"certified", r.certified}};
  }
  out << j.dump(2) << '\n';
  return 0;
}

int cmd_riesz(const json& cfg, std::ostream& out) {
  std::int64_t L = 0;
  const TrigSystem sys = get_trig(cfg, L);
  const int m = get_nonneg(cfg, "m", 0), n = get_nonneg(cfg, "n", 4);
  if (n < m) throw InvalidInput("n must be at least m");
  const double a = get<double>(cfg, "xi_min", 0.0), b = get<double>(cfg, "xi_max", 1.0);
  const int samples = get_positive(cfg, "samples", 1001);
  if (!(b > a)) throw InvalidInput("xi_max must exceed xi_min");
  std::ostringstream s;
  s << "xi,abs_P\n";
  for (int i = 0; i < samples; ++i) {
    const double xi = samples == 1 ? a : a + (b - a) * i / (samples - 1);
    s << num(xi) << ',' << num(std::abs(riesz_product(sys, {m, n}, xi))) << '\n';
  }
  out << s.str();
  return 0;
}

Split get_split(const json& cfg, const std::string& key, const DigitSet& digits, std::int64_t L) {
  if (cfg.contains(key)) {
    const json& s = cfg.at(key);
    if (!s.is_array() || s.size() != 2) throw InvalidInput("\"" + key + "\" must be [s1, s2]");
    return {s[0].get<std::int64_t>(), s[1].get<std::int64_t>()};
  }
  return default_split(compatible_splits(digits, L));
}

int cmd_gamma(const json& cfg, std::ostream& out) {
  const DigitSet a = require_digits(cfg, "A");
  const auto b = optional_digits(cfg, "B");
  SLVConfig c;
  c.L = get<std::int64_t>(cfg, "L", static_cast<std::int64_t>(a.size() * (b ? b->size() : 1)));
  c.m = get_nonneg(cfg, "m", 2);
  c.eta = get_rational(cfg, "eta", Rational(1, 2));
  c.M = get_rational(cfg, "M", Rational(10));
  c.t = get_rational(cfg, "t", Rational(1));
  c.split_a = get_split(cfg, "split_a", a, c.L);
  if (b) c.split_b = get_split(cfg, "split_b", *b, c.L);
  c.validate();
  const std::string method = get<std::string>(cfg, "method", "translated");
  const double c_star = get<double>(cfg, "c_star", 0.1);
  const int samples = get_positive(cfg, "samples", 2000);
  GammaResult g;
  if (method == "pigeonhole") {
    if (b) throw InvalidInput("the pigeonhole construction takes a single digit set");
    g = gamma_pigeonhole(c.split_a.s1, c.split_a.s2, c.eta, c.L, c.m, get_positive(cfg, "q", 4));
  } else if (method == "translated") {
    g = gamma_translated(c, get_positive(cfg, "trials", 64), get<std::uint64_t>(cfg, "seed", 1));
  } else {
    throw InvalidInput("method must be pigeonhole or translated");
  }
  json j;
  j["split"] = {{"A", c.split_a}};
  if (c.split_b) j["split"]["B"] = *c.split_b;
  j["eta"] = to_string(c.eta);
  j["M"] = to_string(c.M);
  j["t"] = to_string(c.t);
  j["m"] = c.m;
  j["L"] = c.L;
  j["method"] = method;
  j["gamma_measure"] = to_double(g.measure);
  j["floor"] = to_double(g.floor);
  j["result"] = g;
  if (!g.gamma.empty()) j["checks"] = verify_slv(g, a, b, c, samples, c_star);
  out << j.dump(2) << '\n';
  return 0;
}

int cmd_lamprey(const json& cfg, std::ostream& out) {
  json j;
  if (cfg.contains("sweep")) {
    SixPointSweep sw = six_point_sweep(get<std::int64_t>(cfg, "sweep", 30));
    j = {{"subsets", sw.subsets}, {"vanishing", sw.vanishing}, {"triangles", sw.triangles},
         {"segments", sw.segments}, {"l53_rotation", sw.l53}, {"none", sw.none}};
    out << j.dump(2) << '\n';
    return 0;
  }
  RootSum t;
  if (cfg.contains("sum")) {
    t = cfg.at("sum").get<RootSum>();
  } else if (cfg.contains("A")) {
    const std::int64_t s = get<std::int64_t>(cfg, "s", 0);
    if (s < 1) throw InvalidInput("config needs \"s\" >= 1 with \"A\"");
    t = from_digit_set(require_digits(cfg, "A"), s);
  } else {
    t = lamprey_5_3();
  }
  const bool vanishing = sigma_is_zero(t);
  j["sum"] = t;
  j["points"] = t.point_count();
  j["order"] = t.order();
  j["vanishing"] = vanishing;
  if (vanishing && !t.empty()) {
    j["decomposition"] = decompose_prime_polygons(t);
    if (t.support_size() <= 12) j["irreducible"] = is_irreducible(t);
    if (t.point_count() == 6) j["six_point_class"] = classify_six_point(t).label();
  }
  out << j.dump(2) << '\n';
  return 0;
}

int cmd_verify(const std::string& suite, const json& cfg, std::ostream& out, std::ostream& err) {
  const auto results = run_suite(suite, get<std::uint64_t>(cfg, "seed", 20240601));
  json j = json::array();
  const CheckResult* first_failure = nullptr;
  for (const auto& r : results) {
    j.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
    if (!r.pass && !first_failure) first_failure = &r;
  }
  out << json{{"suite", suite}, {"pass", first_failure == nullptr}, {"checks", j}}.dump(2) << '\n';
  if (first_failure) {
    err << "verification failed: " << first_failure->name << ": " << first_failure->detail << '\n';
    return 1;
  }
  return 0;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input: return 2;
    case ErrorKind::resource: return 3;
    case ErrorKind::verification:
    case ErrorKind::internal: return 1;
  }
  return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Favard length experiments for rational product Cantor sets"};
  app.require_subcommand(1);
  Common common;
  std::function<int(const json&, std::ostream&)> action;
  std::string chosen;

  auto add = [&](const std::string& name, const std::string& help,
                 std::function<int(const json&, std::ostream&)> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", common.config_path, "JSON config file");
    sub->add_option("--out", common.out_path, "output file (default stdout)");
    sub->add_option("--mode", common.mode, "numeric mode")->check(CLI::IsMember({"exact", "float"}));
    sub->add_option("--seed", common.seed, "random seed");
    sub->add_option("--threads", common.threads, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--grid", common.grid, "angle grid size")->check(CLI::PositiveNumber);
    sub->add_option("--param", common.params, "override a config field, key=value");
    if (name == "verify")
      sub->add_option("--suite", common.suite, "suite name")->check(CLI::IsMember(suite_names()));
    sub->callback([&, name, fn] {
      chosen = name;
      action = fn;
    });
  };
  add("favard", "Favard length estimates by N", cmd_favard);
  add("shadow", "projection lengths", cmd_shadow);
  add("counting", "counting function f_{n,theta}", cmd_counting);
  add("factor", "good/bad cyclotomic factorization", cmd_factor);
  add("ssv", "set of small values of a Riesz product", cmd_ssv);
  add("riesz", "sampled |Riesz product|", cmd_riesz);
  add("gamma", "construct and verify an SLV set", cmd_gamma);
  add("lamprey", "vanishing sums of roots of unity", cmd_lamprey);
  add("verify", "bundled verification suites", nullptr);

  std::vector<const char*> argv{"buffon"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    const json cfg = load_config(common);
    if (common.threads) set_thread_count(*common.threads);
    // Results are buffered so a failing command never leaves a partial file.
    std::ostringstream buffer;
    std::ostringstream verify_err;
    int code = 0;
    if (chosen == "verify")
      code = cmd_verify(common.suite, cfg, buffer, verify_err);
    else
      code = action(cfg, buffer);
    if (common.out_path.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(common.out_path, std::ios::binary);
      if (!file) throw InvalidInput("cannot open output file " + common.out_path);
      file << buffer.str();
    }
    err << verify_err.str();
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace buffon::cli
