#include "buffon/lamprey.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "buffon/cyclotomic.hpp"
#include "buffon/error.hpp"
#include "buffon/integer_linear.hpp"
#include "buffon/numtheory.hpp"
#include "buffon/parallel.hpp"
#include "buffon/rational.hpp"

namespace buffon {

namespace {

constexpr std::int64_t kMaxOrder = 1'000'000;

// Calls f(sub) for every sub-multiset of t other than the empty one and t
// itself. Each support point contributes between 0 and |weight| copies.
template <class F>
void for_each_proper_submultiset(const RootSum& t, F&& f) {
  std::vector<std::pair<Angle, std::int64_t>> pts(t.terms().begin(), t.terms().end());
  double combos = 1;
  for (const auto& [a, w] : pts) combos *= static_cast<double>(std::llabs(w) + 1);
  if (combos > static_cast<double>(1 << 22)) throw ResourceLimit("too many sub-multisets to enumerate");
  std::vector<std::int64_t> pick(pts.size(), 0);
  while (true) {
    std::size_t i = 0;
    while (i < pts.size() && pick[i] == std::llabs(pts[i].second)) pick[i++] = 0;
    if (i == pts.size()) return;
    ++pick[i];
    bool full = true;
    for (std::size_t k = 0; k < pts.size(); ++k) full = full && pick[k] == std::llabs(pts[k].second);
    if (full) continue;
    RootSum sub;
    for (std::size_t k = 0; k < pts.size(); ++k)
      if (pick[k] != 0) sub.add(pts[k].first, pts[k].second > 0 ? pick[k] : -pick[k]);
    if (!f(sub)) return;
  }
}

// The representative of rotation modulo 1/p.
Angle polygon_rotation(const Angle& a, std::int64_t p) {
  return Angle::make(static_cast<std::int64_t>((static_cast<__int128>(a.num) * p) % a.den), a.den * p);
}

bool polygon_inside(const RootSum& t, std::int64_t p, const Angle& at, int sign) {
  for (std::int64_t j = 0; j < p; ++j) {
    auto it = t.terms().find(at + Angle::make(j, p));
    if (it == t.terms().end() || (it->second > 0 ? 1 : -1) != sign) return false;
  }
  return true;
}

std::vector<PolygonTerm> solve_polygon_system(const RootSum& t) {
  const std::int64_t n = t.order();
  const auto primes = prime_divisors(n);
  struct Column {
    std::int64_t p, k;
  };
  std::vector<Column> cols;
  for (auto p : primes)
    for (std::int64_t k = 0; k < n / p; ++k) cols.push_back({p, k});
  IntMatrix a(static_cast<std::size_t>(n), std::vector<mpz_class>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::int64_t j = 0; j < cols[c].p; ++j) a[static_cast<std::size_t>((cols[c].k + j * (n / cols[c].p)) % n)][c] = 1;
  std::vector<mpz_class> b(static_cast<std::size_t>(n));
  for (const auto& [ang, w] : t.terms()) b[static_cast<std::size_t>(ang.num * (n / ang.den))] = static_cast<long>(w);

  auto sol = solve_integer(a, b);
  if (!sol) throw InternalError("no prime-polygon decomposition for a vanishing sum");

  auto l1 = [](const std::vector<mpz_class>& x) {
    mpz_class s = 0;
    for (const auto& v : x) s += abs(v);
    return s;
  };
  std::vector<mpz_class> x = sol->x;
  mpz_class best = l1(x);
  for (int pass = 0; pass < 64; ++pass) {
    bool improved = false;
    for (const auto& v : sol->kernel) {
      for (int sign : {1, -1}) {
        std::vector<mpz_class> y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = sign > 0 ? mpz_class(x[i] + v[i]) : mpz_class(x[i] - v[i]);
        mpz_class norm = l1(y);
        if (norm < best) {
          best = norm;
          x = std::move(y);
          improved = true;
        }
      }
    }
    if (!improved) break;
  }

  std::vector<PolygonTerm> out;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (sgn(x[c]) == 0) continue;
    if (!x[c].fits_slong_p()) throw ResourceLimit("polygon weight overflow");
    out.push_back({x[c].get_si(), cols[c].p, Angle::make(cols[c].k, n)});
  }
  return out;
}

// Smallest vanishing proper sub-multiset, or t itself when t is irreducible.
RootSum smallest_vanishing_piece(const RootSum& t) {
  RootSum best = t;
  std::int64_t best_count = t.point_count();
  for_each_proper_submultiset(t, [&](const RootSum& sub) {
    std::int64_t c = sub.point_count();
    if (c < best_count && sigma_is_zero(sub)) {
      best = sub;
      best_count = c;
    }
    return true;
  });
  return best;
}

}  // namespace

Angle Angle::make(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw InvalidInput("angle denominator must be positive");
  num %= den;
  if (num < 0) num += den;
  std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

Angle operator+(const Angle& a, const Angle& b) {
  std::int64_t den = lcm_checked(a.den, b.den);
  return Angle::make(a.num * (den / a.den) + b.num * (den / b.den), den);
}

Angle operator-(const Angle& a, const Angle& b) {
  std::int64_t den = lcm_checked(a.den, b.den);
  return Angle::make(a.num * (den / a.den) - b.num * (den / b.den), den);
}

std::string to_string(const Angle& a) { return std::to_string(a.num) + "/" + std::to_string(a.den); }

Angle parse_angle(const std::string& text) {
  Rational q = parse_rational(text);
  if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p())
    throw InvalidInput("angle out of range: '" + text + "'");
  return Angle::make(q.get_num().get_si(), q.get_den().get_si());
}

RootSum::RootSum(std::initializer_list<std::pair<Angle, std::int64_t>> terms) {
  for (const auto& [a, w] : terms) add(a, w);
}

void RootSum::add(const Angle& a, std::int64_t w) {
  if (w == 0) return;
  auto [it, inserted] = terms_.try_emplace(a, w);
  if (!inserted) {
    it->second += w;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t RootSum::point_count() const {
  std::int64_t c = 0;
  for (const auto& [a, w] : terms_) c += std::llabs(w);
  return c;
}

std::int64_t RootSum::order() const {
  std::int64_t n = 1;
  for (const auto& [a, w] : terms_) n = lcm_checked(n, a.den);
  return n;
}

RootSum RootSum::rotated(const Angle& by) const {
  RootSum out;
  for (const auto& [a, w] : terms_) out.add(a + by, w);
  return out;
}

std::complex<double> RootSum::numeric_value() const {
  std::complex<double> s = 0;
  for (const auto& [a, w] : terms_) {
    double x = 2 * std::numbers::pi * static_cast<double>(a.num) / static_cast<double>(a.den);
    s += static_cast<double>(w) * std::complex<double>(std::cos(x), std::sin(x));
  }
  return s;
}

RootSum operator+(const RootSum& a, const RootSum& b) {
  RootSum out = a;
  for (const auto& [ang, w] : b.terms_) out.add(ang, w);
  return out;
}

RootSum operator-(const RootSum& a, const RootSum& b) {
  RootSum out = a;
  for (const auto& [ang, w] : b.terms_) out.add(ang, -w);
  return out;
}

RootSum operator*(std::int64_t k, const RootSum& a) {
  RootSum out;
  for (const auto& [ang, w] : a.terms_) out.add(ang, k * w);
  return out;
}

std::string to_string(const RootSum& t) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [a, w] : t.terms()) {
    if (!first) os << ", ";
    first = false;
    os << to_string(a);
    if (w != 1) os << "*" << w;
  }
  os << "}";
  return os.str();
}

RootSum from_digit_set(const DigitSet& a, std::int64_t s) {
  if (s < 1) throw InvalidInput("from_digit_set needs s >= 1");
  RootSum out;
  for (auto d : a.digits()) out.add(Angle::make(d, s), 1);
  return out;
}

bool sigma_is_zero(const RootSum& t) {
  if (t.empty()) return true;
  const std::int64_t n = t.order();
  if (n > kMaxOrder) throw ResourceLimit("root sum order too large");
  std::vector<std::int64_t> c(static_cast<std::size_t>(n), 0);
  for (const auto& [a, w] : t.terms()) c[static_cast<std::size_t>(a.num * (n / a.den))] = w;
  return divides(cyclotomic(n), IntPolynomial(std::move(c)));
}

RootSum power_map(const RootSum& t, std::int64_t m) {
  if (m < 1) throw InvalidInput("power map exponent must be positive");
  RootSum out;
  for (const auto& [a, w] : t.terms())
    out.add(Angle::make(static_cast<std::int64_t>((static_cast<__int128>(a.num) * m) % a.den), a.den), w);
  return out;
}

RootSum polygon(std::int64_t n, const Angle& rotation) {
  if (n < 2) throw InvalidInput("polygon needs n >= 2");
  RootSum out;
  for (std::int64_t j = 0; j < n; ++j) out.add(rotation + Angle::make(j, n), 1);
  return out;
}

RootSum lamprey_5_3() {
  return RootSum{{Angle::make(1, 5), 1}, {Angle::make(2, 5), 1}, {Angle::make(3, 5), 1},
                 {Angle::make(4, 5), 1}, {Angle::make(5, 6), 1}, {Angle::make(1, 6), 1}};
}

std::vector<PolygonTerm> decompose_prime_polygons(const RootSum& t) {
  if (!sigma_is_zero(t)) throw PreconditionError("decompose_prime_polygons needs a vanishing sum");
  std::vector<PolygonTerm> terms;
  RootSum rest = t;

  // Peel off polygons sitting entirely inside the positive or negative part.
  bool progress = true;
  while (progress && !rest.empty()) {
    progress = false;
    for (auto p : prime_divisors(rest.order())) {
      for (const auto& [a, w] : rest.terms()) {
        int sign = w > 0 ? 1 : -1;
        if (!polygon_inside(rest, p, a, sign)) continue;
        Angle rot = polygon_rotation(a, p);
        rest = rest - sign * polygon(p, rot);
        terms.push_back({sign, p, rot});
        progress = true;
        break;
      }
      if (progress) break;
    }
  }
  if (!rest.empty()) {
    auto solved = solve_polygon_system(rest);
    terms.insert(terms.end(), solved.begin(), solved.end());
  }

  std::map<std::pair<std::int64_t, Angle>, std::int64_t> merged;
  for (const auto& pt : terms) merged[{pt.prime, pt.rotation}] += pt.weight;
  std::vector<PolygonTerm> out;
  for (const auto& [key, w] : merged)
    if (w != 0) out.push_back({w, key.first, key.second});
  if (!(recombine(out) == t)) throw InternalError("prime-polygon decomposition does not recombine");
  return out;
}

RootSum recombine(const std::vector<PolygonTerm>& terms) {
  RootSum out;
  for (const auto& pt : terms) out = out + pt.weight * polygon(pt.prime, pt.rotation);
  return out;
}

bool is_irreducible(const RootSum& t) {
  if (!sigma_is_zero(t)) throw PreconditionError("is_irreducible needs a vanishing sum");
  if (t.support_size() > 12) throw ResourceLimit("is_irreducible supports at most 12 points");
  bool irreducible = true;
  for_each_proper_submultiset(t, [&](const RootSum& sub) {
    if (sigma_is_zero(sub)) irreducible = false;
    return irreducible;
  });
  return irreducible;
}

std::string SixPointClass::label() const {
  std::string s;
  auto add = [&](const char* part) {
    if (!s.empty()) s += "+";
    s += part;
  };
  if (triangles) add("triangles");
  if (segments) add("segments");
  if (l53_rotation) add("L53_rotation");
  return s.empty() ? "none" : s;
}

SixPointClass classify_six_point(const RootSum& t) {
  if (t.support_size() != 6 || t.point_count() != 6)
    throw PreconditionError("classify_six_point needs six distinct unit-weight points");
  for (const auto& [a, w] : t.terms())
    if (w != 1) throw PreconditionError("classify_six_point needs positive unit weights");
  if (!sigma_is_zero(t)) throw PreconditionError("classify_six_point needs a vanishing sum");

  SixPointClass out;
  const Angle first = t.terms().begin()->first;
  if (polygon_inside(t, 3, first, 1)) {
    RootSum rest = t - polygon(3, first);
    out.triangles = polygon_inside(rest, 3, rest.terms().begin()->first, 1);
  }
  out.segments = true;
  for (const auto& [a, w] : t.terms()) out.segments = out.segments && polygon_inside(t, 2, a, 1);
  const RootSum l = lamprey_5_3();
  for (const auto& [a, w] : t.terms()) {
    if (l.rotated(a - Angle::make(1, 5)) == t) {
      out.l53_rotation = true;
      break;
    }
  }
  return out;
}

SixPointSweep six_point_sweep(std::int64_t n) {
  if (n < 6 || n > 64) throw InvalidInput("six_point_sweep needs 6 <= n <= 64");
  std::vector<std::complex<double>> root(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k)
    root[static_cast<std::size_t>(k)] = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));

  // One slot per smallest element; slots are summed in order afterwards.
  std::vector<SixPointSweep> slots(static_cast<std::size_t>(n));
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t i0) {
    SixPointSweep& s = slots[i0];
    std::int64_t idx[6];
    idx[0] = static_cast<std::int64_t>(i0);
    auto visit = [&]() {
      ++s.subsets;
      std::complex<double> z = 0;
      for (auto k : idx) z += root[static_cast<std::size_t>(k)];
      if (std::abs(z) > 1e-6) return;
      RootSum t;
      for (auto k : idx) t.add(Angle::make(k, n), 1);
      if (!sigma_is_zero(t)) return;
      ++s.vanishing;
      SixPointClass c = classify_six_point(t);
      s.triangles += c.triangles;
      s.segments += c.segments;
      s.l53 += c.l53_rotation;
      s.none += c.none();
    };
    for (idx[1] = idx[0] + 1; idx[1] < n; ++idx[1])
      for (idx[2] = idx[1] + 1; idx[2] < n; ++idx[2])
        for (idx[3] = idx[2] + 1; idx[3] < n; ++idx[3])
          for (idx[4] = idx[3] + 1; idx[4] < n; ++idx[4])
            for (idx[5] = idx[4] + 1; idx[5] < n; ++idx[5]) visit();
  });
  SixPointSweep total;
  for (const auto& s : slots) {
    total.subsets += s.subsets;
    total.vanishing += s.vanishing;
    total.triangles += s.triangles;
    total.segments += s.segments;
    total.l53 += s.l53;
    total.none += s.none;
  }
  return total;
}

ParasiticResult parasitic_structure_check(const DigitSet& a) {
  if (a.size() != 5) throw PreconditionError("parasitic_structure_check needs |A| = 5");
  ParasiticResult out;
  for (const auto& f : cyclotomic_divisors(generating_polynomial(a)))
    if (std::gcd(f.s, std::int64_t{5}) == 1) out.s_values.push_back(f.s);
  if (out.s_values.empty()) {
    out.trivial = true;
    return out;
  }
  out.j0 = valuation(out.s_values.front(), 2);
  out.k0 = valuation(out.s_values.front(), 3);
  for (auto s : out.s_values) {
    if (valuation(s, 2) != out.j0 || valuation(s, 3) != out.k0)
      throw StructuralViolation("cyclotomic indices " + std::to_string(out.s_values.front()) + " and " +
                                std::to_string(s) + " have different 2- or 3-adic valuations");
  }
  return out;
}

MannResult mann_bound_check(const DigitSet& a, std::int64_t s) {
  if (!divides(cyclotomic(s), generating_polynomial(a)))
    throw PreconditionError("mann_bound_check needs Phi_s | A(x)");
  if (a.size() > 20) throw ResourceLimit("mann_bound_check supports |A| <= 20");
  MannResult out;
  out.pass = true;
  RootSum rest = from_digit_set(a, s);
  while (!rest.empty()) {
    RootSum piece = smallest_vanishing_piece(rest);
    if (!sigma_is_zero(piece)) throw InternalError("digit sum left a non-vanishing remainder");
    rest = rest - piece;
    RootSum normalized = piece.rotated(Angle{} - piece.terms().begin()->first);
    for (const auto& pt : decompose_prime_polygons(normalized)) {
      if (std::find(out.primes.begin(), out.primes.end(), pt.prime) == out.primes.end())
        out.primes.push_back(pt.prime);
      if (s % pt.prime != 0 || pt.prime > static_cast<std::int64_t>(a.size())) out.pass = false;
    }
    out.pieces.push_back(std::move(normalized));
  }
  std::sort(out.primes.begin(), out.primes.end());
  return out;
}

}  // namespace buffon
