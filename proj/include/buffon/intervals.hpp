#pragma once

// One-dimensional closed interval sets in two numeric modes: exact rationals
// and doubles with a merge tolerance. All sets are kept canonical: sorted,
// pairwise disjoint, touching components merged.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "buffon/error.hpp"
#include "buffon/rational.hpp"

namespace buffon {

enum class NumericMode { exact, floating };

/// Gaps at or below this width are merged in floating mode.
inline constexpr double kMergeEpsilon = 1e-12;

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr NumericMode mode = NumericMode::exact;
  static Rational tolerance() { return Rational(0); }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
};

template <>
struct ScalarTraits<double> {
  static constexpr NumericMode mode = NumericMode::floating;
  static double tolerance() { return kMergeEpsilon; }
  static bool is_zero(double x) { return x == 0.0; }
};

template <class T>
struct BasicInterval {
  T lo;
  T hi;

  T length() const { return T(hi - lo); }
  friend bool operator==(const BasicInterval& a, const BasicInterval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

template <class T>
class BasicIntervalSet {
 public:
  using value_type = T;
  using interval_type = BasicInterval<T>;

  BasicIntervalSet() = default;

  /// Validates lo <= hi for every piece and canonicalizes.
  explicit BasicIntervalSet(std::vector<interval_type> pieces) {
    for (const auto& p : pieces)
      if (p.hi < p.lo) throw InvalidInput("interval with lo > hi");
    std::sort(pieces.begin(), pieces.end(),
              [](const interval_type& a, const interval_type& b) { return a.lo < b.lo; });
    pieces_ = merge_sorted(std::move(pieces));
  }

  BasicIntervalSet(const T& lo, const T& hi)
      : BasicIntervalSet(std::vector<interval_type>{{lo, hi}}) {}

  /// Builds from pieces already sorted by lo (overlaps still merged).
  static BasicIntervalSet from_sorted(std::vector<interval_type> pieces) {
    BasicIntervalSet s;
    s.pieces_ = merge_sorted(std::move(pieces));
    return s;
  }

  const std::vector<interval_type>& intervals() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  std::size_t size() const { return pieces_.size(); }

  T measure() const {
    T total(0);
    for (const auto& p : pieces_) total += p.hi - p.lo;
    return total;
  }

  T lower() const { return pieces_.front().lo; }
  T upper() const { return pieces_.back().hi; }

  bool contains(const T& x) const {
    const T tol = ScalarTraits<T>::tolerance();
    auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                               [](const T& v, const interval_type& p) { return v < p.lo; });
    if (it != pieces_.end() && T(it->lo - tol) <= x) return true;
    if (it == pieces_.begin()) return false;
    --it;
    return x <= T(it->hi + tol);
  }

  /// True iff every component of inner lies inside one component of *this.
  bool contains(const BasicIntervalSet& inner) const {
    const T tol = ScalarTraits<T>::tolerance();
    std::size_t j = 0;
    for (const auto& p : inner.pieces_) {
      while (j < pieces_.size() && pieces_[j].hi + tol < p.lo) ++j;
      if (j == pieces_.size()) return false;
      if (!(T(pieces_[j].lo - tol) <= p.lo && p.hi <= T(pieces_[j].hi + tol))) return false;
    }
    return true;
  }

  template <class U>
  BasicIntervalSet<U> convert() const {
    std::vector<BasicInterval<U>> out;
    out.reserve(pieces_.size());
    for (const auto& p : pieces_) out.push_back({convert_scalar<U>(p.lo), convert_scalar<U>(p.hi)});
    return BasicIntervalSet<U>::from_sorted(std::move(out));
  }

  friend bool operator==(const BasicIntervalSet& a, const BasicIntervalSet& b) {
    return a.pieces_ == b.pieces_;
  }

 private:
  template <class U>
  static U convert_scalar(const T& x) {
    if constexpr (std::is_same_v<U, T>) {
      return x;
    } else if constexpr (std::is_same_v<U, double>) {
      return x.get_d();
    } else {
      return U(x);
    }
  }

  static std::vector<interval_type> merge_sorted(std::vector<interval_type> pieces) {
    const T tol = ScalarTraits<T>::tolerance();
    std::vector<interval_type> out;
    out.reserve(pieces.size());
    for (auto& p : pieces) {
      if (!out.empty() && p.lo <= T(out.back().hi + tol)) {
        if (out.back().hi < p.hi) out.back().hi = std::move(p.hi);
      } else {
        out.push_back(std::move(p));
      }
    }
    return out;
  }

  std::vector<interval_type> pieces_;
};

template <class T>
BasicIntervalSet<T> unite(const BasicIntervalSet<T>& s, const BasicIntervalSet<T>& t) {
  std::vector<BasicInterval<T>> merged;
  merged.reserve(s.size() + t.size());
  std::merge(s.intervals().begin(), s.intervals().end(), t.intervals().begin(),
             t.intervals().end(), std::back_inserter(merged),
             [](const BasicInterval<T>& a, const BasicInterval<T>& b) { return a.lo < b.lo; });
  return BasicIntervalSet<T>::from_sorted(std::move(merged));
}

template <class T>
BasicIntervalSet<T> intersect(const BasicIntervalSet<T>& s, const BasicIntervalSet<T>& t) {
  std::vector<BasicInterval<T>> out;
  const auto& a = s.intervals();
  const auto& b = t.intervals();
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const T& lo = a[i].lo < b[j].lo ? b[j].lo : a[i].lo;
    const T& hi = a[i].hi < b[j].hi ? a[i].hi : b[j].hi;
    if (lo <= hi) out.push_back({lo, hi});
    if (a[i].hi < b[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return BasicIntervalSet<T>::from_sorted(std::move(out));
}

/// {x - y : x, y in s}. Each row (fixed left component) is generated already
/// sorted, rows are then merged pairwise.
template <class T>
BasicIntervalSet<T> self_difference(const BasicIntervalSet<T>& s) {
  if (s.empty()) throw EmptySetError("self_difference of an empty set");
  const auto& parts = s.intervals();
  std::vector<BasicIntervalSet<T>> rows;
  rows.reserve(parts.size());
  for (const auto& a : parts) {
    std::vector<BasicInterval<T>> row;
    row.reserve(parts.size());
    for (auto it = parts.rbegin(); it != parts.rend(); ++it)
      row.push_back({T(a.lo - it->hi), T(a.hi - it->lo)});
    rows.push_back(BasicIntervalSet<T>::from_sorted(std::move(row)));
  }
  while (rows.size() > 1) {
    std::vector<BasicIntervalSet<T>> next;
    next.reserve((rows.size() + 1) / 2);
    for (std::size_t k = 0; k + 1 < rows.size(); k += 2) next.push_back(unite(rows[k], rows[k + 1]));
    if (rows.size() % 2 == 1) next.push_back(std::move(rows.back()));
    rows = std::move(next);
  }
  return rows.front();
}

template <class T>
BasicIntervalSet<T> affine(const BasicIntervalSet<T>& s, const T& scale, const T& shift) {
  if (ScalarTraits<T>::is_zero(scale)) throw DegenerateScale();
  std::vector<BasicInterval<T>> out;
  out.reserve(s.size());
  const bool flip = scale < T(0);
  for (const auto& p : s.intervals()) {
    T a = scale * p.lo + shift;
    T b = scale * p.hi + shift;
    if (flip) std::swap(a, b);
    out.push_back({std::move(a), std::move(b)});
  }
  if (flip) std::reverse(out.begin(), out.end());
  return BasicIntervalSet<T>::from_sorted(std::move(out));
}

namespace detail {
inline std::int64_t ceil_ratio(const Rational& num, const Rational& len) {
  Rational q = num / len;
  return ceil_of(q).get_si();
}
inline std::int64_t ceil_ratio(double num, double len) {
  return static_cast<std::int64_t>(std::ceil((num - kMergeEpsilon) / len));
}
}  // namespace detail

/// Minimum number of closed intervals of length ell covering s (greedy sweep).
template <class T>
std::int64_t cover_count(const BasicIntervalSet<T>& s, const T& ell) {
  if (!(T(0) < ell)) throw InvalidInput("cover_count needs a positive length");
  const T tol = ScalarTraits<T>::tolerance();
  std::int64_t count = 0;
  bool started = false;
  T covered_to(0);
  for (const auto& p : s.intervals()) {
    if (started && p.hi <= T(covered_to + tol)) continue;
    T start = (started && p.lo <= covered_to) ? covered_to : p.lo;
    std::int64_t k = std::max<std::int64_t>(1, detail::ceil_ratio(T(p.hi - start), ell));
    count += k;
    covered_to = start + T(k) * ell;
    started = true;
  }
  return count;
}

/// Mode-tagged interval set used at module boundaries and in serialization.
class IntervalSet {
 public:
  using Exact = BasicIntervalSet<Rational>;
  using Float = BasicIntervalSet<double>;

  IntervalSet() = default;
  IntervalSet(Exact s) : data_(std::move(s)) {}
  IntervalSet(Float s) : data_(std::move(s)) {}

  NumericMode mode() const {
    return std::holds_alternative<Exact>(data_) ? NumericMode::exact : NumericMode::floating;
  }

  const Exact& exact() const;
  const Float& floating() const;
  Float to_float() const;

  double measure() const;
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  bool contains(const IntervalSet& inner) const;

  friend bool operator==(const IntervalSet& a, const IntervalSet& b) { return a.data_ == b.data_; }

  template <class F>
  decltype(auto) visit(F&& f) const {
    return std::visit(std::forward<F>(f), data_);
  }

 private:
  std::variant<Exact, Float> data_;
};

IntervalSet unite(const IntervalSet& s, const IntervalSet& t);
IntervalSet intersect(const IntervalSet& s, const IntervalSet& t);
IntervalSet self_difference(const IntervalSet& s);
IntervalSet affine(const IntervalSet& s, const Rational& scale, const Rational& shift);
IntervalSet affine(const IntervalSet& s, double scale, double shift);
std::int64_t cover_count(const IntervalSet& s, double ell);

std::string mode_name(NumericMode mode);

}  // namespace buffon
