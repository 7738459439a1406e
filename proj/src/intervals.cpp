#include "buffon/intervals.hpp"

namespace buffon {

const IntervalSet::Exact& IntervalSet::exact() const {
  if (const auto* s = std::get_if<Exact>(&data_)) return *s;
  throw ModeMismatch("interval set is in floating mode, exact requested");
}

const IntervalSet::Float& IntervalSet::floating() const {
  if (const auto* s = std::get_if<Float>(&data_)) return *s;
  throw ModeMismatch("interval set is in exact mode, floating requested");
}

IntervalSet::Float IntervalSet::to_float() const {
  if (const auto* s = std::get_if<Exact>(&data_)) return s->convert<double>();
  return std::get<Float>(data_);
}

double IntervalSet::measure() const {
  return std::visit(
      [](const auto& s) -> double {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, Exact>) {
          return s.measure().get_d();
        } else {
          return s.measure();
        }
      },
      data_);
}

std::size_t IntervalSet::size() const {
  return std::visit([](const auto& s) { return s.size(); }, data_);
}

bool IntervalSet::contains(const IntervalSet& inner) const {
  if (mode() != inner.mode()) throw ModeMismatch();
  if (mode() == NumericMode::exact) return exact().contains(inner.exact());
  return floating().contains(inner.floating());
}

IntervalSet unite(const IntervalSet& s, const IntervalSet& t) {
  if (s.mode() != t.mode()) throw ModeMismatch();
  if (s.mode() == NumericMode::exact) return unite(s.exact(), t.exact());
  return unite(s.floating(), t.floating());
}

IntervalSet intersect(const IntervalSet& s, const IntervalSet& t) {
  if (s.mode() != t.mode()) throw ModeMismatch();
  if (s.mode() == NumericMode::exact) return intersect(s.exact(), t.exact());
  return intersect(s.floating(), t.floating());
}

IntervalSet self_difference(const IntervalSet& s) {
  if (s.mode() == NumericMode::exact) return self_difference(s.exact());
  return self_difference(s.floating());
}

IntervalSet affine(const IntervalSet& s, const Rational& scale, const Rational& shift) {
  if (s.mode() == NumericMode::exact) return affine(s.exact(), scale, shift);
  return affine(s.floating(), scale.get_d(), shift.get_d());
}

IntervalSet affine(const IntervalSet& s, double scale, double shift) {
  if (s.mode() == NumericMode::exact)
    throw ModeMismatch("floating affine map applied to an exact interval set");
  return affine(s.floating(), scale, shift);
}

std::int64_t cover_count(const IntervalSet& s, double ell) {
  if (s.mode() == NumericMode::exact) {
    if (!(ell > 0)) throw InvalidInput("cover_count needs a positive length");
    return cover_count(s.exact(), Rational(ell));
  }
  return cover_count(s.floating(), ell);
}

std::string mode_name(NumericMode mode) {
  return mode == NumericMode::exact ? "exact" : "float";
}

}  // namespace buffon
