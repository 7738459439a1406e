#include "buffon/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "buffon/error.hpp"
#include "buffon/parallel.hpp"

namespace buffon {

namespace {

constexpr double kMaxSquares = 1e7;

void check_level(std::int64_t L, int N) {
  if (N < 0) throw InvalidInput("level must be non-negative");
  if (std::pow(static_cast<double>(L), N) > kMaxSquares)
    throw ResourceLimit("level " + std::to_string(N) + " exceeds 10^7 squares");
}

template <class T>
StepFunction<T> step_from_events(std::vector<std::pair<T, int>> events) {
  std::sort(events.begin(), events.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  StepFunction<T> f;
  std::int64_t level = 0;
  for (std::size_t i = 0; i < events.size();) {
    const T x = events[i].first;
    while (i < events.size() && events[i].first == x) level += events[i++].second;
    f.breaks.push_back(x);
    f.values.push_back(level);
  }
  if (!f.values.empty()) f.values.pop_back();
  return f;
}

template <class T>
std::vector<std::pair<T, int>> counting_events(const std::vector<T>& starts, const T& width) {
  std::vector<std::pair<T, int>> ev;
  ev.reserve(2 * starts.size());
  for (const auto& s : starts) {
    ev.emplace_back(s, +1);
    ev.emplace_back(T(s + width), -1);
  }
  return ev;
}

template <class T>
StepFunction<T> pointwise_max(const std::vector<StepFunction<T>>& fs) {
  std::vector<T> grid;
  for (const auto& f : fs) grid.insert(grid.end(), f.breaks.begin(), f.breaks.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  StepFunction<T> out;
  out.breaks = grid;
  out.values.assign(grid.empty() ? 0 : grid.size() - 1, 0);
  for (const auto& f : fs) {
    std::size_t j = 0;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
      while (j < f.values.size() && f.breaks[j + 1] <= grid[i]) ++j;
      if (j < f.values.size() && f.breaks[j] <= grid[i]) out.values[i] = std::max(out.values[i], f.values[j]);
    }
  }
  return out;
}

template <class T>
double as_double(const T& v) {
  if constexpr (std::is_same_v<T, double>) {
    return v;
  } else {
    return v.get_d();
  }
}

}  // namespace

SelfSimilarSystem::SelfSimilarSystem(std::vector<Point2> digits) : digits_(std::move(digits)) {
  if (digits_.size() < 2) throw InvalidInput("a self-similar system needs at least two digits");
  for (std::size_t i = 0; i < digits_.size(); ++i)
    for (std::size_t j = i + 1; j < digits_.size(); ++j)
      if (digits_[i].x == digits_[j].x && digits_[i].y == digits_[j].y)
        throw InvalidInput("self-similar digits must be distinct");
  const Point2& p = digits_[0];
  const Point2& q = digits_[1];
  bool collinear = true;
  for (const auto& r : digits_) {
    Rational cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    if (sgn(cross) != 0) collinear = false;
  }
  if (collinear) throw InvalidInput("self-similar digits must not be collinear");
}

ProductSystem::ProductSystem(DigitSet a, DigitSet b)
    : A(std::move(a)), B(std::move(b)), L(static_cast<std::int64_t>(A.size() * B.size())) {}

SelfSimilarSystem ProductSystem::planar() const {
  std::vector<Point2> pts;
  for (auto x : A.digits())
    for (auto y : B.digits()) pts.push_back({Rational(static_cast<long>(x)), Rational(static_cast<long>(y))});
  return SelfSimilarSystem(std::move(pts));
}

ProductSystem four_corner() { return ProductSystem(DigitSet({0, 1}), DigitSet({0, 1})); }

std::vector<Point2> iterate_centers(const SelfSimilarSystem& sys, int N) {
  check_level(sys.L(), N);
  if (N == 0) return {Point2{0, 0}};
  std::vector<Point2> z = sys.digits();
  for (int k = 2; k <= N; ++k) {
    Rational s = rational_power(sys.L(), -k);
    std::vector<Point2> next;
    next.reserve(z.size() * sys.digits().size());
    for (const auto& p : z)
      for (const auto& d : sys.digits()) next.push_back({p.x + s * d.x, p.y + s * d.y});
    z = std::move(next);
  }
  return z;
}

std::vector<std::pair<double, double>> iterate_centers_float(const SelfSimilarSystem& sys, int N) {
  check_level(sys.L(), N);
  if (N == 0) return {{0.0, 0.0}};
  std::vector<std::pair<double, double>> digits;
  for (const auto& d : sys.digits()) digits.emplace_back(d.x.get_d(), d.y.get_d());
  std::vector<std::pair<double, double>> z = digits;
  for (int k = 2; k <= N; ++k) {
    double s = std::pow(static_cast<double>(sys.L()), -k);
    std::vector<std::pair<double, double>> next;
    next.reserve(z.size() * digits.size());
    for (const auto& p : z)
      for (const auto& d : digits) next.emplace_back(p.first + s * d.first, p.second + s * d.second);
    z = std::move(next);
  }
  return z;
}

Direction Direction::from_angle(double theta) {
  if (!std::isfinite(theta)) throw InvalidInput("direction angle must be finite");
  Direction d;
  d.theta_ = theta;
  return d;
}

Direction Direction::from_slope(const Rational& t) {
  Direction d;
  d.slope_ = true;
  d.t_ = t;
  return d;
}

double Direction::theta() const { return slope_ ? std::atan(t_.get_d()) : theta_; }

double Direction::scale() const {
  if (!slope_) return 1.0;
  double t = t_.get_d();
  return 1.0 / std::sqrt(1.0 + t * t);
}

std::pair<double, double> Direction::coefficients() const {
  if (slope_) return {1.0, t_.get_d()};
  return {std::cos(theta_), std::sin(theta_)};
}

std::string Direction::label() const {
  if (slope_) return "t=" + to_string(t_);
  std::ostringstream os;
  os.precision(17);
  os << "theta=" << theta_;
  return os.str();
}

ProjectionProfile shadow(const SelfSimilarSystem& sys, int N, const Direction& dir, NumericMode mode) {
  ProjectionProfile out;
  out.direction = dir;
  out.N = N;
  out.scale = dir.scale();
  if (mode == NumericMode::exact) {
    if (!dir.is_slope()) throw ModeMismatch("exact shadows need a rational slope direction");
    const Rational& t = dir.slope();
    const Rational side = rational_power(sys.L(), -N);
    const Rational width = side * (1 + abs(t));
    const Rational offset = sgn(t) < 0 ? Rational(side * t) : Rational(0);
    std::vector<BasicInterval<Rational>> pieces;
    for (const auto& z : iterate_centers(sys, N)) {
      Rational u = z.x + t * z.y + offset;
      out.atoms.push_back(u.get_d());
      pieces.push_back({u, u + width});
    }
    out.shadow = IntervalSet(IntervalSet::Exact(std::move(pieces)));
  } else {
    auto [cx, cy] = dir.coefficients();
    const double side = std::pow(static_cast<double>(sys.L()), -N);
    const double width = side * (std::abs(cx) + std::abs(cy));
    const double offset = side * (std::min(0.0, cx) + std::min(0.0, cy));
    std::vector<BasicInterval<double>> pieces;
    for (const auto& [x, y] : iterate_centers_float(sys, N)) {
      double u = cx * x + cy * y + offset;
      out.atoms.push_back(u);
      pieces.push_back({u, u + width});
    }
    out.shadow = IntervalSet(IntervalSet::Float(std::move(pieces)));
  }
  out.measure = out.shadow.measure() * out.scale;
  return out;
}

double shadow_measure(const std::vector<std::pair<double, double>>& corners, int N, std::int64_t L,
                      double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  const double width = std::pow(static_cast<double>(L), -N) * (std::abs(c) + std::abs(s));
  std::vector<double> u;
  u.reserve(corners.size());
  for (const auto& [x, y] : corners) u.push_back(c * x + s * y);
  std::sort(u.begin(), u.end());
  double total = 0;
  for (std::size_t i = 0; i + 1 < u.size(); ++i) total += std::min(width, u[i + 1] - u[i]);
  return total + width;
}

FavardEstimate favard(const SelfSimilarSystem& sys, int N, int grid_count) {
  if (grid_count < 16) throw InvalidInput("favard needs grid_count >= 16");
  const auto corners = iterate_centers_float(sys, N);
  auto mean_over = [&](int g) {
    std::vector<double> vals(static_cast<std::size_t>(g));
    parallel_for(vals.size(), [&](std::size_t i) {
      double theta = (static_cast<double>(i) + 0.5) * std::numbers::pi / g;
      vals[i] = shadow_measure(corners, N, sys.L(), theta);
    });
    double s = 0;
    for (double v : vals) s += v;
    return s / g;
  };
  FavardEstimate out;
  out.grid = grid_count;
  out.estimate = mean_over(grid_count);
  out.error_indicator = std::abs(out.estimate - mean_over(2 * grid_count));
  return out;
}

double CountingFunction::integral_true() const {
  return std::visit([&](const auto& g) { return as_double(g.integral()) * scale; }, f);
}

double CountingFunction::l2_squared_true() const {
  return std::visit([&](const auto& g) { return as_double(g.l2_squared()) * scale; }, f);
}

double CountingFunction::measure_at_least_true(std::int64_t k) const {
  return std::visit([&](const auto& g) { return as_double(g.measure_at_least(k)) * scale; }, f);
}

std::int64_t CountingFunction::max_value() const {
  return std::visit([](const auto& g) { return g.max_value(); }, f);
}

CountingFunction counting_function(const SelfSimilarSystem& sys, int n, const Direction& dir,
                                   NumericMode mode) {
  CountingFunction out;
  out.direction = dir;
  out.n = n;
  out.scale = dir.scale();
  if (mode == NumericMode::exact) {
    if (!dir.is_slope()) throw ModeMismatch("exact counting functions need a rational slope direction");
    const Rational& t = dir.slope();
    const Rational side = rational_power(sys.L(), -n);
    const Rational width = side * (1 + abs(t));
    const Rational offset = sgn(t) < 0 ? Rational(side * t) : Rational(0);
    std::vector<Rational> starts;
    for (const auto& z : iterate_centers(sys, n)) starts.push_back(z.x + t * z.y + offset);
    out.f = step_from_events(counting_events(starts, width));
  } else {
    auto [cx, cy] = dir.coefficients();
    const double width = std::pow(static_cast<double>(sys.L()), -n) * (std::abs(cx) + std::abs(cy));
    const double offset = std::pow(static_cast<double>(sys.L()), -n) * (std::min(0.0, cx) + std::min(0.0, cy));
    std::vector<double> starts;
    for (const auto& [x, y] : iterate_centers_float(sys, n)) starts.push_back(cx * x + cy * y + offset);
    out.f = step_from_events(counting_events(starts, width));
  }
  return out;
}

BadDirectionReport bad_direction_test(const SelfSimilarSystem& sys, int N, std::int64_t K,
                                      const Direction& dir, NumericMode mode) {
  if (K < 2) throw InvalidInput("bad_direction_test needs K >= 2");
  if (N < 1) throw InvalidInput("bad_direction_test needs N >= 1");
  check_level(sys.L(), N);
  BadDirectionReport out;
  auto run = [&](auto tag) {
    using T = decltype(tag);
    std::vector<StepFunction<T>> fs;
    for (int n = 1; n <= N; ++n) {
      CountingFunction c = counting_function(sys, n, dir, mode);
      fs.push_back(std::get<StepFunction<T>>(c.f));
      out.max_fn_l2_squared = std::max(out.max_fn_l2_squared, c.l2_squared_true());
    }
    StepFunction<T> star = pointwise_max(fs);
    out.f_star_l2_squared = as_double(star.l2_squared()) * dir.scale();
    out.a_star_measure = as_double(star.measure_at_least(K)) * dir.scale();
  };
  if (mode == NumericMode::exact) {
    run(Rational());
  } else {
    run(0.0);
  }
  out.in_tilde_e = out.a_star_measure <= std::pow(static_cast<double>(K), -3);
  return out;
}

DecayFit decay_fit(const std::vector<std::pair<double, double>>& values) {
  if (values.size() < 3) throw InvalidInput("decay_fit needs at least three points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [n, fav] : values) {
    if (!(n > 0) || !(fav > 0)) throw InvalidInput("decay_fit needs positive N and Fav values");
    double x = std::log(n), y = std::log(fav);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double k = static_cast<double>(values.size());
  const double denom = k * sxx - sx * sx;
  if (std::abs(denom) < 1e-300) throw InvalidInput("decay_fit needs at least two distinct N");
  const double slope = (k * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / k;
  return {-slope, std::exp(intercept)};
}

}  // namespace buffon
