#include "circrep/circle_function.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "circrep/error.hpp"

namespace circrep {

namespace {

constexpr double kCoalesce = 1e-12;

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidInput, what);
}

}  // namespace

PLFunction::PLFunction(std::vector<double> breakpoints, std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  const std::size_t n = breakpoints_.size();
  require(n >= 2, "PL function needs at least two breakpoints");
  require(values_.size() == n, "PL function: breakpoints and values differ in length");
  for (std::size_t i = 0; i < n; ++i) {
    require(std::isfinite(breakpoints_[i]) && std::isfinite(values_[i]),
            "PL function: non-finite entry at index " + std::to_string(i));
    require(breakpoints_[i] >= -kPi && breakpoints_[i] < kPi,
            "PL function: breakpoint " + std::to_string(i) + " outside [-pi, pi)");
    if (i > 0) {
      require(breakpoints_[i] > breakpoints_[i - 1],
              "PL function: breakpoints must be strictly increasing");
    }
  }
  slopes_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double next = i + 1 < n ? values_[i + 1] : values_[0];
    slopes_[i] = (next - values_[i]) / segment_length(i);
  }
}

double PLFunction::segment_length(std::size_t i) const noexcept {
  const std::size_t n = breakpoints_.size();
  return i + 1 < n ? breakpoints_[i + 1] - breakpoints_[i]
                   : breakpoints_[0] + kTwoPi - breakpoints_[n - 1];
}

std::size_t PLFunction::segment_containing(double t) const {
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  if (it == breakpoints_.begin()) return breakpoints_.size() - 1;
  return static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
}

double PLFunction::evaluate(double t) const {
  const double tn = normalize_angle(t).radians();
  const std::size_t i = segment_containing(tn);
  const double dt = ccw_offset(breakpoints_[i], tn);
  return values_[i] + slopes_[i] * dt;
}

double PLFunction::left_derivative(double t) const {
  const double tn = normalize_angle(t).radians();
  // Incoming segment: the one whose half-open interior (b_i, b_{i+1}] holds t.
  auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), tn);
  if (it == breakpoints_.begin()) return slopes_.back();
  return slopes_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

SmoothFunction::SmoothFunction(SmoothSpec spec) : spec_(std::move(spec)) {
  require(static_cast<bool>(spec_.eval) && static_cast<bool>(spec_.d1),
          "smooth function needs eval and d1 callbacks");
  require(std::isfinite(spec_.grid_anchor), "smooth function: non-finite grid anchor");
  for (auto& k : spec_.kinks) {
    require(std::isfinite(k.jump), "smooth function: non-finite kink jump");
    k.angle = normalize_angle(k.angle).radians();
  }
  std::sort(spec_.kinks.begin(), spec_.kinks.end(),
            [](const Kink& a, const Kink& b) { return a.angle < b.angle; });

  const double lo = spec_.eval(-kPi);
  const double hi = spec_.eval(kPi);
  require(std::abs(lo - hi) <= 1e-9 * (1.0 + std::abs(lo)),
          "smooth function '" + spec_.name + "' is not 2pi-periodic");

  constexpr int kSamples = 64;
  constexpr double kStep = 1e-6;
  constexpr double kTol = 1e-4;
  for (int k = 0; k < kSamples; ++k) {
    const double t = -kPi + (k + 0.37) * kTwoPi / kSamples;
    const bool near_kink = std::any_of(spec_.kinks.begin(), spec_.kinks.end(),
                                       [&](const Kink& kk) {
                                         return circle_distance(kk.angle, t) < 1e-3;
                                       });
    if (near_kink) continue;
    const double fd1 = (spec_.eval(t + kStep) - spec_.eval(t - kStep)) / (2 * kStep);
    const double d1 = spec_.d1(t);
    require(std::abs(fd1 - d1) <= kTol * (1.0 + std::abs(d1)),
            "smooth function '" + spec_.name + "': d1 inconsistent with eval at t=" +
                std::to_string(t));
    if (spec_.d2) {
      const double fd2 = (spec_.d1(t + kStep) - spec_.d1(t - kStep)) / (2 * kStep);
      const double d2 = spec_.d2(t);
      require(std::abs(fd2 - d2) <= kTol * (1.0 + std::abs(d2)),
              "smooth function '" + spec_.name + "': d2 inconsistent with d1 at t=" +
                  std::to_string(t));
    }
  }
}

double CircleFunction::operator()(double t) const {
  return std::visit([t](const auto& f) { return f.evaluate(normalize_angle(t).radians()); },
                    impl_);
}

double CircleFunction::left_derivative(double t) const {
  return std::visit(
      [t](const auto& f) { return f.left_derivative(normalize_angle(t).radians()); }, impl_);
}

std::vector<double> CircleFunction::singular_points() const {
  if (const auto* pl = as_pl()) {
    return {pl->breakpoints().begin(), pl->breakpoints().end()};
  }
  std::vector<double> out;
  for (const auto& k : as_smooth()->kinks()) out.push_back(k.angle);
  return out;
}

double evaluate(const CircleFunction& f, Angle t) { return f(t.radians()); }

double left_derivative(const CircleFunction& f, Angle t) {
  return f.left_derivative(t.radians());
}

LipschitzEstimate lipschitz_constant(const CircleFunction& f, int grid) {
  if (const auto* pl = f.as_pl()) {
    double m = 0.0;
    for (std::size_t i = 0; i < pl->size(); ++i) m = std::max(m, std::abs(pl->slope(i)));
    return {m, true};
  }
  const auto& s = *f.as_smooth();
  double m = 0.0;
  for (int k = 0; k < grid; ++k) {
    m = std::max(m, std::abs(s.left_derivative(-kPi + k * kTwoPi / grid)));
  }
  return {m, false};
}

std::vector<double> antipodal_test_points(const CircleFunction& f, int grid) {
  std::vector<double> pts;
  for (double b : f.singular_points()) {
    pts.push_back(b);
    pts.push_back(antipode(Angle::from_radians(b)).radians());
  }
  for (int k = 0; k < grid; ++k) pts.push_back(-kPi + k * kTwoPi / grid);
  return pts;
}

AntipodalReport antipodal_constant(const CircleFunction& f, double tol, int grid) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidInput, "antipodal tolerance must be > 0");
  AntipodalReport r;
  r.C = (f(0.0) + f(-kPi)) / kPi;
  for (double t : antipodal_test_points(f, grid)) {
    const double s = f(t) + f(antipode(Angle::from_radians(t)).radians());
    r.defect = std::max(r.defect, std::abs(s - kPi * r.C));
  }
  r.satisfied = r.defect <= tol;
  return r;
}

namespace {

double partition_variation(const SmoothFunction& f, int n) {
  const double h = kTwoPi / n;
  const double first = f.left_derivative(f.grid_anchor());
  double prev = first;
  double total = 0.0;
  for (int k = 1; k < n; ++k) {
    const double cur = f.left_derivative(f.grid_anchor() + k * h);
    total += std::abs(cur - prev);
    prev = cur;
  }
  return total + std::abs(first - prev);
}

}  // namespace

double tv_left_derivative(const CircleFunction& f, const TVOptions& opts) {
  if (const auto* pl = f.as_pl()) {
    const std::size_t n = pl->size();
    double tv = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      tv += std::abs(pl->slope(i) - pl->slope((i + n - 1) % n));
    }
    return tv;
  }
  const auto& s = *f.as_smooth();
  int n = std::max(opts.initial_partition, 2);
  double prev = partition_variation(s, n);
  // Two consecutive agreeing refinements, so an aliased coarse grid cannot
  // stop the loop early.
  int agreed = 0;
  while (n <= opts.max_partition / 2) {
    n *= 2;
    const double cur = partition_variation(s, n);
    agreed = std::abs(cur - prev) <= opts.rel_tol * cur + 1e-14 ? agreed + 1 : 0;
    if (agreed == 2) return cur;
    prev = cur;
  }
  throw Error(ErrorCode::TVNotConverged,
              "total variation of the left derivative did not converge",
              {{"partition", static_cast<double>(n)}, {"last", prev}});
}

PLFunction pl_constant(double c) { return PLFunction({-kPi, 0.0}, {c, c}); }

PLFunction pl_scaled(const PLFunction& f, double a) {
  std::vector<double> v(f.values().begin(), f.values().end());
  for (double& x : v) x *= a;
  return PLFunction({f.breakpoints().begin(), f.breakpoints().end()}, std::move(v));
}

PLFunction pl_add_constant(const PLFunction& f, double c) {
  std::vector<double> v(f.values().begin(), f.values().end());
  for (double& x : v) x += c;
  return PLFunction({f.breakpoints().begin(), f.breakpoints().end()}, std::move(v));
}

PLFunction pl_rotated(const PLFunction& f, double shift) {
  std::vector<std::pair<double, double>> s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    s.emplace_back(f.breakpoints()[i] + shift, f.values()[i]);
  }
  return pl_from_samples(std::move(s));
}

PLFunction pl_linear_combination(double a, const PLFunction& f, double b,
                                 const PLFunction& g) {
  std::vector<std::pair<double, double>> s;
  for (double t : f.breakpoints()) s.emplace_back(t, a * f.evaluate(t) + b * g.evaluate(t));
  for (double t : g.breakpoints()) s.emplace_back(t, a * f.evaluate(t) + b * g.evaluate(t));
  return pl_from_samples(std::move(s));
}

PLFunction pl_from_samples(std::vector<std::pair<double, double>> samples) {
  require(!samples.empty(), "PL function needs at least one sample");
  for (auto& [t, v] : samples) t = normalize_angle(t).radians();
  std::sort(samples.begin(), samples.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<double> bp, vals;
  for (const auto& [t, v] : samples) {
    if (!bp.empty() && t - bp.back() <= kCoalesce) continue;
    bp.push_back(t);
    vals.push_back(v);
  }
  // Points just below pi coincide with -pi.
  while (bp.size() > 1 && bp.front() + kTwoPi - bp.back() <= kCoalesce) {
    bp.pop_back();
    vals.pop_back();
  }
  if (bp.size() == 1) {
    bp.push_back(antipode(Angle::from_radians(bp[0])).radians());
    vals.push_back(vals[0]);
    if (bp[1] < bp[0]) {
      std::swap(bp[0], bp[1]);
      std::swap(vals[0], vals[1]);
    }
  }
  return PLFunction(std::move(bp), std::move(vals));
}

}  // namespace circrep
