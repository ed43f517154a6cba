#include "circrep/signed_measure.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "circrep/error.hpp"

namespace circrep {

namespace {

constexpr double kCoalesce = 1e-12;

}  // namespace

PiecewiseConstantDensity::PiecewiseConstantDensity(std::vector<double> breakpoints,
                                                   std::vector<double> values) {
  if (breakpoints.size() != values.size()) {
    throw Error(ErrorCode::InvalidInput, "density: breakpoints and values differ in length");
  }
  std::vector<std::pair<double, double>> seg;
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw Error(ErrorCode::InvalidInput, "density: non-finite value at index " +
                                               std::to_string(i));
    }
    seg.emplace_back(normalize_angle(breakpoints[i]).radians(), values[i]);
  }
  std::sort(seg.begin(), seg.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  // A sliver [b_i, b_{i+1}) is dropped by letting b_{i+1}'s value start at b_i.
  std::vector<std::pair<double, double>> clean;
  for (const auto& s : seg) {
    if (!clean.empty() && s.first - clean.back().first <= kCoalesce) {
      clean.back().second = s.second;
      continue;
    }
    clean.push_back(s);
  }
  while (clean.size() > 1 && clean.front().first + kTwoPi - clean.back().first <= kCoalesce) {
    clean.pop_back();
  }
  // Merge neighbours with equal values, cyclically.
  std::vector<std::pair<double, double>> merged;
  for (const auto& s : clean) {
    if (!merged.empty() && merged.back().second == s.second) continue;
    merged.push_back(s);
  }
  if (merged.size() > 1 && merged.front().second == merged.back().second) {
    merged.erase(merged.begin());
  }
  if (merged.size() == 1) {
    if (merged[0].second == 0.0) merged.clear();
    else merged[0].first = -kPi;
  }

  for (const auto& [b, v] : merged) {
    breakpoints_.push_back(b);
    values_.push_back(v);
  }
  const std::size_t n = breakpoints_.size();
  cumulative_.resize(n);
  if (n == 0) return;
  double acc = values_[n - 1] * (breakpoints_[0] + kPi);
  for (std::size_t i = 0; i < n; ++i) {
    cumulative_[i] = acc;
    if (i + 1 < n) acc += values_[i] * (breakpoints_[i + 1] - breakpoints_[i]);
  }
  total_ = acc + values_[n - 1] * (kPi - breakpoints_[n - 1]);
}

PiecewiseConstantDensity PiecewiseConstantDensity::uniform(double value) {
  return PiecewiseConstantDensity({-kPi}, {value});
}

double PiecewiseConstantDensity::segment_length(std::size_t i) const noexcept {
  const std::size_t n = breakpoints_.size();
  return i + 1 < n ? breakpoints_[i + 1] - breakpoints_[i]
                   : breakpoints_[0] + kTwoPi - breakpoints_[n - 1];
}

double PiecewiseConstantDensity::value_at(double t) const {
  if (empty()) return 0.0;
  const double tn = normalize_angle(t).radians();
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), tn);
  if (it == breakpoints_.begin()) return values_.back();
  return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

double PiecewiseConstantDensity::primitive(double t) const {
  if (empty()) return 0.0;
  const double k = std::floor((t + kPi) / kTwoPi);
  double r = t - k * kTwoPi;
  if (r >= kPi) r = kPi;  // rounding guard; the primitive is continuous
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), r);
  double base;
  if (it == breakpoints_.begin()) {
    base = values_.back() * (r + kPi);
  } else {
    const std::size_t i = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
    base = cumulative_[i] + values_[i] * (r - breakpoints_[i]);
  }
  return k * total_ + base;
}

double PiecewiseConstantDensity::integral(double a, double b) const {
  return primitive(b) - primitive(a);
}

SignedMeasure::SignedMeasure(std::vector<Atom> atoms, PiecewiseConstantDensity density)
    : density_(std::move(density)) {
  for (auto& a : atoms) {
    if (!std::isfinite(a.weight)) {
      throw Error(ErrorCode::InvalidInput, "atom weight must be finite");
    }
    a.angle = normalize_angle(a.angle).radians();
  }
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& x, const Atom& y) { return x.angle < y.angle; });
  for (const auto& a : atoms) {
    if (!atoms_.empty() && a.angle - atoms_.back().angle <= kCoalesce) {
      atoms_.back().weight += a.weight;
    } else {
      atoms_.push_back(a);
    }
  }
  if (atoms_.size() > 1 && atoms_.front().angle + kTwoPi - atoms_.back().angle <= kCoalesce) {
    atoms_.front().weight += atoms_.back().weight;
    atoms_.pop_back();
  }
  std::erase_if(atoms_, [](const Atom& a) { return a.weight == 0.0; });
}

SignedMeasure SignedMeasure::dirac(double angle, double weight) {
  return SignedMeasure({Atom{angle, weight}});
}

SignedMeasure SignedMeasure::uniform(double mass) {
  return SignedMeasure({}, PiecewiseConstantDensity::uniform(mass / kTwoPi));
}

namespace {

PiecewiseConstantDensity combine(double sa, const PiecewiseConstantDensity& a, double sb,
                                 const PiecewiseConstantDensity& b) {
  std::vector<double> bp(a.breakpoints().begin(), a.breakpoints().end());
  bp.insert(bp.end(), b.breakpoints().begin(), b.breakpoints().end());
  if (bp.empty()) return {};
  std::sort(bp.begin(), bp.end());
  std::vector<double> uniq;
  for (double t : bp) {
    if (uniq.empty() || t - uniq.back() > kCoalesce) uniq.push_back(t);
  }
  while (uniq.size() > 1 && uniq.front() + kTwoPi - uniq.back() <= kCoalesce) uniq.pop_back();
  std::vector<double> vals(uniq.size());
  for (std::size_t i = 0; i < uniq.size(); ++i) {
    const double next = i + 1 < uniq.size() ? uniq[i + 1] : uniq[0] + kTwoPi;
    const double mid = 0.5 * (uniq[i] + next);
    vals[i] = sa * a.value_at(mid) + sb * b.value_at(mid);
  }
  return PiecewiseConstantDensity(std::move(uniq), std::move(vals));
}

SignedMeasure affine(double sa, const SignedMeasure& a, double sb, const SignedMeasure& b) {
  std::vector<Atom> atoms;
  for (const auto& x : a.atoms()) atoms.push_back({x.angle, sa * x.weight});
  for (const auto& x : b.atoms()) atoms.push_back({x.angle, sb * x.weight});
  return SignedMeasure(std::move(atoms), combine(sa, a.density(), sb, b.density()));
}

}  // namespace

SignedMeasure operator+(const SignedMeasure& a, const SignedMeasure& b) {
  return affine(1.0, a, 1.0, b);
}

SignedMeasure operator-(const SignedMeasure& a, const SignedMeasure& b) {
  return affine(1.0, a, -1.0, b);
}

SignedMeasure operator*(double s, const SignedMeasure& m) {
  return affine(s, m, 0.0, SignedMeasure());
}

double total_mass(const SignedMeasure& m) {
  double s = 0.0;
  for (const auto& a : m.atoms()) s += a.weight;
  return s + m.density().total();
}

double tv_norm(const SignedMeasure& m) {
  double s = 0.0;
  for (const auto& a : m.atoms()) s += std::abs(a.weight);
  const auto& d = m.density();
  for (std::size_t i = 0; i < d.size(); ++i) s += std::abs(d.values()[i]) * d.segment_length(i);
  return s;
}

SignedMeasure rotated(const SignedMeasure& m, double shift) {
  std::vector<Atom> atoms;
  for (const auto& a : m.atoms()) atoms.push_back({a.angle + shift, a.weight});
  std::vector<double> bp(m.density().breakpoints().begin(), m.density().breakpoints().end());
  for (double& b : bp) b += shift;
  return SignedMeasure(std::move(atoms),
                       PiecewiseConstantDensity(std::move(bp),
                                                {m.density().values().begin(),
                                                 m.density().values().end()}));
}

SignedMeasure pushforward_antipodal(const SignedMeasure& m) {
  std::vector<Atom> atoms;
  for (const auto& a : m.atoms()) atoms.push_back({antipode(Angle::from_radians(a.angle)).radians(), a.weight});
  std::vector<double> bp;
  for (double b : m.density().breakpoints()) bp.push_back(antipode(Angle::from_radians(b)).radians());
  return SignedMeasure(std::move(atoms),
                       PiecewiseConstantDensity(std::move(bp),
                                                {m.density().values().begin(),
                                                 m.density().values().end()}));
}

SignedMeasure antisymmetric_part(const SignedMeasure& m) {
  return affine(0.5, m, -0.5, pushforward_antipodal(m));
}

SignedMeasure symmetric_part(const SignedMeasure& m) {
  return affine(0.5, m, 0.5, pushforward_antipodal(m));
}

JordanPair jordan_decomposition(const SignedMeasure& m) {
  std::vector<Atom> pos, neg;
  for (const auto& a : m.atoms()) {
    if (a.weight > 0) pos.push_back(a);
    else neg.push_back({a.angle, -a.weight});
  }
  const auto& d = m.density();
  std::vector<double> bp(d.breakpoints().begin(), d.breakpoints().end());
  std::vector<double> vp, vn;
  for (double v : d.values()) {
    vp.push_back(std::max(v, 0.0));
    vn.push_back(std::max(-v, 0.0));
  }
  return {SignedMeasure(std::move(pos), PiecewiseConstantDensity(bp, std::move(vp))),
          SignedMeasure(std::move(neg), PiecewiseConstantDensity(bp, std::move(vn)))};
}

bool is_nonnegative(const SignedMeasure& m, double tol) {
  for (const auto& a : m.atoms()) {
    if (a.weight < -tol) return false;
  }
  for (double v : m.density().values()) {
    if (v < -tol) return false;
  }
  return true;
}

double arc_measure(const SignedMeasure& m, const Arc& arc) {
  double s = 0.0;
  for (const auto& a : m.atoms()) {
    if (arc_contains(arc, Angle::from_radians(a.angle))) s += a.weight;
  }
  const double start = arc.start.radians();
  return s + m.density().integral(start, start + std::min(arc.length, kTwoPi));
}

double zigzag_primitive(double u) {
  const double k = std::floor((u + kPi) / kTwoPi);
  const double r = u - k * kTwoPi;
  return k * kPi * kPi + 0.5 * r * std::abs(r);
}

double integrate_distance(const SignedMeasure& m, double x) {
  double s = 0.0;
  for (const auto& a : m.atoms()) s += a.weight * circle_distance(x, a.angle);
  const auto& d = m.density();
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double lo = d.breakpoints()[i] - x;
    s += d.values()[i] * (zigzag_primitive(lo + d.segment_length(i)) - zigzag_primitive(lo));
  }
  return s;
}

double integrate_distance(const SignedMeasure& m, Angle x) {
  return integrate_distance(m, x.radians());
}

bool equal_measures(const SignedMeasure& a, const SignedMeasure& b, double tol) {
  const SignedMeasure diff = a - b;
  for (const auto& x : diff.atoms()) {
    if (std::abs(x.weight) > tol) return false;
  }
  for (double v : diff.density().values()) {
    if (std::abs(v) > tol) return false;
  }
  return true;
}

}  // namespace circrep
