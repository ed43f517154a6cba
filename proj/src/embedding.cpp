#include "circrep/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "circrep/error.hpp"
#include "circrep/representation.hpp"

namespace circrep {

HemispherePoint::HemispherePoint(double azimuth, double polar)
    : azimuth_(Angle::from_radians(azimuth)), polar_(polar) {
  if (!(polar >= 0.0 && polar <= kPi / 2)) {
    throw Error(ErrorCode::InvalidInput,
                "hemisphere polar angle must lie in [0, pi/2] (got " + std::to_string(polar) + ")");
  }
}

SpherePoint HemispherePoint::to_sphere_point() const {
  const double s = std::sin(polar_);
  const double x = s * std::cos(azimuth_.radians());
  const double y = s * std::sin(azimuth_.radians());
  // Recompute z from x, y so the norm is 1 to rounding.
  return SpherePoint::from_coordinates(x, y, on_boundary() ? 0.0 : std::cos(polar_));
}

double hemisphere_distance(const HemispherePoint& p, double t) {
  const double s = std::sin(p.polar());
  return std::acos(std::clamp(s * std::cos(t - p.azimuth().radians()), -1.0, 1.0));
}

SmoothFunction distance_function(const HemispherePoint& p) {
  if (p.on_boundary()) {
    throw Error(ErrorCode::BoundaryPoint,
                "boundary point of the hemisphere: f_p is not smooth (use the Dirac path)");
  }
  const double s = std::sin(p.polar());
  const double theta = p.azimuth().radians();
  SmoothSpec spec;
  spec.name = "hemisphere_distance(theta=" + std::to_string(theta) +
              ", alpha=" + std::to_string(p.polar()) + ")";
  spec.eval = [s, theta](double t) {
    return std::acos(std::clamp(s * std::cos(t - theta), -1.0, 1.0));
  };
  spec.d1 = [s, theta](double t) {
    const double c = std::cos(t - theta);
    return s * std::sin(t - theta) / std::sqrt(1.0 - s * s * c * c);
  };
  spec.d2 = [s, theta](double t) {
    const double c = std::cos(t - theta);
    const double u = 1.0 - s * s * c * c;
    return s * c * (1.0 - s * s) / (u * std::sqrt(u));
  };
  spec.grid_anchor = theta + kPi / 2;
  return SmoothFunction(std::move(spec));
}

ProbabilityMeasure embed(const HemispherePoint& p, int n) {
  if (n < 16) throw Error(ErrorCode::InvalidInput, "embed: n must be >= 16");
  if (p.on_boundary()) return ProbabilityMeasure::from(SignedMeasure::dirac(p.azimuth().radians()));
  RepresentOptions opts;
  opts.bins = n;
  try {
    return ProbabilityMeasure::from(represent_nonneg(distance_function(p), opts).mubar);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotRepresentableByMeasure || e.code() == ErrorCode::NegativeMass) {
      throw Error(ErrorCode::InternalError,
                  std::string("hemisphere distance function rejected by the measure gate: ") +
                      e.what(),
                  e.values());
    }
    throw;
  }
}

namespace {

double golden_max(const auto& g, double a, double b) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - r * (b - a), x2 = a + r * (b - a);
  double f1 = g(x1), f2 = g(x2);
  for (int it = 0; it < 200 && b - a > 1e-13; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + r * (b - a);
      f2 = g(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - r * (b - a);
      f1 = g(x1);
    }
  }
  return std::max({f1, f2, g(a), g(b)});
}

}  // namespace

double supnorm_distance(const HemispherePoint& p, const HemispherePoint& q, int n) {
  if (n < 16) throw Error(ErrorCode::InvalidInput, "supnorm_distance: n must be >= 16");
  auto gap = [&](double t) { return std::abs(hemisphere_distance(p, t) - hemisphere_distance(q, t)); };
  const double h = kTwoPi / n;
  std::vector<double> vals(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) vals[static_cast<std::size_t>(k)] = gap(-kPi + k * h);
  // Polish every discrete local maximum within a grid step of the best one.
  const double top = *std::max_element(vals.begin(), vals.end());
  double best = top;
  for (int k = 0; k < n; ++k) {
    const double v = vals[static_cast<std::size_t>(k)];
    const double prev = vals[static_cast<std::size_t>((k + n - 1) % n)];
    const double next = vals[static_cast<std::size_t>((k + 1) % n)];
    if (v < prev || v < next || v < top - 2 * h) continue;
    const double t = -kPi + k * h;
    best = std::max(best, golden_max(gap, t - h, t + h));
  }
  return best;
}

IsometryReport isometry_report(std::span<const HemispherePoint> points, int n, int dirac_grid) {
  if (points.size() < 2) throw Error(ErrorCode::InvalidInput, "isometry report needs >= 2 points");
  const std::size_t k = points.size();
  std::vector<DiscreteProbability> quantized;
  quantized.reserve(k);
  for (const auto& p : points) quantized.push_back(quantize(embed(p, n), n));

  IsometryReport r;
  r.size = k;
  r.w1 = pairwise_w1(quantized);
  r.sphere.assign(k * k, 0.0);
  r.residual.assign(k * k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      r.sphere[i * k + j] =
          sphere_distance(points[i].to_sphere_point(), points[j].to_sphere_point());
      r.residual[i * k + j] = std::abs(r.w1[i * k + j] - r.sphere[i * k + j]);
      r.max_residual = std::max(r.max_residual, r.residual[i * k + j]);
    }
  }
  r.dirac_residual.assign(k, 0.0);
  const auto n_dirac = static_cast<std::ptrdiff_t>(k) * dirac_grid;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t idx = 0; idx < n_dirac; ++idx) {
    const auto i = static_cast<std::size_t>(idx / dirac_grid);
    const double x = -kPi + static_cast<double>(idx % dirac_grid) * kTwoPi / dirac_grid;
    const double res = std::abs(w1_circle(quantized[i], DiscreteProbability::dirac(x)) -
                                hemisphere_distance(points[i], x));
#pragma omp critical
    r.dirac_residual[i] = std::max(r.dirac_residual[i], res);
  }
  for (double d : r.dirac_residual) r.max_dirac_residual = std::max(r.max_dirac_residual, d);
  return r;
}

}  // namespace circrep
