#pragma once

#include <span>
#include <vector>

#include "circrep/circle.hpp"
#include "circrep/circle_function.hpp"
#include "circrep/wasserstein.hpp"

namespace circrep {

// Point of the closed upper hemisphere H+ in S^2: azimuth theta and polar
// angle alpha from the north pole; alpha = pi/2 lies on S^1.
class HemispherePoint {
 public:
  // Throws InvalidInput unless 0 <= alpha <= pi/2.
  HemispherePoint(double azimuth, double polar);

  static HemispherePoint north_pole() { return {0.0, 0.0}; }

  Angle azimuth() const noexcept { return azimuth_; }
  double polar() const noexcept { return polar_; }
  bool on_boundary() const noexcept { return polar_ == kPi / 2; }
  SpherePoint to_sphere_point() const;

 private:
  Angle azimuth_;
  double polar_;
};

// f_p(q(t)) = d_{S^2}(p, q(t)) = arccos(sin(alpha) cos(t - theta)); valid on
// the boundary too.
double hemisphere_distance(const HemispherePoint& p, double t);

// f_p with analytic derivatives; the discretization grid is anchored at the
// inflection point theta + pi/2. Throws BoundaryPoint for alpha = pi/2.
SmoothFunction distance_function(const HemispherePoint& p);

// Phi(p): delta at theta on the boundary, otherwise the non-negative
// representing measure of f_p built on n density bins.
ProbabilityMeasure embed(const HemispherePoint& p, int n = 4096);

// max_t |f_p(t) - f_q(t)| on an n-grid, polished by golden-section search.
double supnorm_distance(const HemispherePoint& p, const HemispherePoint& q, int n = 4096);

struct IsometryReport {
  std::size_t size = 0;
  std::vector<double> w1;         // W1(Phi(p_i), Phi(p_j)), row-major
  std::vector<double> sphere;     // d_{S^2}(p_i, p_j)
  std::vector<double> residual;   // |w1 - sphere|
  std::vector<double> dirac_residual;  // per point: max_x |W1(Phi(p), delta_x) - f_p(x)|
  double max_residual = 0.0;
  double max_dirac_residual = 0.0;
};

IsometryReport isometry_report(std::span<const HemispherePoint> points, int n = 4096,
                               int dirac_grid = 64);

}  // namespace circrep
