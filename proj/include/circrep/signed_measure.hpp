#pragma once

#include <span>
#include <vector>

#include "circrep/circle.hpp"

namespace circrep {

struct Atom {
  double angle = 0.0;
  double weight = 0.0;
};

// Piecewise-constant density, mass per radian. Segment i runs from
// breakpoint i to breakpoint i+1; the last one wraps to the first. No
// breakpoints means the zero density.
class PiecewiseConstantDensity {
 public:
  PiecewiseConstantDensity() = default;
  // Breakpoints are normalized and sorted; segments shorter than 1e-12 are
  // absorbed into their successor and equal neighbours merged.
  PiecewiseConstantDensity(std::vector<double> breakpoints, std::vector<double> values);

  static PiecewiseConstantDensity uniform(double value);

  bool empty() const noexcept { return breakpoints_.empty(); }
  std::size_t size() const noexcept { return breakpoints_.size(); }
  std::span<const double> breakpoints() const noexcept { return breakpoints_; }
  std::span<const double> values() const noexcept { return values_; }
  double segment_length(std::size_t i) const noexcept;

  double value_at(double t) const;
  double total() const noexcept { return total_; }

  // Integral over [a, b] of the periodic density, for any reals a <= b.
  double integral(double a, double b) const;

 private:
  double primitive(double t) const;  // integral from -pi to t, any real t

  std::vector<double> breakpoints_;
  std::vector<double> values_;
  std::vector<double> cumulative_;  // integral from -pi to breakpoint i
  double total_ = 0.0;
};

// Finite signed Borel measure on S^1: atoms plus piecewise-constant density.
class SignedMeasure {
 public:
  SignedMeasure() = default;
  // Atom angles are normalized; atoms within 1e-12 are coalesced and exact
  // zeros dropped.
  explicit SignedMeasure(std::vector<Atom> atoms, PiecewiseConstantDensity density = {});

  static SignedMeasure dirac(double angle, double weight = 1.0);
  // mass * H^1, i.e. uniform density mass / (2 pi).
  static SignedMeasure uniform(double mass);

  std::span<const Atom> atoms() const noexcept { return atoms_; }
  const PiecewiseConstantDensity& density() const noexcept { return density_; }

  friend SignedMeasure operator+(const SignedMeasure& a, const SignedMeasure& b);
  friend SignedMeasure operator-(const SignedMeasure& a, const SignedMeasure& b);
  friend SignedMeasure operator*(double s, const SignedMeasure& m);
  friend SignedMeasure operator-(const SignedMeasure& m) { return -1.0 * m; }

 private:
  std::vector<Atom> atoms_;
  PiecewiseConstantDensity density_;
};

struct JordanPair {
  SignedMeasure positive;
  SignedMeasure negative;
};

double total_mass(const SignedMeasure& m);
double tv_norm(const SignedMeasure& m);

SignedMeasure pushforward_antipodal(const SignedMeasure& m);
SignedMeasure rotated(const SignedMeasure& m, double shift);
SignedMeasure antisymmetric_part(const SignedMeasure& m);
SignedMeasure symmetric_part(const SignedMeasure& m);
JordanPair jordan_decomposition(const SignedMeasure& m);

bool is_nonnegative(const SignedMeasure& m, double tol = 0.0);

double arc_measure(const SignedMeasure& m, const Arc& arc);

// f_m(x) = integral of d(x, y) m(dy), closed form.
double integrate_distance(const SignedMeasure& m, Angle x);
double integrate_distance(const SignedMeasure& m, double x);

// Equality in the atoms + density class: atoms and density segments of the
// difference are compared directly. Agreement on all half-open arcs of length
// <= pi is equivalent to this.
bool equal_measures(const SignedMeasure& a, const SignedMeasure& b, double tol);

// Integral of the zigzag z(u) = |u| (2pi-periodic) from 0 to u.
double zigzag_primitive(double u);

}  // namespace circrep
