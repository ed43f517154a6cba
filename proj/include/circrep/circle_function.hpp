#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "circrep/circle.hpp"

namespace circrep {

// Continuous piecewise-linear function on S^1. Linear in the angle between
// consecutive breakpoints; the last segment wraps around to the first
// breakpoint.
class PLFunction {
 public:
  // breakpoints: strictly increasing, in [-pi, pi), at least two.
  PLFunction(std::vector<double> breakpoints, std::vector<double> values);

  std::span<const double> breakpoints() const noexcept { return breakpoints_; }
  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return breakpoints_.size(); }

  // Slope of the segment starting at breakpoint i.
  double slope(std::size_t i) const noexcept { return slopes_[i]; }
  // Length of the segment starting at breakpoint i.
  double segment_length(std::size_t i) const noexcept;

  double evaluate(double t) const;
  double left_derivative(double t) const;

  // Index of the segment [b_i, b_{i+1}) containing normalized t.
  std::size_t segment_containing(double t) const;

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
  std::vector<double> slopes_;
};

// Location and size of a jump of the left derivative of a smooth function.
struct Kink {
  double angle = 0.0;
  double jump = 0.0;
};

// 2pi-periodic function of the lifted angle with analytic derivatives.
struct SmoothSpec {
  std::string name;
  std::function<double(double)> eval;
  std::function<double(double)> d1;  // left derivative of eval
  std::function<double(double)> d2;  // second derivative; optional
  std::vector<Kink> kinks;
  // Left edge of the first bin of any uniform discretization grid.
  double grid_anchor = -kPi;
};

class SmoothFunction {
 public:
  // Spot-checks periodicity and the d1/d2 callbacks against finite
  // differences; throws InvalidInput on inconsistency.
  explicit SmoothFunction(SmoothSpec spec);

  const std::string& name() const noexcept { return spec_.name; }
  double evaluate(double t) const { return spec_.eval(t); }
  double left_derivative(double t) const { return spec_.d1(t); }
  bool has_second_derivative() const noexcept { return static_cast<bool>(spec_.d2); }
  double second_derivative(double t) const { return spec_.d2(t); }
  std::span<const Kink> kinks() const noexcept { return spec_.kinks; }
  double grid_anchor() const noexcept { return spec_.grid_anchor; }

 private:
  SmoothSpec spec_;
};

class CircleFunction {
 public:
  CircleFunction(PLFunction f) : impl_(std::move(f)) {}
  CircleFunction(SmoothFunction f) : impl_(std::move(f)) {}

  bool is_pl() const noexcept { return std::holds_alternative<PLFunction>(impl_); }
  const PLFunction* as_pl() const noexcept { return std::get_if<PLFunction>(&impl_); }
  const SmoothFunction* as_smooth() const noexcept {
    return std::get_if<SmoothFunction>(&impl_);
  }

  double operator()(double t) const;
  double left_derivative(double t) const;

  // Points where the function is not smooth (PL breakpoints or kinks).
  std::vector<double> singular_points() const;

 private:
  std::variant<PLFunction, SmoothFunction> impl_;
};

double evaluate(const CircleFunction& f, Angle t);
double left_derivative(const CircleFunction& f, Angle t);

struct LipschitzEstimate {
  double value = 0.0;
  bool exact = false;  // false: lower bound from a sample grid
};

LipschitzEstimate lipschitz_constant(const CircleFunction& f, int grid = 4096);

struct AntipodalReport {
  double C = 0.0;
  double defect = 0.0;
  bool satisfied = false;
};

inline constexpr int kDefaultTestGrid = 4096;

// Test set for condition f(x) + f(-x) = pi C: singular points, their
// antipodes and a uniform grid.
std::vector<double> antipodal_test_points(const CircleFunction& f,
                                          int grid = kDefaultTestGrid);

AntipodalReport antipodal_constant(const CircleFunction& f, double tol = 1e-9,
                                   int grid = kDefaultTestGrid);

struct TVOptions {
  double rel_tol = 1e-8;
  int initial_partition = 64;
  int max_partition = 1 << 22;
};

// Total variation of the left derivative over S^1. Exact for PL; adaptive
// partition refinement otherwise (throws TVNotConverged).
double tv_left_derivative(const CircleFunction& f, const TVOptions& opts = {});

// PL arithmetic.
PLFunction pl_constant(double c);
PLFunction pl_scaled(const PLFunction& f, double a);
PLFunction pl_add_constant(const PLFunction& f, double c);
PLFunction pl_rotated(const PLFunction& f, double shift);
PLFunction pl_linear_combination(double a, const PLFunction& f, double b,
                                 const PLFunction& g);

// PL function through the given (angle, value) samples; angles normalized,
// sorted, and coalesced within 1e-12.
PLFunction pl_from_samples(std::vector<std::pair<double, double>> samples);

}  // namespace circrep
