#pragma once

#include <optional>

#include "circrep/circle_function.hpp"
#include "circrep/signed_measure.hpp"

namespace circrep {

struct RepresentOptions {
  double antipodal_tol = 1e-9;
  // Defaults to 1e-9 for PL input and 1e-4 for smooth input.
  std::optional<double> reconstruction_tol;
  double antisymmetry_tol = 1e-10;
  // Slack in the non-negative gate TV <= 4C.
  double gate_tol = 1e-9;
  int bins = 4096;  // density bins for smooth input
  int grid = kDefaultTestGrid;
  TVOptions tv;
};

// f = f_{lambda + C H^1} with T_# lambda = -lambda.
struct Representation {
  SignedMeasure lambda;
  double C = 0.0;
  double tv = 0.0;  // total variation of the left derivative of f
  double antipodal_defect = 0.0;
  double residual = 0.0;  // sup reconstruction error on the test grid

  SignedMeasure representing_measure() const { return lambda + SignedMeasure::uniform(C); }
};

// f = f_{mubar}, mubar = mu + (C - mass(mu)) H^1 >= 0.
struct NonnegRepresentation {
  SignedMeasure mu;
  double C = 0.0;
  SignedMeasure mubar;
  double tv = 0.0;
  double residual = 0.0;
};

// d(left derivative): atoms at PL breakpoints; midpoint-sampled second
// derivative on `bins` uniform bins (from the function's grid anchor) plus
// kink atoms for smooth input. Throws DerivativeUnavailable without d2.
SignedMeasure stieltjes_measure(const CircleFunction& f, int bins = 4096);

Representation represent_signed(const CircleFunction& f, const RepresentOptions& opts = {});

NonnegRepresentation represent_nonneg(const CircleFunction& f,
                                      const RepresentOptions& opts = {});

// lambda[T(x), x) - lambda[x, T(x)).
double left_derivative_of_representation(const Representation& rep, Angle x);
double left_derivative_of_representation(const SignedMeasure& lambda, Angle x);

// Singular points, antipodes, uniform grid.
std::vector<double> reconstruction_grid(const CircleFunction& f, int grid = kDefaultTestGrid);

enum class TestFunction { Constant, Identity, Square, Cosine };

struct FubiniResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
};

// Both sides of
//   int phi(g) dlambda = phi(T) lambda(S^1) - int_{-T}^{T} phi'(t) lambda{g < t} dt
// for g = d(x0, .). The left side is closed form, the right side adaptive
// Gauss-Kronrod between the jump points of t -> lambda{g < t}.
FubiniResult fubini_identity(const SignedMeasure& lambda, Angle x0, TestFunction phi, double T);

double fubini_identity_check(const SignedMeasure& lambda, Angle x0, TestFunction phi, double T);

// Throws NotARepresentation unless both measures reproduce f within tol;
// then compares antisymmetric parts.
bool uniqueness_check(const CircleFunction& f, const SignedMeasure& lambda,
                      const SignedMeasure& eta, double tol);

}  // namespace circrep
