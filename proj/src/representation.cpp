#include "circrep/representation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "circrep/error.hpp"
#include "circrep/kernels.hpp"

namespace circrep {

SignedMeasure stieltjes_measure(const CircleFunction& f, int bins) {
  if (const auto* pl = f.as_pl()) {
    const std::size_t n = pl->size();
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < n; ++i) {
      atoms.push_back({pl->breakpoints()[i], pl->slope(i) - pl->slope((i + n - 1) % n)});
    }
    return SignedMeasure(std::move(atoms));
  }
  const auto& s = *f.as_smooth();
  if (!s.has_second_derivative()) {
    throw Error(ErrorCode::DerivativeUnavailable,
                "smooth function '" + s.name() + "' has no second derivative");
  }
  if (bins < 1) throw Error(ErrorCode::InvalidInput, "bins must be >= 1");
  const double w = kTwoPi / bins;
  std::vector<double> edges(static_cast<std::size_t>(bins));
  std::vector<double> values(edges.size());
  for (int k = 0; k < bins; ++k) {
    const double left = s.grid_anchor() + k * w;
    edges[static_cast<std::size_t>(k)] = left;
    values[static_cast<std::size_t>(k)] = s.second_derivative(left + 0.5 * w);
  }
  std::vector<Atom> atoms;
  for (const auto& k : s.kinks()) atoms.push_back({k.angle, k.jump});
  return SignedMeasure(std::move(atoms),
                       PiecewiseConstantDensity(std::move(edges), std::move(values)));
}

std::vector<double> reconstruction_grid(const CircleFunction& f, int grid) {
  return antipodal_test_points(f, grid);
}

namespace {

double default_reconstruction_tol(const CircleFunction& f, const RepresentOptions& opts) {
  if (opts.reconstruction_tol) return *opts.reconstruction_tol;
  return f.is_pl() ? 1e-9 : 1e-4;
}

}  // namespace

Representation represent_signed(const CircleFunction& f, const RepresentOptions& opts) {
  const AntipodalReport antip = antipodal_constant(f, opts.antipodal_tol, opts.grid);
  if (!antip.satisfied) {
    throw Error(ErrorCode::NotAntipodal,
                "f(x) + f(-x) is not constant (defect " + std::to_string(antip.defect) + ")",
                {{"defect", antip.defect}, {"C", antip.C}, {"tol", opts.antipodal_tol}});
  }
  Representation rep;
  rep.C = antip.C;
  rep.antipodal_defect = antip.defect;
  rep.tv = tv_left_derivative(f, opts.tv);
  rep.lambda = 0.25 * stieltjes_measure(f, opts.bins);

  if (!equal_measures(pushforward_antipodal(rep.lambda), -rep.lambda, opts.antisymmetry_tol)) {
    throw Error(ErrorCode::NotAntipodal,
                "Stieltjes measure of the left derivative is not antisymmetric");
  }

  const auto grid = reconstruction_grid(f, opts.grid);
  rep.residual = kernels::max_reconstruction_residual(rep.representing_measure(), f, grid);
  const double tol = default_reconstruction_tol(f, opts);
  if (!(rep.residual <= tol)) {
    throw Error(ErrorCode::ReconstructionFailed,
                "representing measure does not reproduce f (residual " +
                    std::to_string(rep.residual) + ")",
                {{"residual", rep.residual}, {"tol", tol}});
  }
  return rep;
}

NonnegRepresentation represent_nonneg(const CircleFunction& f, const RepresentOptions& opts) {
  const Representation rep = represent_signed(f, opts);
  if (rep.C < -opts.gate_tol) {
    throw Error(ErrorCode::NegativeMass, "antipodal constant C is negative", {{"C", rep.C}});
  }
  const double four_c = 4.0 * rep.C;
  if (rep.tv > four_c + opts.gate_tol) {
    throw Error(ErrorCode::NotRepresentableByMeasure,
                "total variation of the left derivative exceeds 4C",
                {{"tv", rep.tv}, {"fourC", four_c}});
  }
  NonnegRepresentation out;
  out.C = rep.C;
  out.tv = rep.tv;
  out.mu = 2.0 * jordan_decomposition(rep.lambda).positive;
  // The uniform part absorbs whatever mass mu lacks, so mass(mubar) = C.
  const double uniform_mass = std::max(rep.C - total_mass(out.mu), 0.0);
  out.mubar = out.mu + SignedMeasure::uniform(uniform_mass);

  const auto grid = reconstruction_grid(f, opts.grid);
  out.residual = kernels::max_reconstruction_residual(out.mubar, f, grid);
  const double tol = default_reconstruction_tol(f, opts);
  if (!(out.residual <= tol)) {
    throw Error(ErrorCode::ReconstructionFailed,
                "non-negative measure does not reproduce f (residual " +
                    std::to_string(out.residual) + ")",
                {{"residual", out.residual}, {"tol", tol}});
  }
  return out;
}

double left_derivative_of_representation(const SignedMeasure& lambda, Angle x) {
  // The formula is left-continuous in x; evaluating just left of x keeps an
  // atom at x and its partner near T(x) on consistent sides even when their
  // positions are not exact antipodes in floating point. The offset is below
  // the atom coalescing resolution.
  const Angle xl = shift(x, -1e-13);
  const Angle tx = antipode(xl);
  return arc_measure(lambda, Arc{tx, kPi}) - arc_measure(lambda, Arc{xl, kPi});
}

double left_derivative_of_representation(const Representation& rep, Angle x) {
  return left_derivative_of_representation(rep.lambda, x);
}

namespace {

struct TestFunctionTraits {
  double (*phi)(double);
  double (*dphi)(double);
  double (*primitive)(double);  // integral of phi from 0 to a
};

TestFunctionTraits traits(TestFunction phi) {
  switch (phi) {
    case TestFunction::Constant:
      return {[](double) { return 1.0; }, [](double) { return 0.0; },
              [](double a) { return a; }};
    case TestFunction::Identity:
      return {[](double t) { return t; }, [](double) { return 1.0; },
              [](double a) { return 0.5 * a * a; }};
    case TestFunction::Square:
      return {[](double t) { return t * t; }, [](double t) { return 2.0 * t; },
              [](double a) { return a * a * a / 3.0; }};
    case TestFunction::Cosine:
      return {[](double t) { return std::cos(t); }, [](double t) { return -std::sin(t); },
              [](double a) { return std::sin(a); }};
  }
  throw Error(ErrorCode::InvalidInput, "unknown test function");
}

// Integral of phi(z(s)) from 0 to u, z the 2pi-periodic zigzag.
double periodic_primitive(const TestFunctionTraits& tr, double u) {
  const double k = std::floor((u + kPi) / kTwoPi);
  const double r = u - k * kTwoPi;
  const double period = 2.0 * tr.primitive(kPi);
  return k * period + (r < 0 ? -tr.primitive(-r) : tr.primitive(r));
}

// lambda{x : d(x0, x) < t}.
double sublevel_measure(const SignedMeasure& m, double x0, double t) {
  if (t <= 0.0) return 0.0;
  if (t > kPi) return total_mass(m);
  double s = 0.0;
  for (const auto& a : m.atoms()) {
    if (circle_distance(x0, a.angle) < t) s += a.weight;
  }
  return s + m.density().integral(x0 - t, x0 + t);
}

double support_radius(const SignedMeasure& m, double x0) {
  double r = 0.0;
  for (const auto& a : m.atoms()) r = std::max(r, circle_distance(x0, a.angle));
  const auto& d = m.density();
  const double far = antipode(Angle::from_radians(x0)).radians();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.values()[i] == 0.0) continue;
    const double lo = d.breakpoints()[i];
    if (ccw_offset(lo, far) < d.segment_length(i)) return kPi;
    r = std::max({r, circle_distance(x0, lo), circle_distance(x0, lo + d.segment_length(i))});
  }
  return r;
}

}  // namespace

FubiniResult fubini_identity(const SignedMeasure& lambda, Angle x0, TestFunction phi, double T) {
  const double x = x0.radians();
  if (!(T >= 0.0) || !std::isfinite(T) || support_radius(lambda, x) > T) {
    throw Error(ErrorCode::InvalidInput, "g = d(x0, .) must map the support into [-T, T]");
  }
  const auto tr = traits(phi);

  FubiniResult r;
  for (const auto& a : lambda.atoms()) r.lhs += a.weight * tr.phi(circle_distance(x, a.angle));
  const auto& d = lambda.density();
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double lo = d.breakpoints()[i] - x;
    r.lhs += d.values()[i] *
             (periodic_primitive(tr, lo + d.segment_length(i)) - periodic_primitive(tr, lo));
  }

  // t -> lambda{g < t} is piecewise linear with jumps at these distances.
  std::vector<double> cuts{0.0, std::min(kPi, T), T};
  for (const auto& a : lambda.atoms()) cuts.push_back(circle_distance(x, a.angle));
  for (double b : d.breakpoints()) cuts.push_back(circle_distance(x, b));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const double mass = total_mass(lambda);
  double integral = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i];
    const double b = cuts[i + 1];
    if (b - a <= 0.0) continue;
    auto integrand = [&](double t) { return tr.dphi(t) * sublevel_measure(lambda, x, t); };
    integral += boost::math::quadrature::gauss_kronrod<double, 15>::integrate(integrand, a, b,
                                                                              15, 1e-13);
  }
  // On [-T, 0] the sublevel sets are empty.
  r.rhs = tr.phi(T) * mass - integral;
  r.residual = std::abs(r.lhs - r.rhs);
  return r;
}

double fubini_identity_check(const SignedMeasure& lambda, Angle x0, TestFunction phi, double T) {
  return fubini_identity(lambda, x0, phi, T).residual;
}

bool uniqueness_check(const CircleFunction& f, const SignedMeasure& lambda,
                      const SignedMeasure& eta, double tol) {
  const auto grid = reconstruction_grid(f);
  const double rl = kernels::max_reconstruction_residual(lambda, f, grid);
  const double re = kernels::max_reconstruction_residual(eta, f, grid);
  if (!(rl <= tol) || !(re <= tol)) {
    throw Error(ErrorCode::NotARepresentation, "measure does not represent f",
                {{"residual_lambda", rl}, {"residual_eta", re}});
  }
  return equal_measures(antisymmetric_part(lambda), antisymmetric_part(eta), tol);
}

}  // namespace circrep
