#include "circrep/circle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "circrep/error.hpp"

namespace circrep {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::TVNotConverged: return "TVNotConverged";
    case ErrorCode::DerivativeUnavailable: return "DerivativeUnavailable";
    case ErrorCode::NotAntipodal: return "NotAntipodal";
    case ErrorCode::ReconstructionFailed: return "ReconstructionFailed";
    case ErrorCode::NotRepresentableByMeasure: return "NotRepresentableByMeasure";
    case ErrorCode::NegativeMass: return "NegativeMass";
    case ErrorCode::NotARepresentation: return "NotARepresentation";
    case ErrorCode::ProblemTooLarge: return "ProblemTooLarge";
    case ErrorCode::BoundaryPoint: return "BoundaryPoint";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

bool is_mathematical(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput:
    case ErrorCode::SchemaError:
    case ErrorCode::UnknownFixture:
      return false;
    default:
      return true;
  }
}

Angle Angle::from_radians(double t) {
  if (!std::isfinite(t)) {
    throw Error(ErrorCode::InvalidInput, "angle must be finite");
  }
  double r = t - kTwoPi * std::floor((t + kPi) / kTwoPi);
  // floor() can leave r a rounding step outside [-pi, pi).
  if (r >= kPi) r -= kTwoPi;
  if (r < -kPi) r += kTwoPi;
  if (r >= kPi) r = -kPi;
  return Angle(r);
}

Angle normalize_angle(double t) { return Angle::from_radians(t); }

double circle_distance(double a, double b) {
  double d = std::fmod(std::abs(a - b), kTwoPi);
  return std::min(d, kTwoPi - d);
}

double circle_distance(Angle a, Angle b) {
  return circle_distance(a.radians(), b.radians());
}

Angle antipode(Angle a) { return Angle::from_radians(a.radians() + kPi); }

Angle shift(Angle a, double t) { return Angle::from_radians(a.radians() + t); }

SpherePoint SpherePoint::from_coordinates(double x, double y, double z) {
  const double norm = std::sqrt(x * x + y * y + z * z);
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > 1e-12) {
    throw Error(ErrorCode::InvalidInput,
                "sphere point must be a unit vector (norm " + std::to_string(norm) + ")");
  }
  return SpherePoint({x, y, z});
}

SpherePoint SpherePoint::equatorial(Angle t) {
  return SpherePoint({std::cos(t.radians()), std::sin(t.radians()), 0.0});
}

double sphere_distance(const SpherePoint& p, const SpherePoint& x) {
  const auto& a = p.coordinates();
  const auto& b = x.coordinates();
  const double dot = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
  return std::acos(std::clamp(dot, -1.0, 1.0));
}

double ccw_offset(double from, double t) {
  double s = t - from;
  if (s < 0.0) s += kTwoPi;
  if (s >= kTwoPi) s -= kTwoPi;
  return s;
}

bool arc_contains(const Arc& arc, Angle t) {
  if (arc.length >= kTwoPi) return true;
  return ccw_offset(arc.start.radians(), t.radians()) < arc.length;
}

}  // namespace circrep
