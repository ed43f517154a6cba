#pragma once

#include <array>
#include <compare>
#include <numbers>

namespace circrep {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// A point of S^1 given by its angle in the fundamental domain [-pi, pi).
class Angle {
 public:
  constexpr Angle() = default;

  // Throws InvalidInput for non-finite input.
  static Angle from_radians(double t);

  constexpr double radians() const noexcept { return value_; }

  friend constexpr auto operator<=>(const Angle&, const Angle&) = default;

 private:
  constexpr explicit Angle(double v) : value_(v) {}
  double value_ = 0.0;
};

Angle normalize_angle(double t);

// Length of the shorter arc between a and b, in [0, pi].
double circle_distance(Angle a, Angle b);

// Same metric on raw radians; inputs need not be normalized.
double circle_distance(double a, double b);

Angle antipode(Angle a);

// x +_q t: move counter-clockwise by t along the covering map.
Angle shift(Angle a, double t);

// Unit vector in R^3.
class SpherePoint {
 public:
  // Throws InvalidInput unless |x| is within 1e-12 of 1.
  static SpherePoint from_coordinates(double x, double y, double z);

  // q(t) embedded as the equator of S^2.
  static SpherePoint equatorial(Angle t);

  const std::array<double, 3>& coordinates() const noexcept { return xyz_; }

 private:
  explicit SpherePoint(std::array<double, 3> xyz) : xyz_(xyz) {}
  std::array<double, 3> xyz_;
};

// arccos of the clamped inner product.
double sphere_distance(const SpherePoint& p, const SpherePoint& x);

// Half-open arc {start +_q s : s in [0, length)}.
struct Arc {
  Angle start;
  double length = 0.0;
};

bool arc_contains(const Arc& arc, Angle t);

// Offset of t from `from`, measured counter-clockwise, in [0, 2pi).
double ccw_offset(double from, double t);

}  // namespace circrep
