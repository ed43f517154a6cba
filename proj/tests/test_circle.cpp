#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "circrep/circle.hpp"
#include "circrep/error.hpp"

using namespace circrep;

TEST(NormalizeAngle, Examples) {
  EXPECT_EQ(normalize_angle(0.0).radians(), 0.0);
  EXPECT_NEAR(normalize_angle(3 * kPi / 2).radians(), -kPi / 2, 1e-15);
  EXPECT_EQ(normalize_angle(kPi).radians(), -kPi);
  EXPECT_EQ(normalize_angle(-kPi).radians(), -kPi);
}

TEST(NormalizeAngle, RejectsNonFinite) {
  EXPECT_THROW(normalize_angle(std::numeric_limits<double>::quiet_NaN()), Error);
  try {
    normalize_angle(std::numeric_limits<double>::infinity());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidInput);
  }
}

TEST(NormalizeAngle, RangeAndIdempotence) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-100.0, 100.0);
  for (int i = 0; i < 10000; ++i) {
    const double t = u(rng);
    const double r = normalize_angle(t).radians();
    ASSERT_GE(r, -kPi);
    ASSERT_LT(r, kPi);
    ASSERT_EQ(normalize_angle(r).radians(), r);
    ASSERT_NEAR(std::remainder(t - r, kTwoPi), 0.0, 1e-12);
  }
  // Values a rounding step below pi must not escape the domain.
  const double just_below = std::nextafter(kPi, 0.0);
  EXPECT_LT(normalize_angle(just_below).radians(), kPi);
  EXPECT_LT(normalize_angle(-kPi - 1e-17).radians(), kPi);
}

TEST(CircleDistance, Examples) {
  auto A = [](double t) { return Angle::from_radians(t); };
  EXPECT_DOUBLE_EQ(circle_distance(A(0), A(kPi / 2)), kPi / 2);
  EXPECT_NEAR(circle_distance(A(-3 * kPi / 4), A(3 * kPi / 4)), kPi / 2, 1e-15);
  EXPECT_EQ(circle_distance(A(1.3), A(1.3)), 0.0);
}

TEST(CircleDistance, MetricProperties) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  for (int i = 0; i < 5000; ++i) {
    const Angle a = Angle::from_radians(u(rng));
    const Angle b = Angle::from_radians(u(rng));
    const Angle c = Angle::from_radians(u(rng));
    const double ab = circle_distance(a, b);
    ASSERT_GE(ab, 0.0);
    ASSERT_LE(ab, kPi);
    ASSERT_EQ(ab, circle_distance(b, a));
    ASSERT_LE(ab, circle_distance(a, c) + circle_distance(c, b) + 1e-12);
    // d(a, b) + d(a, -b) = pi.
    ASSERT_NEAR(ab + circle_distance(a, antipode(b)), kPi, 1e-12);
  }
}

TEST(Antipode, ExamplesAndInvolution) {
  EXPECT_EQ(antipode(Angle::from_radians(0.0)).radians(), -kPi);
  EXPECT_NEAR(antipode(Angle::from_radians(-kPi / 2)).radians(), kPi / 2, 1e-15);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  for (int i = 0; i < 1000; ++i) {
    const Angle a = Angle::from_radians(u(rng));
    ASSERT_NEAR(circle_distance(antipode(antipode(a)), a), 0.0, 1e-15);
  }
}

TEST(SphereDistance, Examples) {
  const auto north = SpherePoint::from_coordinates(0, 0, 1);
  const auto eq = SpherePoint::equatorial(Angle::from_radians(0.4));
  EXPECT_NEAR(sphere_distance(north, eq), kPi / 2, 1e-15);
  EXPECT_EQ(sphere_distance(north, north), 0.0);
  const auto south = SpherePoint::from_coordinates(0, 0, -1);
  EXPECT_DOUBLE_EQ(sphere_distance(north, south), kPi);
}

TEST(SphereDistance, RejectsNonUnit) {
  EXPECT_THROW(SpherePoint::from_coordinates(1, 1, 0), Error);
  EXPECT_THROW(SpherePoint::from_coordinates(0, 0, 1 + 1e-9), Error);
}

TEST(SphereDistance, EquatorMatchesCircle) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  for (int i = 0; i < 2000; ++i) {
    const Angle a = Angle::from_radians(u(rng));
    const Angle b = Angle::from_radians(u(rng));
    ASSERT_NEAR(sphere_distance(SpherePoint::equatorial(a), SpherePoint::equatorial(b)),
                circle_distance(a, b), 1e-7);
  }
}

TEST(Arc, Membership) {
  const Arc upper{Angle::from_radians(0.0), kPi};
  EXPECT_TRUE(arc_contains(upper, Angle::from_radians(0.0)));
  EXPECT_FALSE(arc_contains(upper, Angle::from_radians(-kPi)));
  const Arc wrap{Angle::from_radians(3 * kPi / 4), kPi};
  EXPECT_TRUE(arc_contains(wrap, Angle::from_radians(-kPi / 2)));
  const Arc full{Angle::from_radians(1.0), kTwoPi};
  EXPECT_TRUE(arc_contains(full, Angle::from_radians(0.999)));
}

TEST(Arc, HalfArcAndAntipodalArcPartitionCircle) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  for (int i = 0; i < 5000; ++i) {
    const Angle s = Angle::from_radians(u(rng));
    const Arc a{s, kPi};
    const Arc b{antipode(s), kPi};
    const Angle t = Angle::from_radians(u(rng));
    ASSERT_NE(arc_contains(a, t), arc_contains(b, t));
  }
  for (double s : {0.0, -kPi, kPi / 2, -kPi / 2}) {
    const Angle start = Angle::from_radians(s);
    for (Angle t : {start, antipode(start)}) {
      EXPECT_NE(arc_contains({start, kPi}, t), arc_contains({antipode(start), kPi}, t));
    }
  }
}
