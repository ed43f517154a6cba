#include <gtest/gtest.h>

#include <random>

#include "circrep/fixtures.hpp"
#include "circrep/kernels.hpp"
#include "circrep/representation.hpp"

using namespace circrep;
using kernels::Backend;

TEST(Kernels, UniformGrid) {
  const auto g = kernels::uniform_grid(8);
  ASSERT_EQ(g.size(), 8u);
  EXPECT_EQ(g.front(), -kPi);
  EXPECT_NEAR(g[4], 0.0, 1e-15);
}

TEST(Kernels, BackendsBitwiseEqual) {
  const auto grid = kernels::uniform_grid(5000, -kPi + 0.001);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = random_pl(seed, 16);
    const CircleFunction f = g.f;
    const auto m = g.lambda + SignedMeasure::uniform(g.C) +
                   SignedMeasure({}, PiecewiseConstantDensity({-1.0, 0.5}, {0.2, -0.1}));
    EXPECT_EQ(kernels::integrate_distance_batch(m, grid, Backend::Serial),
              kernels::integrate_distance_batch(m, grid, Backend::OpenMP));
    EXPECT_EQ(kernels::evaluate_batch(f, grid, Backend::Serial),
              kernels::evaluate_batch(f, grid, Backend::OpenMP));
    EXPECT_EQ(kernels::max_reconstruction_residual(m, f, grid, Backend::Serial),
              kernels::max_reconstruction_residual(m, f, grid, Backend::OpenMP));
  }
}

TEST(Kernels, ResidualMatchesPointwise) {
  const auto g = random_pl(3, 10);
  const CircleFunction f = g.f;
  const auto m = g.lambda + SignedMeasure::uniform(g.C);
  const auto grid = kernels::uniform_grid(777);
  double ref = 0.0;
  for (double x : grid) ref = std::max(ref, std::abs(integrate_distance(m, x) - f(x)));
  EXPECT_EQ(kernels::max_reconstruction_residual(m, f, grid), ref);
  EXPECT_LE(ref, 1e-12);
}
