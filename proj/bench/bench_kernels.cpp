// Serial reference versus OpenMP kernels.
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "circrep/embedding.hpp"
#include "circrep/fixtures.hpp"
#include "circrep/kernels.hpp"
#include "circrep/wasserstein.hpp"

using namespace circrep;
using kernels::Backend;

namespace {

SignedMeasure test_measure() {
  const auto g = random_pl(1, 32);
  return g.lambda + embed(HemispherePoint(0.4, 0.9), 2048).measure();
}

Backend backend_of(const benchmark::State& state) {
  return state.range(1) == 0 ? Backend::Serial : Backend::OpenMP;
}

void BM_IntegrateDistance(benchmark::State& state) {
  const auto m = test_measure();
  const auto grid = kernels::uniform_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::integrate_distance_batch(m, grid, backend_of(state)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ReconstructionResidual(benchmark::State& state) {
  const auto g = random_pl(2, 40);
  const CircleFunction f = g.f;
  const auto m = g.lambda + SignedMeasure::uniform(g.C);
  const auto grid = kernels::uniform_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::max_reconstruction_residual(m, f, grid, backend_of(state)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_PairwiseW1(benchmark::State& state) {
  std::vector<DiscreteProbability> ms;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> az(-kPi, kPi), pol(0.0, 1.5);
  for (int i = 0; i < state.range(0); ++i) {
    ms.push_back(quantize(embed(HemispherePoint(az(rng), pol(rng)), 1024), 1024));
  }
  for (auto _ : state) benchmark::DoNotOptimize(pairwise_w1(ms, backend_of(state)));
}

}  // namespace

BENCHMARK(BM_IntegrateDistance)->ArgsProduct({{1024, 4096}, {0, 1}})->ArgNames({"n", "omp"});
BENCHMARK(BM_ReconstructionResidual)->ArgsProduct({{1024, 4096}, {0, 1}})->ArgNames({"n", "omp"});
BENCHMARK(BM_PairwiseW1)->ArgsProduct({{8, 16}, {0, 1}})->ArgNames({"k", "omp"})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
