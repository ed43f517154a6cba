#include "circrep/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace circrep::kernels {

namespace serial {

void integrate_distance_batch(const SignedMeasure& m, std::span<const double> xs,
                              std::span<double> out) {
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = integrate_distance(m, xs[i]);
}

double max_reconstruction_residual(const SignedMeasure& m, const CircleFunction& f,
                                   std::span<const double> xs) {
  double worst = 0.0;
  for (double x : xs) worst = std::max(worst, std::abs(integrate_distance(m, x) - f(x)));
  return worst;
}

void evaluate_batch(const CircleFunction& f, std::span<const double> xs, std::span<double> out) {
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = f(xs[i]);
}

}  // namespace serial

namespace parallel {

void integrate_distance_batch(const SignedMeasure& m, std::span<const double> xs,
                              std::span<double> out) {
  const auto n = static_cast<std::ptrdiff_t>(xs.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = integrate_distance(m, xs[i]);
}

double max_reconstruction_residual(const SignedMeasure& m, const CircleFunction& f,
                                   std::span<const double> xs) {
  const auto n = static_cast<std::ptrdiff_t>(xs.size());
  double worst = 0.0;
#pragma omp parallel for schedule(static) reduction(max : worst)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    worst = std::max(worst, std::abs(integrate_distance(m, xs[i]) - f(xs[i])));
  }
  return worst;
}

void evaluate_batch(const CircleFunction& f, std::span<const double> xs, std::span<double> out) {
  const auto n = static_cast<std::ptrdiff_t>(xs.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = f(xs[i]);
}

}  // namespace parallel

std::vector<double> integrate_distance_batch(const SignedMeasure& m, std::span<const double> xs,
                                             Backend backend) {
  std::vector<double> out(xs.size());
  if (backend == Backend::Serial) serial::integrate_distance_batch(m, xs, out);
  else parallel::integrate_distance_batch(m, xs, out);
  return out;
}

double max_reconstruction_residual(const SignedMeasure& m, const CircleFunction& f,
                                   std::span<const double> xs, Backend backend) {
  return backend == Backend::Serial ? serial::max_reconstruction_residual(m, f, xs)
                                    : parallel::max_reconstruction_residual(m, f, xs);
}

std::vector<double> evaluate_batch(const CircleFunction& f, std::span<const double> xs,
                                   Backend backend) {
  std::vector<double> out(xs.size());
  if (backend == Backend::Serial) serial::evaluate_batch(f, xs, out);
  else parallel::evaluate_batch(f, xs, out);
  return out;
}

std::vector<double> uniform_grid(int n, double origin) {
  std::vector<double> g(static_cast<std::size_t>(std::max(n, 0)));
  for (int k = 0; k < n; ++k) g[static_cast<std::size_t>(k)] = origin + k * kTwoPi / n;
  return g;
}

}  // namespace circrep::kernels
