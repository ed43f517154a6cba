#pragma once

#include <span>
#include <vector>

#include "circrep/circle_function.hpp"
#include "circrep/signed_measure.hpp"

// Data-parallel grid kernels. Every kernel has a serial reference and an
// OpenMP version; both produce bit-identical results because each output
// element is computed independently.
namespace circrep::kernels {

enum class Backend { Serial, OpenMP };

namespace serial {
void integrate_distance_batch(const SignedMeasure& m, std::span<const double> xs,
                              std::span<double> out);
double max_reconstruction_residual(const SignedMeasure& m, const CircleFunction& f,
                                   std::span<const double> xs);
void evaluate_batch(const CircleFunction& f, std::span<const double> xs, std::span<double> out);
}  // namespace serial

namespace parallel {
void integrate_distance_batch(const SignedMeasure& m, std::span<const double> xs,
                              std::span<double> out);
double max_reconstruction_residual(const SignedMeasure& m, const CircleFunction& f,
                                   std::span<const double> xs);
void evaluate_batch(const CircleFunction& f, std::span<const double> xs, std::span<double> out);
}  // namespace parallel

std::vector<double> integrate_distance_batch(const SignedMeasure& m, std::span<const double> xs,
                                             Backend backend = Backend::OpenMP);

// sup over xs of |f_m(x) - f(x)|.
double max_reconstruction_residual(const SignedMeasure& m, const CircleFunction& f,
                                   std::span<const double> xs,
                                   Backend backend = Backend::OpenMP);

std::vector<double> evaluate_batch(const CircleFunction& f, std::span<const double> xs,
                                   Backend backend = Backend::OpenMP);

// Uniform grid -pi + k 2pi/n, k = 0..n-1.
std::vector<double> uniform_grid(int n, double origin = -kPi);

}  // namespace circrep::kernels
