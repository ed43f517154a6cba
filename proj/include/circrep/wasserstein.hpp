#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "circrep/kernels.hpp"
#include "circrep/signed_measure.hpp"

namespace circrep {

// Non-negative measure of total mass 1 (within 1e-10).
class ProbabilityMeasure {
 public:
  static ProbabilityMeasure from(SignedMeasure m);

  const SignedMeasure& measure() const noexcept { return m_; }

 private:
  explicit ProbabilityMeasure(SignedMeasure m) : m_(std::move(m)) {}
  SignedMeasure m_;
};

// Finitely supported probability measure, support sorted and distinct.
class DiscreteProbability {
 public:
  // Angles normalized, coincident atoms merged; weights must be
  // non-negative and sum to 1 within 1e-12.
  explicit DiscreteProbability(std::vector<Atom> atoms);

  static DiscreteProbability dirac(double angle) { return DiscreteProbability({{angle, 1.0}}); }

  std::span<const Atom> atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  SignedMeasure as_measure() const { return SignedMeasure({atoms_.begin(), atoms_.end()}); }

 private:
  std::vector<Atom> atoms_;
};

struct Coupling {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> mass;  // row-major

  double at(std::size_t i, std::size_t j) const { return mass[i * cols + j]; }
};

struct TransportResult {
  double cost = 0.0;
  Coupling coupling;
};

// Atoms verbatim; the density is binned into n uniform bins from -pi with
// each bin's exact mass placed at its midpoint.
DiscreteProbability quantize(const ProbabilityMeasure& mu, int n);

// W1 from the circular CDF difference G = F_mu - F_nu:
// min over c of the integral of |G - c|, attained at a length-weighted median.
double w1_circle(const DiscreteProbability& mu, const DiscreteProbability& nu);

inline constexpr std::size_t kDefaultTransportCap = 1'000'000;

// Exact optimum of the discrete transport LP with cost d_{S^1}
// (transportation simplex). Throws ProblemTooLarge past the cap.
TransportResult w1_bruteforce(const DiscreteProbability& mu, const DiscreteProbability& nu,
                              std::size_t cap = kDefaultTransportCap);

double coupling_cost(const DiscreteProbability& mu, const DiscreteProbability& nu,
                     const Coupling& pi);

// Symmetric k x k matrix of w1_circle values, row-major.
std::vector<double> pairwise_w1(std::span<const DiscreteProbability> measures,
                                kernels::Backend backend = kernels::Backend::OpenMP);

}  // namespace circrep
