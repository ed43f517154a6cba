#include "circrep/wasserstein.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "circrep/error.hpp"
#include "transport_simplex.hpp"

namespace circrep {

ProbabilityMeasure ProbabilityMeasure::from(SignedMeasure m) {
  if (!is_nonnegative(m)) {
    throw Error(ErrorCode::InvalidInput, "probability measure must be non-negative");
  }
  const double mass = total_mass(m);
  if (std::abs(mass - 1.0) > 1e-10) {
    throw Error(ErrorCode::InvalidInput,
                "probability measure must have mass 1 (got " + std::to_string(mass) + ")",
                {{"mass", mass}});
  }
  return ProbabilityMeasure(std::move(m));
}

DiscreteProbability::DiscreteProbability(std::vector<Atom> atoms) {
  for (auto& a : atoms) {
    if (!std::isfinite(a.weight) || a.weight < 0.0) {
      throw Error(ErrorCode::InvalidInput, "discrete probability: negative or non-finite weight");
    }
    a.angle = normalize_angle(a.angle).radians();
  }
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& x, const Atom& y) { return x.angle < y.angle; });
  double total = 0.0;
  for (const auto& a : atoms) {
    total += a.weight;
    if (a.weight == 0.0) continue;
    if (!atoms_.empty() && atoms_.back().angle == a.angle) atoms_.back().weight += a.weight;
    else atoms_.push_back(a);
  }
  if (atoms_.empty() || std::abs(total - 1.0) > 1e-12) {
    throw Error(ErrorCode::InvalidInput,
                "discrete probability: weights must sum to 1 (got " + std::to_string(total) + ")",
                {{"mass", total}});
  }
}

DiscreteProbability quantize(const ProbabilityMeasure& mu, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "quantize: n must be >= 1");
  const SignedMeasure& m = mu.measure();
  std::vector<Atom> atoms(m.atoms().begin(), m.atoms().end());
  const auto& d = m.density();
  if (!d.empty()) {
    const double w = kTwoPi / n;
    for (int k = 0; k < n; ++k) {
      const double lo = -kPi + k * w;
      const double hi = k + 1 == n ? kPi : -kPi + (k + 1) * w;
      const double mass = d.integral(lo, hi);
      if (mass != 0.0) atoms.push_back({0.5 * (lo + hi), std::max(mass, 0.0)});
    }
  }
  // Rounding in the bin integrals leaves the total within 1e-10 of 1.
  double total = 0.0;
  for (const auto& a : atoms) total += a.weight;
  for (auto& a : atoms) a.weight /= total;
  return DiscreteProbability(std::move(atoms));
}

double w1_circle(const DiscreteProbability& mu, const DiscreteProbability& nu) {
  // Jumps of G = F_mu - F_nu. A shared support point contributes one jump
  // w_mu - w_nu, so swapping the arguments negates G exactly.
  const auto a = mu.atoms();
  const auto b = nu.atoms();
  std::vector<Atom> jumps;
  jumps.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].angle < b[j].angle)) {
      jumps.push_back(a[i++]);
    } else if (i == a.size() || b[j].angle < a[i].angle) {
      jumps.push_back({b[j].angle, -b[j].weight});
      ++j;
    } else {
      jumps.push_back({a[i].angle, a[i].weight - b[j].weight});
      ++i;
      ++j;
    }
  }

  if (jumps.empty()) return 0.0;

  // Pieces (value of G, length) of the step function between jumps. G is 0
  // before the first and after the last jump, which together form one wrap
  // piece of length 2pi - (last - first).
  std::vector<std::pair<double, double>> pieces;
  pieces.reserve(jumps.size());
  double g = 0.0;
  for (std::size_t k = 0; k + 1 < jumps.size(); ++k) {
    g += jumps[k].weight;
    const double len = jumps[k + 1].angle - jumps[k].angle;
    if (len > 0.0) pieces.emplace_back(g, len);
  }
  const double wrap = kTwoPi - (jumps.back().angle - jumps.front().angle);
  if (wrap > 0.0) pieces.emplace_back(0.0, wrap);

  // Midpoint of the lower and upper length-weighted medians; any point
  // between them minimizes the shifted L1 norm.
  std::vector<std::pair<double, double>> sorted = pieces;
  std::sort(sorted.begin(), sorted.end());
  double lower = sorted.front().first;
  double acc = 0.0;
  for (const auto& [value, length] : sorted) {
    acc += length;
    if (acc >= kPi) {
      lower = value;
      break;
    }
  }
  double upper = sorted.back().first;
  acc = 0.0;
  for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
    acc += it->second;
    if (acc >= kPi) {
      upper = it->first;
      break;
    }
  }
  const double median = 0.5 * (lower + upper);
  double w = 0.0;
  for (const auto& [value, length] : pieces) w += length * std::abs(value - median);
  return w;
}

double coupling_cost(const DiscreteProbability& mu, const DiscreteProbability& nu,
                     const Coupling& pi) {
  double c = 0.0;
  for (std::size_t i = 0; i < pi.rows; ++i) {
    for (std::size_t j = 0; j < pi.cols; ++j) {
      c += pi.at(i, j) * circle_distance(mu.atoms()[i].angle, nu.atoms()[j].angle);
    }
  }
  return c;
}

TransportResult w1_bruteforce(const DiscreteProbability& mu, const DiscreteProbability& nu,
                              std::size_t cap) {
  const std::size_t m = mu.size();
  const std::size_t n = nu.size();
  if (m * n > cap) {
    throw Error(ErrorCode::ProblemTooLarge, "transport problem exceeds the size cap",
                {{"cells", static_cast<double>(m * n)}, {"cap", static_cast<double>(cap)}});
  }
  std::vector<double> supply(m), demand(n), cost(m * n);
  for (std::size_t i = 0; i < m; ++i) supply[i] = mu.atoms()[i].weight;
  for (std::size_t j = 0; j < n; ++j) demand[j] = nu.atoms()[j].weight;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cost[i * n + j] = circle_distance(mu.atoms()[i].angle, nu.atoms()[j].angle);
    }
  }
  auto sol = detail::solve_transport(supply, demand, cost);
  TransportResult r;
  r.cost = sol.cost;
  r.coupling = Coupling{m, n, std::move(sol.flow)};
  return r;
}

std::vector<double> pairwise_w1(std::span<const DiscreteProbability> measures,
                                kernels::Backend backend) {
  const std::size_t k = measures.size();
  std::vector<double> out(k * k, 0.0);
  const auto pairs = static_cast<std::ptrdiff_t>(k * k);
  auto body = [&](std::ptrdiff_t p) {
    const std::size_t i = static_cast<std::size_t>(p) / k;
    const std::size_t j = static_cast<std::size_t>(p) % k;
    if (j <= i) return;
    const double w = w1_circle(measures[i], measures[j]);
    out[i * k + j] = w;
    out[j * k + i] = w;
  };
  if (backend == kernels::Backend::Serial) {
    for (std::ptrdiff_t p = 0; p < pairs; ++p) body(p);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t p = 0; p < pairs; ++p) body(p);
  }
  return out;
}

}  // namespace circrep
