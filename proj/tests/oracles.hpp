#pragma once

// Test-only reference computations that avoid the library's closed forms.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "circrep/circle.hpp"
#include "circrep/signed_measure.hpp"
#include "circrep/wasserstein.hpp"

namespace circrep::oracle {

// integral of d(x, y) m(dy) by trapezoid rule on density pieces split at x
// and -x, where the integrand is linear (so the rule is exact up to rounding).
inline double integrate_distance(const SignedMeasure& m, double x) {
  double s = 0.0;
  for (const auto& a : m.atoms()) {
    double d = std::fmod(std::abs(a.angle - x), kTwoPi);
    s += a.weight * std::min(d, kTwoPi - d);
  }
  const auto& d = m.density();
  auto dist = [x](double y) {
    double t = std::fmod(std::abs(y - x), kTwoPi);
    return std::min(t, kTwoPi - t);
  };
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double lo = d.breakpoints()[i];
    const double hi = lo + d.segment_length(i);
    std::vector<double> cuts{lo, hi};
    for (double c : {x, x + kPi, x - kPi, x + kTwoPi, x - kTwoPi, x + 3 * kPi, x - 3 * kPi}) {
      if (c > lo && c < hi) cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      s += d.values()[i] * 0.5 * (dist(cuts[k]) + dist(cuts[k + 1])) * (cuts[k + 1] - cuts[k]);
    }
  }
  return s;
}

// Largest |a(I) - b(I)| over half-open arcs I of length <= pi. Arc ends are
// placed a small offset away from atoms (and their antipodes) on both
// sides, since atom positions of equal measures may differ by rounding.
inline double max_arc_gap(const SignedMeasure& a, const SignedMeasure& b, std::mt19937_64& rng,
                          double offset = 1e-9) {
  std::vector<double> starts;
  for (const SignedMeasure* m : {&a, &b}) {
    for (const auto& at : m->atoms()) {
      for (double base : {at.angle, at.angle + kPi}) {
        starts.push_back(base - offset);
        starts.push_back(base + offset);
      }
    }
  }
  std::uniform_real_distribution<double> pos(-kPi, kPi);
  for (int i = 0; i < 32; ++i) starts.push_back(pos(rng));
  double gap = 0.0;
  for (double s : starts) {
    for (double len : {0.1, 0.5, 1.0, 2.0, 3.0, kPi - 2 * offset, kPi}) {
      const Arc arc{Angle::from_radians(s), len};
      gap = std::max(gap, std::abs(arc_measure(a, arc) - arc_measure(b, arc)));
    }
  }
  return gap;
}

// Atoms pair up one-to-one within position tolerance pos_tol.
inline bool atoms_match(const SignedMeasure& a, const SignedMeasure& b, double pos_tol,
                        double weight_tol) {
  if (a.atoms().size() != b.atoms().size()) return false;
  for (std::size_t i = 0; i < a.atoms().size(); ++i) {
    const auto& x = a.atoms()[i];
    const auto& y = b.atoms()[i];
    double d = std::fmod(std::abs(x.angle - y.angle), kTwoPi);
    d = std::min(d, kTwoPi - d);
    if (d > pos_tol || std::abs(x.weight - y.weight) > weight_tol) return false;
  }
  return true;
}

// Composite Simpson quadrature of f on [a, b] with n (even) panels.
template <class F>
double simpson(F&& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int k = 1; k < n; ++k) s += (k % 2 ? 4.0 : 2.0) * f(a + k * h);
  return s * h / 3.0;
}

// For equal-mass uniform empirical measures the transport LP has a
// permutation optimum (Birkhoff); enumerate all of them.
inline double w1_permutation(const std::vector<double>& xs, const std::vector<double>& ys) {
  std::vector<std::size_t> perm(ys.size());
  std::iota(perm.begin(), perm.end(), 0);
  double best = 1e300;
  do {
    double c = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      double d = std::fmod(std::abs(xs[i] - ys[perm[i]]), kTwoPi);
      c += std::min(d, kTwoPi - d);
    }
    best = std::min(best, c / static_cast<double>(xs.size()));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace circrep::oracle
