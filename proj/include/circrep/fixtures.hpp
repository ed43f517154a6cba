#pragma once

#include <cstdint>
#include <string>

#include "circrep/circle_function.hpp"
#include "circrep/signed_measure.hpp"

namespace circrep {

struct FixtureId {
  enum class Kind { DiracDistance, Zigzag, Constant, Tripod, EhullSample, RandomPl };

  Kind kind = Kind::Zigzag;
  double param = 0.0;  // dirac_distance: p; constant: c
  std::uint64_t seed = 0;
  int k = 8;  // random_pl: breakpoint count

  // "dp[:p]", "dirac_distance[:p]", "zigzag", "constant[:c]", "tripod",
  // "ehull_sample[:seed]", "random_pl[:seed[:k]]". Missing seeds take
  // default_seed. Throws UnknownFixture.
  static FixtureId parse(const std::string& text, std::uint64_t default_seed = 0);
  std::string to_string() const;
};

CircleFunction make_fixture(const FixtureId& id);

// PL function with a known antisymmetric representer: f = f_lambda + (pi/2) C.
struct GroundTruthFixture {
  PLFunction f;
  SignedMeasure lambda;
  double C = 0.0;
};

// pairs antipodal atom pairs at seeded positions; weights in +-[0.05, 1].
SignedMeasure random_antisymmetric_atoms(std::uint64_t seed, int pairs);

// PL function of f_lambda + (pi/2) C for purely atomic lambda.
PLFunction pl_from_atomic_measure(const SignedMeasure& lambda, double C);

// k breakpoints (k even, 2 <= k <= 64); C drawn from [-2, 2].
GroundTruthFixture random_pl(std::uint64_t seed, int k);

// Element of E(S^1): 1-Lipschitz, f(x) + f(-x) = pi.
GroundTruthFixture ehull_sample(std::uint64_t seed);

PLFunction dirac_distance(double p);
PLFunction tripod();

}  // namespace circrep
