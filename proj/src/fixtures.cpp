#include "circrep/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "circrep/error.hpp"

namespace circrep {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

double parse_number(const std::string& s, const std::string& whole) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size() && std::isfinite(v)) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::UnknownFixture, "bad fixture parameter in '" + whole + "'");
}

std::uint64_t parse_seed(const std::string& s, const std::string& whole) {
  const double v = parse_number(s, whole);
  if (v < 0 || v != std::floor(v)) {
    throw Error(ErrorCode::UnknownFixture, "fixture seed must be a non-negative integer");
  }
  return static_cast<std::uint64_t>(v);
}

}  // namespace

FixtureId FixtureId::parse(const std::string& text, std::uint64_t default_seed) {
  const auto parts = split(text, ':');
  if (parts.empty()) throw Error(ErrorCode::UnknownFixture, "empty fixture id");
  const std::string& name = parts[0];
  const std::size_t extra = parts.size() - 1;
  FixtureId id;
  id.seed = default_seed;
  if ((name == "dp" || name == "dirac_distance") && extra <= 1) {
    id.kind = Kind::DiracDistance;
    if (extra == 1) id.param = parse_number(parts[1], text);
  } else if (name == "zigzag" && extra == 0) {
    id.kind = Kind::Zigzag;
  } else if (name == "constant" && extra <= 1) {
    id.kind = Kind::Constant;
    id.param = extra == 1 ? parse_number(parts[1], text) : kPi / 2;
  } else if (name == "tripod" && extra == 0) {
    id.kind = Kind::Tripod;
  } else if (name == "ehull_sample" && extra <= 1) {
    id.kind = Kind::EhullSample;
    if (extra == 1) id.seed = parse_seed(parts[1], text);
  } else if (name == "random_pl" && extra <= 2) {
    id.kind = Kind::RandomPl;
    if (extra >= 1) id.seed = parse_seed(parts[1], text);
    if (extra == 2) id.k = static_cast<int>(parse_seed(parts[2], text));
  } else {
    throw Error(ErrorCode::UnknownFixture, "unknown fixture '" + text + "'");
  }
  return id;
}

std::string FixtureId::to_string() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind) {
    case Kind::DiracDistance: os << "dirac_distance:" << param; break;
    case Kind::Zigzag: os << "zigzag"; break;
    case Kind::Constant: os << "constant:" << param; break;
    case Kind::Tripod: os << "tripod"; break;
    case Kind::EhullSample: os << "ehull_sample:" << seed; break;
    case Kind::RandomPl: os << "random_pl:" << seed << ':' << k; break;
  }
  return os.str();
}

PLFunction dirac_distance(double p) {
  const double a = normalize_angle(p).radians();
  return pl_from_samples({{a, 0.0}, {a + kPi, kPi}});
}

PLFunction tripod() {
  // Shortest paths to the centre run along S^1 to the nearest gluing point,
  // then up a leg of length pi/3.
  const double gluing[3] = {-2 * kPi / 3, 0.0, 2 * kPi / 3};
  auto d_o = [&](double x) {
    double m = kPi;
    for (double g : gluing) m = std::min(m, circle_distance(x, g));
    return kPi / 3 + m;
  };
  std::vector<std::pair<double, double>> s;
  for (double g : gluing) {
    s.emplace_back(g, d_o(g));
    s.emplace_back(g + kPi, d_o(g + kPi));
  }
  return pl_from_samples(std::move(s));
}

SignedMeasure random_antisymmetric_atoms(std::uint64_t seed, int pairs) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> pos(0.0, kPi);
  std::uniform_real_distribution<double> mag(0.05, 1.0);
  std::bernoulli_distribution coin(0.5);
  std::vector<double> used;
  std::vector<Atom> atoms;
  while (static_cast<int>(used.size()) < pairs) {
    const double u = pos(rng);
    // Keep pairs apart modulo pi so every breakpoint is distinct.
    const bool clash = std::any_of(used.begin(), used.end(), [&](double v) {
      const double d = std::abs(u - v);
      return std::min(d, kPi - d) < 1e-3;
    });
    if (clash) continue;
    used.push_back(u);
    const double w = coin(rng) ? mag(rng) : -mag(rng);
    const double y = coin(rng) ? u : u - kPi;
    atoms.push_back({y, w});
    atoms.push_back({y + kPi, -w});
  }
  return SignedMeasure(std::move(atoms));
}

PLFunction pl_from_atomic_measure(const SignedMeasure& lambda, double C) {
  if (!lambda.density().empty()) {
    throw Error(ErrorCode::InvalidInput, "pl_from_atomic_measure: measure has a density part");
  }
  std::vector<std::pair<double, double>> s;
  std::vector<double> pts;
  for (const auto& a : lambda.atoms()) {
    pts.push_back(a.angle);
    pts.push_back(a.angle + kPi);
  }
  if (pts.empty()) pts = {-kPi, 0.0};
  for (double t : pts) s.emplace_back(t, integrate_distance(lambda, normalize_angle(t)) + kPi / 2 * C);
  return pl_from_samples(std::move(s));
}

GroundTruthFixture random_pl(std::uint64_t seed, int k) {
  if (k < 2 || k > 64 || k % 2 != 0) {
    throw Error(ErrorCode::UnknownFixture, "random_pl needs an even k in [2, 64]");
  }
  SignedMeasure lambda = random_antisymmetric_atoms(seed, k / 2);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const double C = std::uniform_real_distribution<double>(-2.0, 2.0)(rng);
  PLFunction f = pl_from_atomic_measure(lambda, C);
  return {std::move(f), std::move(lambda), C};
}

GroundTruthFixture ehull_sample(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x51ed270b27a1f3c5ULL);
  const int pairs = std::uniform_int_distribution<int>(1, 8)(rng);
  const double target = std::uniform_real_distribution<double>(0.2, 1.0)(rng);
  SignedMeasure raw = random_antisymmetric_atoms(seed, pairs);
  // |slope of f_lambda| <= |lambda|(S^1), so this makes f 1-Lipschitz.
  SignedMeasure lambda = (target / tv_norm(raw)) * raw;
  PLFunction f = pl_from_atomic_measure(lambda, 1.0);
  return {std::move(f), std::move(lambda), 1.0};
}

CircleFunction make_fixture(const FixtureId& id) {
  switch (id.kind) {
    case FixtureId::Kind::DiracDistance: return dirac_distance(id.param);
    case FixtureId::Kind::Zigzag: return dirac_distance(0.0);
    case FixtureId::Kind::Constant: return pl_constant(id.param);
    case FixtureId::Kind::Tripod: return tripod();
    case FixtureId::Kind::EhullSample: return ehull_sample(id.seed).f;
    case FixtureId::Kind::RandomPl: return random_pl(id.seed, id.k).f;
  }
  throw Error(ErrorCode::UnknownFixture, "unknown fixture kind");
}

}  // namespace circrep
