#include "circrep/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "circrep/embedding.hpp"
#include "circrep/error.hpp"
#include "circrep/fixtures.hpp"
#include "circrep/json_io.hpp"
#include "circrep/kernels.hpp"
#include "circrep/representation.hpp"
#include "circrep/wasserstein.hpp"

namespace circrep::cli {

using nlohmann::json;

int default_grid() {
  if (const char* env = std::getenv("CIRCREP_GRID")) {
    try {
      const int n = std::stoi(env);
      if (n >= 16) return n;
    } catch (const std::exception&) {
    }
  }
  return 4096;
}

namespace {

struct Input {
  std::string bytes;
  json doc;
};

Input read_input(const std::string& path) {
  Input in;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    in.bytes = ss.str();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::InvalidInput, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    in.bytes = ss.str();
  }
  try {
    in.doc = json::parse(in.bytes);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SchemaError, path + ": malformed JSON (" + e.what() + ")");
  }
  return in;
}

json error_json(const Error& e) {
  json values = json::object();
  for (const auto& [k, v] : e.values()) values[k] = v;
  return {{"code", to_string(e.code())}, {"message", e.what()}, {"values", values}};
}

struct Session {
  std::vector<std::string> argv;
  std::string command;
  std::string digest_input;
  bool timing = true;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  json report(const char* status) const {
    json r;
    r["schema_version"] = kSchemaVersion;
    r["command"] = command;
    r["argv"] = std::vector<std::string>(argv.begin() + 1, argv.end());
    r["inputs_digest"] = "fnv1a64:" + fnv1a64_hex(digest_input);
    r["status"] = status;
    if (timing) {
      const auto ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
      r["timing"] = {{"elapsed_ms", ms}};
    }
    return r;
  }
};

json function_summary(const CircleFunction& f, double tol, bool try_represent) {
  json s;
  const auto antip = antipodal_constant(f, tol, default_grid());
  s["C"] = antip.C;
  s["defect"] = antip.defect;
  s["condition_A"] = antip.satisfied;
  const auto lip = lipschitz_constant(f);
  s["lipschitz"] = {{"value", lip.value}, {"exact", lip.exact}};
  try {
    const double tv = tv_left_derivative(f);
    s["tv"] = tv;
    s["fourC"] = 4.0 * antip.C;
    s["condition_B"] = true;
    s["tv_within_4C"] = antip.C >= 0.0 && tv <= 4.0 * antip.C + 1e-9;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TVNotConverged) throw;
    s["tv"] = nullptr;
    s["condition_B"] = false;
  }
  if (try_represent) {
    RepresentOptions opts;
    opts.antipodal_tol = tol;
    opts.grid = opts.bins = default_grid();
    auto verdict = [&](auto&& fn) -> json {
      try {
        fn();
        return {{"ok", true}};
      } catch (const Error& e) {
        if (!is_mathematical(e.code())) throw;
        return {{"ok", false}, {"error", error_json(e)}};
      }
    };
    s["signed_representable"] = verdict([&] { represent_signed(f, opts); });
    s["nonneg_representable"] = verdict([&] { represent_nonneg(f, opts); });
  }
  return s;
}

std::vector<HemispherePoint> read_points(const json& doc) {
  const json* list = &doc;
  if (doc.is_object()) {
    if (!doc.contains("points")) throw Error(ErrorCode::SchemaError, "$: missing key 'points'");
    list = &doc["points"];
  }
  if (!list->is_array()) throw Error(ErrorCode::SchemaError, "$.points: expected an array");
  std::vector<HemispherePoint> pts;
  for (std::size_t i = 0; i < list->size(); ++i) {
    const json& p = (*list)[i];
    const std::string path = "$.points[" + std::to_string(i) + "]";
    if (!p.is_object() || !p.contains("theta") || !p.contains("alpha") ||
        !p["theta"].is_number() || !p["alpha"].is_number()) {
      throw Error(ErrorCode::SchemaError, path + ": expected {\"theta\": number, \"alpha\": number}");
    }
    try {
      pts.emplace_back(p["theta"].get<double>(), p["alpha"].get<double>());
    } catch (const Error& e) {
      throw Error(ErrorCode::SchemaError, path + ": " + e.what());
    }
  }
  return pts;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integral representation of functions on the circle"};
  app.require_subcommand(1);

  Session session;
  session.argv = argv;
  std::uint64_t seed = 0;
  bool no_timing = false;
  app.add_option("--seed", seed, "Seed for random fixtures")->capture_default_str();
  app.add_flag("--no-timing", no_timing, "Omit timing from reports");

  const int grid = default_grid();
  double tol = 1e-9;
  std::string fn_path, measure_path, mu_path, nu_path, points_path, fixture;
  bool nonneg = false;
  int samples = 512, n = grid;
  std::string method = "cdf";
  double theta = 0.0, alpha = 0.0;

  auto* check = app.add_subcommand("check", "Report conditions (A) and (B) for a function");
  check->add_option("function", fn_path, "Function JSON (or - for stdin)")->required();
  check->add_option("--tol", tol, "Antipodal tolerance")->capture_default_str();

  auto* represent = app.add_subcommand("represent", "Construct the representing measure");
  represent->add_option("function", fn_path, "Function JSON (or - for stdin)")->required();
  represent->add_flag("--nonneg", nonneg, "Require a non-negative measure");
  represent->add_option("--tol", tol, "Antipodal tolerance")->capture_default_str();
  represent->add_option("--bins", n, "Density bins for smooth input")->capture_default_str();

  auto* reconstruct = app.add_subcommand("reconstruct", "Sample f of a measure as CSV");
  reconstruct->add_option("measure", measure_path, "Measure JSON (or - for stdin)")->required();
  reconstruct->add_option("--samples", samples, "Number of sample angles")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* w1 = app.add_subcommand("w1", "Wasserstein-1 distance between probability measures");
  w1->add_option("mu", mu_path, "First measure JSON")->required();
  w1->add_option("nu", nu_path, "Second measure JSON")->required();
  w1->add_option("--method", method, "cdf or lp")
      ->check(CLI::IsMember({"cdf", "lp"}))
      ->capture_default_str();
  w1->add_option("--n", n, "Quantization bins for densities")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* embed_cmd = app.add_subcommand("embed", "Embed a hemisphere point into P(S^1)");
  embed_cmd->add_option("--theta", theta, "Azimuth (radians)")->required();
  embed_cmd->add_option("--alpha", alpha, "Polar angle from the north pole (radians)")->required();
  embed_cmd->add_option("--n", n, "Density bins")->capture_default_str();

  auto* isometry = app.add_subcommand("isometry", "CSV matrix of |W1 - d_S2| residuals");
  isometry->add_option("--points", points_path, "JSON list of {theta, alpha}")->required();
  isometry->add_option("--n", n, "Density and quantization bins")->capture_default_str();

  auto* demo = app.add_subcommand("demo", "Emit a named fixture and its summary");
  demo->add_option("fixture", fixture, "Fixture id, e.g. tripod, dp, random_pl:3:8")->required();

  std::vector<const char*> cargv;
  for (const auto& a : argv) cargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitUsage;
  }
  session.timing = !no_timing;
  session.command = app.get_subcommands().front()->get_name();

  auto emit = [&](const json& r) { out << r.dump(2) << "\n"; };

  try {
    if (check->parsed()) {
      const Input in = read_input(fn_path);
      session.digest_input = in.bytes;
      const auto f = locate_function(in.doc);
      json r = session.report("ok");
      r["outputs"] = function_summary(f, tol, false);
      emit(r);
    } else if (represent->parsed()) {
      const Input in = read_input(fn_path);
      session.digest_input = in.bytes;
      const auto f = locate_function(in.doc);
      RepresentOptions opts;
      opts.antipodal_tol = tol;
      opts.bins = n;
      opts.grid = grid;
      json outputs;
      if (nonneg) {
        const auto rep = represent_nonneg(f, opts);
        outputs = {{"kind", "nonneg"}, {"C", rep.C}, {"tv", rep.tv},
                   {"residual", rep.residual}, {"mu", to_json(rep.mu)},
                   {"measure", to_json(rep.mubar)}};
      } else {
        const auto rep = represent_signed(f, opts);
        outputs = {{"kind", "signed"}, {"C", rep.C}, {"tv", rep.tv},
                   {"residual", rep.residual}, {"antipodal_defect", rep.antipodal_defect},
                   {"lambda", to_json(rep.lambda)},
                   {"measure", to_json(rep.representing_measure())}};
      }
      json r = session.report("ok");
      r["outputs"] = outputs;
      emit(r);
    } else if (reconstruct->parsed()) {
      const Input in = read_input(measure_path);
      const auto m = locate_measure(in.doc);
      const auto ts = kernels::uniform_grid(samples);
      const auto vals = kernels::integrate_distance_batch(m, ts);
      out << "t,f\n" << std::setprecision(17);
      for (std::size_t i = 0; i < ts.size(); ++i) out << ts[i] << ',' << vals[i] << '\n';
    } else if (w1->parsed()) {
      const Input a = read_input(mu_path);
      const Input b = read_input(nu_path);
      session.digest_input = a.bytes + '\0' + b.bytes;
      const auto mu = quantize(ProbabilityMeasure::from(locate_measure(a.doc)), n);
      const auto nu = quantize(ProbabilityMeasure::from(locate_measure(b.doc)), n);
      const double value = method == "lp" ? w1_bruteforce(mu, nu).cost : w1_circle(mu, nu);
      json r = session.report("ok");
      r["outputs"] = {{"w1", value}, {"method", method}, {"n", n},
                      {"support_sizes", {mu.size(), nu.size()}}};
      emit(r);
    } else if (embed_cmd->parsed()) {
      std::ostringstream d;
      d << std::setprecision(17) << theta << ' ' << alpha << ' ' << n;
      session.digest_input = d.str();
      const HemispherePoint p(theta, alpha);
      const auto phi = embed(p, n);
      json r = session.report("ok");
      r["outputs"] = {{"theta", p.azimuth().radians()}, {"alpha", p.polar()}, {"n", n},
                      {"mass", total_mass(phi.measure())}, {"measure", to_json(phi.measure())}};
      emit(r);
    } else if (isometry->parsed()) {
      const Input in = read_input(points_path);
      const auto pts = read_points(in.doc);
      const auto rep = isometry_report(pts, n);
      out << "point";
      for (std::size_t j = 0; j < rep.size; ++j) out << ',' << j;
      out << '\n' << std::setprecision(10);
      for (std::size_t i = 0; i < rep.size; ++i) {
        out << i;
        for (std::size_t j = 0; j < rep.size; ++j) out << ',' << rep.residual[i * rep.size + j];
        out << '\n';
      }
    } else if (demo->parsed()) {
      session.digest_input = fixture + ":" + std::to_string(seed);
      const auto id = FixtureId::parse(fixture, seed);
      const auto f = make_fixture(id);
      json r = session.report("ok");
      r["outputs"] = {{"fixture", id.to_string()},
                      {"function", to_json(f)},
                      {"summary", function_summary(f, tol, true)}};
      emit(r);
    }
  } catch (const Error& e) {
    json r = session.report("error");
    r["error"] = error_json(e);
    emit(r);
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return is_mathematical(e.code()) ? kExitMath : kExitUsage;
  }
  return kExitOk;
}

}  // namespace circrep::cli
