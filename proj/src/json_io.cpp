#include "circrep/json_io.hpp"

#include <cstdint>
#include <cstdio>

#include "circrep/error.hpp"
#include "circrep/fixtures.hpp"

namespace circrep {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::SchemaError, path + ": " + what);
}

const json& member(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(path, std::string("missing key '") + key + "'");
  return *it;
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) schema_error(path, "expected a number");
  return j.get<double>();
}

std::vector<double> number_array(const json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(number(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

template <class F>
auto wrap_invalid(const std::string& path, F&& make) {
  try {
    return make();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidInput) schema_error(path, e.what());
    throw;
  }
}

}  // namespace

json to_json(const PLFunction& f) {
  return {{"type", "pl"},
          {"breakpoints", std::vector<double>(f.breakpoints().begin(), f.breakpoints().end())},
          {"values", std::vector<double>(f.values().begin(), f.values().end())}};
}

json to_json(const CircleFunction& f) {
  if (const auto* pl = f.as_pl()) return to_json(*pl);
  return {{"type", "smooth"}, {"name", f.as_smooth()->name()}};
}

json to_json(const SignedMeasure& m) {
  json atoms = json::array();
  for (const auto& a : m.atoms()) atoms.push_back({{"angle", a.angle}, {"weight", a.weight}});
  const auto& d = m.density();
  return {{"atoms", atoms},
          {"density",
           {{"breakpoints", std::vector<double>(d.breakpoints().begin(), d.breakpoints().end())},
            {"values", std::vector<double>(d.values().begin(), d.values().end())}}}};
}

PLFunction pl_from_json(const json& j, const std::string& path) {
  const json& type = member(j, "type", path);
  if (!type.is_string() || type.get<std::string>() != "pl") {
    schema_error(path + ".type", "expected \"pl\"");
  }
  auto bp = number_array(member(j, "breakpoints", path), path + ".breakpoints");
  auto vals = number_array(member(j, "values", path), path + ".values");
  return wrap_invalid(path, [&] { return PLFunction(std::move(bp), std::move(vals)); });
}

CircleFunction function_from_json(const json& j, const std::string& path) {
  const json& type = member(j, "type", path);
  if (!type.is_string()) schema_error(path + ".type", "expected a string");
  const auto t = type.get<std::string>();
  if (t == "pl") return pl_from_json(j, path);
  if (t == "fixture") {
    const json& id = member(j, "id", path);
    if (!id.is_string()) schema_error(path + ".id", "expected a string");
    return make_fixture(FixtureId::parse(id.get<std::string>()));
  }
  schema_error(path + ".type", "unsupported function type '" + t + "'");
}

SignedMeasure measure_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  std::vector<Atom> atoms;
  if (auto it = j.find("atoms"); it != j.end()) {
    if (!it->is_array()) schema_error(path + ".atoms", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string p = path + ".atoms[" + std::to_string(i) + "]";
      const json& a = (*it)[i];
      atoms.push_back({number(member(a, "angle", p), p + ".angle"),
                       number(member(a, "weight", p), p + ".weight")});
    }
  }
  PiecewiseConstantDensity density;
  if (auto it = j.find("density"); it != j.end() && !it->is_null()) {
    const std::string p = path + ".density";
    auto bp = number_array(member(*it, "breakpoints", p), p + ".breakpoints");
    auto vals = number_array(member(*it, "values", p), p + ".values");
    density = wrap_invalid(p, [&] { return PiecewiseConstantDensity(std::move(bp), std::move(vals)); });
  }
  return wrap_invalid(path, [&] { return SignedMeasure(std::move(atoms), std::move(density)); });
}

CircleFunction locate_function(const json& doc) {
  if (doc.is_object() && doc.contains("type")) return function_from_json(doc);
  if (doc.is_object() && doc.contains("function")) return function_from_json(doc["function"], "$.function");
  if (doc.is_object() && doc.contains("outputs") && doc["outputs"].contains("function")) {
    return function_from_json(doc["outputs"]["function"], "$.outputs.function");
  }
  schema_error("$", "no function object found");
}

SignedMeasure locate_measure(const json& doc) {
  if (doc.is_object() && (doc.contains("atoms") || doc.contains("density"))) {
    return measure_from_json(doc);
  }
  if (doc.is_object() && doc.contains("measure")) return measure_from_json(doc["measure"], "$.measure");
  if (doc.is_object() && doc.contains("outputs") && doc["outputs"].contains("measure")) {
    return measure_from_json(doc["outputs"]["measure"], "$.outputs.measure");
  }
  schema_error("$", "no measure object found");
}

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace circrep
