#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "circrep/circle_function.hpp"
#include "circrep/signed_measure.hpp"

namespace circrep {

inline constexpr int kSchemaVersion = 1;

// {"type":"pl","breakpoints":[...],"values":[...]}
nlohmann::json to_json(const PLFunction& f);
// PL as above; smooth functions serialize by name only.
nlohmann::json to_json(const CircleFunction& f);
// {"atoms":[{"angle":..,"weight":..}],"density":{"breakpoints":[...],"values":[...]}}
nlohmann::json to_json(const SignedMeasure& m);

// Schema violations throw SchemaError naming the JSON path.
PLFunction pl_from_json(const nlohmann::json& j, const std::string& path = "$");
// Accepts {"type":"pl",...} or {"type":"fixture","id":"tripod"}.
CircleFunction function_from_json(const nlohmann::json& j, const std::string& path = "$");
SignedMeasure measure_from_json(const nlohmann::json& j, const std::string& path = "$");

// Finds the function inside a bare function object, {"function": ...} or a
// report's {"outputs": {"function": ...}}.
CircleFunction locate_function(const nlohmann::json& doc);
// Same for measures, looking for "measure" keys.
SignedMeasure locate_measure(const nlohmann::json& doc);

std::string fnv1a64_hex(std::string_view bytes);

}  // namespace circrep
