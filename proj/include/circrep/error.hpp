#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace circrep {

enum class ErrorCode {
  InvalidInput,
  SchemaError,
  UnknownFixture,
  TVNotConverged,
  DerivativeUnavailable,
  NotAntipodal,
  ReconstructionFailed,
  NotRepresentableByMeasure,
  NegativeMass,
  NotARepresentation,
  ProblemTooLarge,
  BoundaryPoint,
  InternalError,
};

std::string_view to_string(ErrorCode code);

// True for failures that describe the mathematics of the input (as opposed to
// malformed input or usage errors).
bool is_mathematical(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::map<std::string, double> values = {})
      : std::runtime_error(message), code_(code), values_(std::move(values)) {}

  ErrorCode code() const noexcept { return code_; }

  // Machine-readable payload, e.g. {"tv": 12, "fourC": 4}.
  const std::map<std::string, double>& values() const noexcept { return values_; }

 private:
  ErrorCode code_;
  std::map<std::string, double> values_;
};

}  // namespace circrep
