#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cone_runge {

enum class ErrorCode {
  kNonFinite,
  kNotInCone,
  kNotRootSphere,
  kOutOfDomain,
  kNotRealDenominator,
  kZeroDenominator,
  kBadBasis,
  kResolutionTooLow,
  kInvalidWindow,
  kFeatureTooThin,
  kGridMismatch,
  kNotNested,
  kParityViolation,
  kDegreeTooLargeForSamples,
  kPoleInsideDomain,
  kCompactNotInDomain,
  kTooFewSamples,
  kSchema,
};

std::string_view to_string(ErrorCode code);

// All recoverable failures of the library surface as this exception type.
// Internal invariant breaks (a bug, not bad input) use std::logic_error.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Input document did not match the expected schema. `pointer` is an
// RFC 6901 JSON pointer to the offending field.
class SchemaError : public Error {
 public:
  SchemaError(std::string pointer, const std::string& what)
      : Error(ErrorCode::kSchema, pointer + ": " + what), pointer_(std::move(pointer)) {}

  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

}  // namespace cone_runge
