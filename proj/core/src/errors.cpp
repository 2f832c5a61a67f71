#include "cone_runge/errors.hpp"

namespace cone_runge {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonFinite: return "NonFinite";
    case ErrorCode::kNotInCone: return "NotInCone";
    case ErrorCode::kNotRootSphere: return "NotRootSphere";
    case ErrorCode::kOutOfDomain: return "OutOfDomain";
    case ErrorCode::kNotRealDenominator: return "NotRealDenominator";
    case ErrorCode::kZeroDenominator: return "ZeroDenominator";
    case ErrorCode::kBadBasis: return "BadBasis";
    case ErrorCode::kResolutionTooLow: return "ResolutionTooLow";
    case ErrorCode::kInvalidWindow: return "InvalidWindow";
    case ErrorCode::kFeatureTooThin: return "FeatureTooThin";
    case ErrorCode::kGridMismatch: return "GridMismatch";
    case ErrorCode::kNotNested: return "NotNested";
    case ErrorCode::kParityViolation: return "ParityViolation";
    case ErrorCode::kDegreeTooLargeForSamples: return "DegreeTooLargeForSamples";
    case ErrorCode::kPoleInsideDomain: return "PoleInsideDomain";
    case ErrorCode::kCompactNotInDomain: return "CompactNotInDomain";
    case ErrorCode::kTooFewSamples: return "TooFewSamples";
    case ErrorCode::kSchema: return "SchemaError";
  }
  return "UnknownError";
}

}  // namespace cone_runge
