#include "statuslab/error.hpp"

namespace statuslab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedInput: return "MalformedInput";
    case ErrorCode::kNotATree: return "NotATree";
    case ErrorCode::kBadLength: return "BadLength";
    case ErrorCode::kLabelOutOfRange: return "LabelOutOfRange";
    case ErrorCode::kTooSmall: return "TooSmall";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kNonPositiveLength: return "NonPositiveLength";
    case ErrorCode::kEmptyTargetSet: return "EmptyTargetSet";
    case ErrorCode::kMethodPreconditionViolated: return "MethodPreconditionViolated";
    case ErrorCode::kParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::kEmptyLegs: return "EmptyLegs";
    case ErrorCode::kParityMismatch: return "ParityMismatch";
    case ErrorCode::kCeilingExceeded: return "CeilingExceeded";
    case ErrorCode::kOutOfDomain: return "OutOfDomain";
    case ErrorCode::kUnknownClaim: return "UnknownClaim";
    case ErrorCode::kUnknownLemma: return "UnknownLemma";
    case ErrorCode::kHypothesisViolated: return "HypothesisViolated";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace statuslab
