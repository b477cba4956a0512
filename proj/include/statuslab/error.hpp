#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace statuslab {

enum class ErrorCode {
  kMalformedInput,
  kNotATree,
  kBadLength,
  kLabelOutOfRange,
  kTooSmall,
  kVertexOutOfRange,
  kNonPositiveLength,
  kEmptyTargetSet,
  kMethodPreconditionViolated,
  kParamOutOfRange,
  kEmptyLegs,
  kParityMismatch,
  kCeilingExceeded,
  kOutOfDomain,
  kUnknownClaim,
  kUnknownLemma,
  kHypothesisViolated,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (and the CLI's exit-code mapping) can branch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace statuslab
