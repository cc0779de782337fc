#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace curvegen {

enum class ErrorCode {
  ZeroSheaf,
  InvalidArgument,
  NotLocallyFree,
  NotSplit,
  NotSemistable,
  UnknownAssumptionTarget,
  InconsistentAssumption,
  VerdictMismatch,
};

std::string_view to_string(ErrorCode code);

/// Domain error raised by the engine. Arithmetic overflow is reported
/// separately as std::overflow_error.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace curvegen
