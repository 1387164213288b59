#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace radezero {

/// Failure kinds raised by the numerical modules. The CLI prints the name
/// returned by error_name() on standard error and exits with status 2.
enum class ErrorCode {
  DegenerateGroup,
  TooFewTerms,
  TooLarge,
  NoConvergence,
  ZeroNearCircle,
  RootFindingFailure,
  Saturated,
  OutOfRange,
  NotConvex,
  ConstructionFailed,
  NotCentralDominant,
  Overflow,
  InvalidArgument,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace radezero
