#include "radezero/error.hpp"

namespace radezero {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DegenerateGroup: return "DegenerateGroup";
    case ErrorCode::TooFewTerms: return "TooFewTerms";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::ZeroNearCircle: return "ZeroNearCircle";
    case ErrorCode::RootFindingFailure: return "RootFindingFailure";
    case ErrorCode::Saturated: return "Saturated";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::NotCentralDominant: return "NotCentralDominant";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

}  // namespace radezero
