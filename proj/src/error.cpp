#include "cqi/error.hpp"

namespace cqi {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::EmptySignature: return "EmptySignature";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::ZeroProfile: return "ZeroProfile";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotInY: return "NotInY";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

ParseError::ParseError(std::size_t position, const std::string& what)
    : Error(ErrorCode::ParseError,
            "parse error at " + std::to_string(position) + ": " + what),
      position_(position) {}

}  // namespace cqi
