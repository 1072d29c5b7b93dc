#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cqi {

enum class ErrorCode {
  NonPrime,
  EmptySignature,
  InvalidSpec,
  OutOfRange,
  CapExceeded,
  ZeroProfile,
  NotAPermutation,
  TooLarge,
  NotInY,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the group-spec text grammar; position is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace cqi
