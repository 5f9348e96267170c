#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace biop {

enum class ErrorCode {
  ParseError = 1,
  EmptyMultiset,
  RingMismatch,
  NotSubmultiset,
  Overflow,
  NotBioperational,
  SearchBudgetExceeded,
  PreconditionViolation,
  UnsupportedRing,
  ZeroDivision,
  ProductIsOne,
  InternalInvariantViolation,
  InvalidArgument,
};

// Stable names, used verbatim on the CLI diagnostic stream.
std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& expected);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace biop
