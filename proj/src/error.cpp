#include "biop/error.hpp"

namespace biop {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::EmptyMultiset: return "EmptyMultiset";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::NotSubmultiset: return "NotSubmultiset";
    case ErrorCode::Overflow: return "OverflowError";
    case ErrorCode::NotBioperational: return "NotBioperational";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::UnsupportedRing: return "UnsupportedRing";
    case ErrorCode::ZeroDivision: return "ZeroDivision";
    case ErrorCode::ProductIsOne: return "ProductIsOne";
    case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

ParseError::ParseError(std::size_t position, const std::string& expected)
    : Error(ErrorCode::ParseError,
            "at position " + std::to_string(position) + ": " + expected),
      position_(position) {}

}  // namespace biop
