#pragma once

// Overflow-checked 64-bit integer arithmetic. Every ring component goes
// through these; nothing in the library is allowed to wrap.

#include <cstdint>
#include <limits>

#include "biop/error.hpp"

namespace biop::checked {

[[noreturn]] inline void overflow(const char* what) {
  throw Error(ErrorCode::Overflow, std::string("64-bit overflow in ") + what);
}

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) overflow("addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) overflow("subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) overflow("multiplication");
  return r;
}

inline std::int64_t neg(std::int64_t a) { return sub(0, a); }

inline std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    overflow("narrowing");
  return static_cast<std::int64_t>(v);
}

inline std::int64_t from_unsigned(std::uint64_t v) {
  if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
    overflow("multiplicity conversion");
  return static_cast<std::int64_t>(v);
}

}  // namespace biop::checked
