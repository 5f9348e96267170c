#pragma once

// Exact arithmetic for the eight supported structures.
//
// Elements are plain value types held in a std::variant. Every element knows
// which ring it lives in (prime-field residues carry their modulus), so
// binary operations can reject mixed-ring operands with RingMismatch.
//
// Integer components are 64-bit and checked; overflow throws instead of
// wrapping.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "biop/error.hpp"

namespace biop {

enum class RingKind : std::uint8_t {
  Nat,
  Int,
  Rational,
  PrimeField,
  Lunar,
  Gaussian,
  Eisenstein,
  Sqrt2,
};

struct Nat {
  std::int64_t value = 0;
  friend constexpr auto operator<=>(const Nat&, const Nat&) = default;
};

struct Int {
  std::int64_t value = 0;
  friend constexpr auto operator<=>(const Int&, const Int&) = default;
};

// Always reduced, den > 0. Ordered by (num, den), not by numeric value.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  friend constexpr auto operator<=>(const Rational&, const Rational&) = default;
};

struct Residue {
  std::int64_t value = 0;  // in [0, modulus)
  std::int64_t modulus = 2;
  friend constexpr auto operator<=>(const Residue&, const Residue&) = default;
};

// Base-10 dismal arithmetic. Canonical digit string without leading zeros
// ("0" for zero). Ordered by length, then lexicographically.
struct Lunar {
  std::string digits = "0";

  friend bool operator==(const Lunar&, const Lunar&) = default;
  friend std::strong_ordering operator<=>(const Lunar& x, const Lunar& y) {
    if (auto c = x.digits.size() <=> y.digits.size(); c != 0) return c;
    return x.digits.compare(y.digits) <=> 0;
  }
};

// re + im*i
struct Gaussian {
  std::int64_t re = 0;
  std::int64_t im = 0;
  friend constexpr auto operator<=>(const Gaussian&, const Gaussian&) = default;
};

// a + b*w with w^2 = -1 - w
struct Eisenstein {
  std::int64_t a = 0;
  std::int64_t b = 0;
  friend constexpr auto operator<=>(const Eisenstein&, const Eisenstein&) = default;
};

// a + b*sqrt(2)
struct Sqrt2 {
  std::int64_t a = 0;
  std::int64_t b = 0;
  friend constexpr auto operator<=>(const Sqrt2&, const Sqrt2&) = default;
};

using RingElement =
    std::variant<Nat, Int, Rational, Residue, Lunar, Gaussian, Eisenstein, Sqrt2>;

class RingId {
 public:
  constexpr RingId() = default;

  static constexpr RingId nat() { return RingId(RingKind::Nat, 0); }
  static constexpr RingId integers() { return RingId(RingKind::Int, 0); }
  static constexpr RingId rational() { return RingId(RingKind::Rational, 0); }
  static constexpr RingId lunar() { return RingId(RingKind::Lunar, 0); }
  static constexpr RingId gaussian() { return RingId(RingKind::Gaussian, 0); }
  static constexpr RingId eisenstein() { return RingId(RingKind::Eisenstein, 0); }
  static constexpr RingId sqrt2() { return RingId(RingKind::Sqrt2, 0); }
  // Throws InvalidArgument unless p is a prime below 2^31.
  static RingId prime_field(std::int64_t p);

  constexpr RingKind kind() const noexcept { return kind_; }
  // Zero for every ring except PrimeField.
  constexpr std::int64_t modulus() const noexcept { return modulus_; }

  bool is_field() const noexcept {
    return kind_ == RingKind::Rational || kind_ == RingKind::PrimeField;
  }
  // Lunar integers are the only structure here that is not an integral domain
  // (they are not even a ring).
  bool is_integral_domain() const noexcept { return kind_ != RingKind::Lunar; }

  // "nat", "int", "rational", "prime(11)", "lunar", "gaussian", "eisenstein", "sqrt2".
  std::string name() const;

  friend constexpr bool operator==(const RingId&, const RingId&) = default;
  friend RingId ring_of(const RingElement& x);

 private:
  constexpr RingId(RingKind kind, std::int64_t modulus) : kind_(kind), modulus_(modulus) {}

  RingKind kind_ = RingKind::Nat;
  std::int64_t modulus_ = 0;
};

bool is_prime(std::int64_t n) noexcept;

RingId ring_of(const RingElement& x);

// Constructors. All validate and canonicalize.
RingElement make_nat(std::int64_t n);
RingElement make_int(std::int64_t n);
RingElement make_rational(std::int64_t num, std::int64_t den);
RingElement make_residue(std::int64_t value, const RingId& field);
RingElement make_lunar(std::string_view digits);
RingElement make_gaussian(std::int64_t re, std::int64_t im);
RingElement make_eisenstein(std::int64_t a, std::int64_t b);
RingElement make_sqrt2(std::int64_t a, std::int64_t b);

// Image of an ordinary integer. Not defined for lunar integers, and negative
// values are rejected in Nat.
RingElement from_integer(const RingId& ring, std::int64_t n);

RingElement zero(const RingId& ring);
// Lunar one is 9.
RingElement one(const RingId& ring);

RingElement add(const RingElement& x, const RingElement& y);
RingElement mul(const RingElement& x, const RingElement& y);
// UnsupportedRing for Nat and Lunar.
RingElement negate(const RingElement& x);
RingElement subtract(const RingElement& x, const RingElement& y);
// k-fold sum x + ... + x, k >= 1.
RingElement times(const RingElement& x, std::uint64_t k);
// x^k, k >= 0.
RingElement power(const RingElement& x, std::uint64_t k);

bool is_zero(const RingElement& x);
bool is_unit(const RingElement& x);

// Rational and PrimeField only. ZeroDivision on zero.
RingElement field_inverse(const RingElement& x);

// a + bi is a multiple of 1 + i iff a and b have the same parity.
bool divisible_by_one_plus_i(const Gaussian& x) noexcept;
// a + b*sqrt(2) is a multiple of sqrt(2) iff a is even.
bool divisible_by_sqrt2(const Sqrt2& x) noexcept;
// b mod 2 for a + bi or a + b*sqrt(2). UnsupportedRing otherwise.
int phi_parity(const RingElement& x);

std::size_t lunar_digit_count(const Lunar& x) noexcept;
int lunar_last_digit(const Lunar& x) noexcept;

inline RingElement operator+(const RingElement& x, const RingElement& y) { return add(x, y); }
inline RingElement operator*(const RingElement& x, const RingElement& y) { return mul(x, y); }
inline RingElement operator-(const RingElement& x, const RingElement& y) { return subtract(x, y); }
inline RingElement operator-(const RingElement& x) { return negate(x); }

}  // namespace biop
