#include "biop/ring.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "biop/checked.hpp"

namespace biop {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational reduce(__int128 num, __int128 den) {
  if (den == 0) throw Error(ErrorCode::ZeroDivision, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{checked::narrow(num), checked::narrow(den)};
}

std::int64_t mod_floor(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

void require_same_ring(const RingElement& x, const RingElement& y) {
  if (x.index() != y.index() ||
      (x.index() == 3 && std::get<Residue>(x).modulus != std::get<Residue>(y).modulus))
    throw Error(ErrorCode::RingMismatch,
                "operands from " + ring_of(x).name() + " and " + ring_of(y).name());
}

std::string strip_leading_zeros(std::string s) {
  auto first = s.find_first_not_of('0');
  if (first == std::string::npos) return "0";
  s.erase(0, first);
  return s;
}

Lunar lunar_add(const Lunar& x, const Lunar& y) {
  const std::string& a = x.digits;
  const std::string& b = y.digits;
  const std::string& longer = a.size() >= b.size() ? a : b;
  const std::string& shorter = a.size() >= b.size() ? b : a;
  std::string out = longer;
  std::size_t offset = longer.size() - shorter.size();
  for (std::size_t i = 0; i < shorter.size(); ++i)
    out[offset + i] = std::max(out[offset + i], shorter[i]);
  return Lunar{strip_leading_zeros(std::move(out))};
}

// Long multiplication with min as digit product and max as column sum.
Lunar lunar_mul(const Lunar& x, const Lunar& y) {
  const std::string& a = x.digits;
  const std::string& b = y.digits;
  std::size_t len = a.size() + b.size() - 1;
  std::string out(len, '0');
  // Index from the right: position i + j holds digit_i(a) x digit_j(b).
  for (std::size_t i = 0; i < a.size(); ++i) {
    char da = a[a.size() - 1 - i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      char db = b[b.size() - 1 - j];
      char& slot = out[len - 1 - (i + j)];
      slot = std::max(slot, std::min(da, db));
    }
  }
  return Lunar{strip_leading_zeros(std::move(out))};
}

__int128 eisenstein_norm(const Eisenstein& x) {
  __int128 a = x.a, b = x.b;
  return a * a - a * b + b * b;
}

__int128 sqrt2_norm(const Sqrt2& x) {
  __int128 a = x.a, b = x.b;
  return a * a - 2 * b * b;
}

}  // namespace

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

RingId RingId::prime_field(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31) || !is_prime(p))
    throw Error(ErrorCode::InvalidArgument,
                "prime field modulus must be a prime below 2^31, got " + std::to_string(p));
  return RingId(RingKind::PrimeField, p);
}

std::string RingId::name() const {
  switch (kind_) {
    case RingKind::Nat: return "nat";
    case RingKind::Int: return "int";
    case RingKind::Rational: return "rational";
    case RingKind::PrimeField: return "prime(" + std::to_string(modulus_) + ")";
    case RingKind::Lunar: return "lunar";
    case RingKind::Gaussian: return "gaussian";
    case RingKind::Eisenstein: return "eisenstein";
    case RingKind::Sqrt2: return "sqrt2";
  }
  return "unknown";
}

RingId ring_of(const RingElement& x) {
  switch (x.index()) {
    case 0: return RingId::nat();
    case 1: return RingId::integers();
    case 2: return RingId::rational();
    case 3: return RingId(RingKind::PrimeField, std::get<Residue>(x).modulus);
    case 4: return RingId::lunar();
    case 5: return RingId::gaussian();
    case 6: return RingId::eisenstein();
    default: return RingId::sqrt2();
  }
}

RingElement make_nat(std::int64_t n) {
  if (n < 0) throw Error(ErrorCode::RingMismatch, "negative value " + std::to_string(n) + " is not in nat");
  return Nat{n};
}

RingElement make_int(std::int64_t n) { return Int{n}; }

RingElement make_rational(std::int64_t num, std::int64_t den) { return reduce(num, den); }

RingElement make_residue(std::int64_t value, const RingId& field) {
  if (field.kind() != RingKind::PrimeField)
    throw Error(ErrorCode::RingMismatch, "residue requested in " + field.name());
  return Residue{mod_floor(value, field.modulus()), field.modulus()};
}

RingElement make_lunar(std::string_view digits) {
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
    throw Error(ErrorCode::InvalidArgument, "lunar integer must be a decimal digit string");
  return Lunar{strip_leading_zeros(std::string(digits))};
}

RingElement make_gaussian(std::int64_t re, std::int64_t im) { return Gaussian{re, im}; }
RingElement make_eisenstein(std::int64_t a, std::int64_t b) { return Eisenstein{a, b}; }
RingElement make_sqrt2(std::int64_t a, std::int64_t b) { return Sqrt2{a, b}; }

RingElement from_integer(const RingId& ring, std::int64_t n) {
  switch (ring.kind()) {
    case RingKind::Nat: return make_nat(n);
    case RingKind::Int: return Int{n};
    case RingKind::Rational: return Rational{n, 1};
    case RingKind::PrimeField: return make_residue(n, ring);
    case RingKind::Lunar:
      throw Error(ErrorCode::UnsupportedRing, "no integer embedding into lunar integers");
    case RingKind::Gaussian: return Gaussian{n, 0};
    case RingKind::Eisenstein: return Eisenstein{n, 0};
    case RingKind::Sqrt2: return Sqrt2{n, 0};
  }
  throw Error(ErrorCode::UnsupportedRing, "unknown ring");
}

RingElement zero(const RingId& ring) {
  if (ring.kind() == RingKind::Lunar) return Lunar{"0"};
  return from_integer(ring, 0);
}

RingElement one(const RingId& ring) {
  if (ring.kind() == RingKind::Lunar) return Lunar{"9"};
  return from_integer(ring, 1);
}

RingElement add(const RingElement& x, const RingElement& y) {
  require_same_ring(x, y);
  switch (x.index()) {
    case 0: return Nat{checked::add(std::get<Nat>(x).value, std::get<Nat>(y).value)};
    case 1: return Int{checked::add(std::get<Int>(x).value, std::get<Int>(y).value)};
    case 2: {
      const auto& a = std::get<Rational>(x);
      const auto& b = std::get<Rational>(y);
      return reduce(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                    static_cast<__int128>(a.den) * b.den);
    }
    case 3: {
      const auto& a = std::get<Residue>(x);
      return Residue{(a.value + std::get<Residue>(y).value) % a.modulus, a.modulus};
    }
    case 4: return lunar_add(std::get<Lunar>(x), std::get<Lunar>(y));
    case 5: {
      const auto& a = std::get<Gaussian>(x);
      const auto& b = std::get<Gaussian>(y);
      return Gaussian{checked::add(a.re, b.re), checked::add(a.im, b.im)};
    }
    case 6: {
      const auto& a = std::get<Eisenstein>(x);
      const auto& b = std::get<Eisenstein>(y);
      return Eisenstein{checked::add(a.a, b.a), checked::add(a.b, b.b)};
    }
    default: {
      const auto& a = std::get<Sqrt2>(x);
      const auto& b = std::get<Sqrt2>(y);
      return Sqrt2{checked::add(a.a, b.a), checked::add(a.b, b.b)};
    }
  }
}

RingElement mul(const RingElement& x, const RingElement& y) {
  require_same_ring(x, y);
  switch (x.index()) {
    case 0: return Nat{checked::mul(std::get<Nat>(x).value, std::get<Nat>(y).value)};
    case 1: return Int{checked::mul(std::get<Int>(x).value, std::get<Int>(y).value)};
    case 2: {
      const auto& a = std::get<Rational>(x);
      const auto& b = std::get<Rational>(y);
      return reduce(static_cast<__int128>(a.num) * b.num, static_cast<__int128>(a.den) * b.den);
    }
    case 3: {
      const auto& a = std::get<Residue>(x);
      return Residue{(a.value * std::get<Residue>(y).value) % a.modulus, a.modulus};
    }
    case 4: return lunar_mul(std::get<Lunar>(x), std::get<Lunar>(y));
    case 5: {
      const auto& a = std::get<Gaussian>(x);
      const auto& b = std::get<Gaussian>(y);
      return Gaussian{checked::sub(checked::mul(a.re, b.re), checked::mul(a.im, b.im)),
                      checked::add(checked::mul(a.re, b.im), checked::mul(a.im, b.re))};
    }
    case 6: {
      // (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2,  w^2 = -1 - w
      const auto& p = std::get<Eisenstein>(x);
      const auto& q = std::get<Eisenstein>(y);
      std::int64_t bd = checked::mul(p.b, q.b);
      return Eisenstein{
          checked::sub(checked::mul(p.a, q.a), bd),
          checked::sub(checked::add(checked::mul(p.a, q.b), checked::mul(p.b, q.a)), bd)};
    }
    default: {
      const auto& p = std::get<Sqrt2>(x);
      const auto& q = std::get<Sqrt2>(y);
      return Sqrt2{
          checked::add(checked::mul(p.a, q.a), checked::mul(2, checked::mul(p.b, q.b))),
          checked::add(checked::mul(p.a, q.b), checked::mul(p.b, q.a))};
    }
  }
}

RingElement negate(const RingElement& x) {
  switch (x.index()) {
    case 0:
    case 4:
      throw Error(ErrorCode::UnsupportedRing, ring_of(x).name() + " has no additive inverses");
    case 1: return Int{checked::neg(std::get<Int>(x).value)};
    case 2: {
      const auto& r = std::get<Rational>(x);
      return Rational{checked::neg(r.num), r.den};
    }
    case 3: {
      const auto& r = std::get<Residue>(x);
      return Residue{r.value == 0 ? 0 : r.modulus - r.value, r.modulus};
    }
    case 5: {
      const auto& g = std::get<Gaussian>(x);
      return Gaussian{checked::neg(g.re), checked::neg(g.im)};
    }
    case 6: {
      const auto& e = std::get<Eisenstein>(x);
      return Eisenstein{checked::neg(e.a), checked::neg(e.b)};
    }
    default: {
      const auto& s = std::get<Sqrt2>(x);
      return Sqrt2{checked::neg(s.a), checked::neg(s.b)};
    }
  }
}

RingElement subtract(const RingElement& x, const RingElement& y) {
  require_same_ring(x, y);
  return add(x, negate(y));
}

RingElement times(const RingElement& x, std::uint64_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "zero-fold sum is undefined");
  if (x.index() == 4) return x;  // lunar addition is idempotent
  if (const auto* r = std::get_if<Residue>(&x))
    return Residue{static_cast<std::int64_t>((static_cast<unsigned __int128>(r->value) * k) %
                                             static_cast<std::uint64_t>(r->modulus)),
                   r->modulus};
  std::int64_t n = checked::from_unsigned(k);
  switch (x.index()) {
    case 0: return Nat{checked::mul(std::get<Nat>(x).value, n)};
    case 1: return Int{checked::mul(std::get<Int>(x).value, n)};
    case 2: {
      const auto& r = std::get<Rational>(x);
      return reduce(static_cast<__int128>(r.num) * n, r.den);
    }
    case 5: {
      const auto& g = std::get<Gaussian>(x);
      return Gaussian{checked::mul(g.re, n), checked::mul(g.im, n)};
    }
    case 6: {
      const auto& e = std::get<Eisenstein>(x);
      return Eisenstein{checked::mul(e.a, n), checked::mul(e.b, n)};
    }
    default: {
      const auto& s = std::get<Sqrt2>(x);
      return Sqrt2{checked::mul(s.a, n), checked::mul(s.b, n)};
    }
  }
}

RingElement power(const RingElement& x, std::uint64_t k) {
  RingElement result = one(ring_of(x));
  RingElement base = x;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

bool is_zero(const RingElement& x) { return x == zero(ring_of(x)); }

bool is_unit(const RingElement& x) {
  switch (x.index()) {
    case 0: return std::get<Nat>(x).value == 1;
    case 1: return std::get<Int>(x).value == 1 || std::get<Int>(x).value == -1;
    case 2: return std::get<Rational>(x).num != 0;
    case 3: return std::get<Residue>(x).value != 0;
    case 4: return std::get<Lunar>(x).digits == "9";
    case 5: {
      const auto& g = std::get<Gaussian>(x);
      return (g.re == 0 && (g.im == 1 || g.im == -1)) || (g.im == 0 && (g.re == 1 || g.re == -1));
    }
    case 6: return eisenstein_norm(std::get<Eisenstein>(x)) == 1;
    default: {
      __int128 n = sqrt2_norm(std::get<Sqrt2>(x));
      return n == 1 || n == -1;
    }
  }
}

RingElement field_inverse(const RingElement& x) {
  if (const auto* r = std::get_if<Rational>(&x)) {
    if (r->num == 0) throw Error(ErrorCode::ZeroDivision, "inverse of zero");
    return reduce(r->den, r->num);
  }
  if (const auto* r = std::get_if<Residue>(&x)) {
    if (r->value == 0) throw Error(ErrorCode::ZeroDivision, "inverse of zero");
    // Extended Euclid on (value, modulus).
    std::int64_t old_r = r->value, cur_r = r->modulus;
    std::int64_t old_s = 1, cur_s = 0;
    while (cur_r != 0) {
      std::int64_t q = old_r / cur_r;
      std::int64_t t = old_r - q * cur_r;
      old_r = cur_r;
      cur_r = t;
      t = old_s - q * cur_s;
      old_s = cur_s;
      cur_s = t;
    }
    return Residue{mod_floor(old_s, r->modulus), r->modulus};
  }
  throw Error(ErrorCode::UnsupportedRing, "field_inverse needs a rational or prime-field element");
}

bool divisible_by_one_plus_i(const Gaussian& x) noexcept { return ((x.re ^ x.im) & 1) == 0; }

bool divisible_by_sqrt2(const Sqrt2& x) noexcept { return (x.a & 1) == 0; }

int phi_parity(const RingElement& x) {
  if (const auto* g = std::get_if<Gaussian>(&x)) return static_cast<int>(g->im & 1);
  if (const auto* s = std::get_if<Sqrt2>(&x)) return static_cast<int>(s->b & 1);
  throw Error(ErrorCode::UnsupportedRing, "phi_parity is defined on gaussian and sqrt2 only");
}

std::size_t lunar_digit_count(const Lunar& x) noexcept { return x.digits.size(); }

int lunar_last_digit(const Lunar& x) noexcept { return x.digits.back() - '0'; }

}  // namespace biop
