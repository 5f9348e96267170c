#include "biop/literal.hpp"

#include <charconv>

namespace biop {

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t base) : text_(text), base_(base) {}

  bool done() const { return pos_ == text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  std::size_t position() const { return base_ + pos_; }

  // Unsigned digit run, empty if none.
  std::string_view digits() {
    std::size_t start = pos_;
    while (!done() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    return text_.substr(start, pos_ - start);
  }

  [[noreturn]] void fail(const std::string& expected) const {
    // A stray symbol from another ring's grammar means the literal is well
    // formed, just not for this ring.
    auto foreign = text_.find_first_of("iwr/", pos_);
    if (foreign != std::string_view::npos)
      throw Error(ErrorCode::RingMismatch,
                  "unexpected '" + std::string(1, text_[foreign]) + "' at position " +
                      std::to_string(base_ + foreign) + " (" + expected + ")");
    throw ParseError(position(), expected);
  }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

std::int64_t to_int(std::string_view digits, bool negative, const Cursor& at) {
  std::uint64_t magnitude = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), magnitude);
  if (ec != std::errc() || ptr != digits.data() + digits.size() ||
      magnitude > static_cast<std::uint64_t>(INT64_MAX) + (negative ? 1 : 0))
    throw Error(ErrorCode::Overflow,
                "integer literal out of 64-bit range near position " + std::to_string(at.position()));
  if (negative) return static_cast<std::int64_t>(0 - magnitude);
  return static_cast<std::int64_t>(magnitude);
}

std::int64_t signed_integer(Cursor& c) {
  bool negative = c.accept('-');
  auto d = c.digits();
  if (d.empty()) c.fail("expected digits");
  return to_int(d, negative, c);
}

void expect_end(Cursor& c) {
  if (!c.done()) c.fail("expected end of element");
}

// a | [-][b]X | a(+|-)[b]X, with X the ring's adjoined symbol.
std::pair<std::int64_t, std::int64_t> quadratic(Cursor& c, char symbol) {
  bool negative = c.accept('-');
  auto d = c.digits();
  if (c.accept(symbol)) {
    std::int64_t b = d.empty() ? (negative ? -1 : 1) : to_int(d, negative, c);
    expect_end(c);
    return {0, b};
  }
  if (d.empty()) c.fail(std::string("expected digits or '") + symbol + "'");
  std::int64_t a = to_int(d, negative, c);
  if (c.done()) return {a, 0};
  bool minus;
  if (c.accept('+'))
    minus = false;
  else if (c.accept('-'))
    minus = true;
  else
    c.fail("expected '+', '-' or end of element");
  auto bd = c.digits();
  if (!c.accept(symbol)) c.fail(std::string("expected '") + symbol + "'");
  std::int64_t b = bd.empty() ? (minus ? -1 : 1) : to_int(bd, minus, c);
  expect_end(c);
  return {a, b};
}

RingElement parse_element_at(const RingId& ring, std::string_view text, std::size_t base) {
  Cursor c(text, base);
  if (c.done()) c.fail("expected element");
  switch (ring.kind()) {
    case RingKind::Nat: {
      std::int64_t v = signed_integer(c);
      expect_end(c);
      return make_nat(v);
    }
    case RingKind::Int: {
      std::int64_t v = signed_integer(c);
      expect_end(c);
      return make_int(v);
    }
    case RingKind::Rational: {
      std::int64_t num = signed_integer(c);
      std::int64_t den = 1;
      if (c.accept('/')) {
        auto d = c.digits();
        if (d.empty()) c.fail("expected denominator digits");
        den = to_int(d, false, c);
        if (den == 0) throw ParseError(c.position(), "expected non-zero denominator");
      }
      expect_end(c);
      return make_rational(num, den);
    }
    case RingKind::PrimeField: {
      std::int64_t v = signed_integer(c);
      expect_end(c);
      return make_residue(v, ring);
    }
    case RingKind::Lunar: {
      if (c.peek() == '-') throw Error(ErrorCode::RingMismatch, "lunar integers are non-negative");
      auto d = c.digits();
      if (d.empty()) c.fail("expected lunar digits");
      expect_end(c);
      return make_lunar(d);
    }
    case RingKind::Gaussian: {
      auto [a, b] = quadratic(c, 'i');
      return make_gaussian(a, b);
    }
    case RingKind::Eisenstein: {
      auto [a, b] = quadratic(c, 'w');
      return make_eisenstein(a, b);
    }
    case RingKind::Sqrt2: {
      auto [a, b] = quadratic(c, 'r');
      return make_sqrt2(a, b);
    }
  }
  throw Error(ErrorCode::UnsupportedRing, "unknown ring");
}

std::string render_quadratic(std::int64_t a, std::int64_t b, char symbol) {
  if (b == 0) return std::to_string(a);
  std::string imag = std::to_string(b) + symbol;
  if (a == 0) return imag;
  return std::to_string(a) + (b > 0 ? "+" : "") + imag;
}

}  // namespace

RingId parse_ring(std::string_view name, std::optional<std::int64_t> modulus) {
  if (name.empty() || name == "prime") {
    if (!modulus)
      throw Error(ErrorCode::InvalidArgument, name.empty() ? "no ring given" : "prime field needs a modulus");
    return RingId::prime_field(*modulus);
  }
  if (name.starts_with("prime(") && name.ends_with(")")) {
    auto inner = name.substr(6, name.size() - 7);
    std::int64_t p = 0;
    auto [ptr, ec] = std::from_chars(inner.data(), inner.data() + inner.size(), p);
    if (ec != std::errc() || ptr != inner.data() + inner.size() || (modulus && *modulus != p))
      throw Error(ErrorCode::InvalidArgument, "malformed prime field name '" + std::string(name) + "'");
    return RingId::prime_field(p);
  }
  RingId ring;
  if (name == "nat")
    ring = RingId::nat();
  else if (name == "int")
    ring = RingId::integers();
  else if (name == "rational")
    ring = RingId::rational();
  else if (name == "lunar")
    ring = RingId::lunar();
  else if (name == "gaussian")
    ring = RingId::gaussian();
  else if (name == "eisenstein")
    ring = RingId::eisenstein();
  else if (name == "sqrt2")
    ring = RingId::sqrt2();
  else
    throw Error(ErrorCode::InvalidArgument, "unknown ring '" + std::string(name) + "'");
  if (modulus)
    throw Error(ErrorCode::InvalidArgument, "a modulus only applies to the prime field");
  return ring;
}

RingElement parse_element(const RingId& ring, std::string_view text) {
  return parse_element_at(ring, text, 0);
}

std::string render(const RingElement& x) {
  switch (x.index()) {
    case 0: return std::to_string(std::get<Nat>(x).value);
    case 1: return std::to_string(std::get<Int>(x).value);
    case 2: {
      const auto& r = std::get<Rational>(x);
      if (r.den == 1) return std::to_string(r.num);
      return std::to_string(r.num) + "/" + std::to_string(r.den);
    }
    case 3: return std::to_string(std::get<Residue>(x).value);
    case 4: return std::get<Lunar>(x).digits;
    case 5: return render_quadratic(std::get<Gaussian>(x).re, std::get<Gaussian>(x).im, 'i');
    case 6: return render_quadratic(std::get<Eisenstein>(x).a, std::get<Eisenstein>(x).b, 'w');
    default: return render_quadratic(std::get<Sqrt2>(x).a, std::get<Sqrt2>(x).b, 'r');
  }
}

Multiset parse_multiset_literal(const RingId& ring, std::string_view text) {
  if (text.empty()) throw ParseError(0, "expected at least one element");
  Multiset out(ring);
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (item.empty()) throw ParseError(start, "expected element");
    std::size_t star = item.find('*');
    std::uint64_t repeat = 1;
    if (star != std::string_view::npos) {
      std::string_view count = item.substr(star + 1);
      auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), repeat);
      if (count.empty() || ec != std::errc() || ptr != count.data() + count.size() || repeat == 0)
        throw ParseError(start + star + 1, "expected positive repetition count after '*'");
      item = item.substr(0, star);
      if (item.empty()) throw ParseError(start, "expected element before '*'");
    }
    out.insert(parse_element_at(ring, item, start), repeat);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string render(const Multiset& s) {
  std::string out;
  for (const auto& [x, k] : s.entries()) {
    if (!out.empty()) out += ',';
    out += render(x);
    if (k > 1) out += "*" + std::to_string(k);
  }
  return out;
}

}  // namespace biop
