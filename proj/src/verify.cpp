#include "biop/verify.hpp"

#include <random>

namespace biop {

namespace {

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

void fail(VerifyReport& report, Multiset s) {
  report.holds = false;
  if (report.counterexamples.size() < 20) report.counterexamples.push_back(std::move(s));
}

template <class Draw, class Parity>
VerifyReport parity_check(std::string target, const RingId& ring, std::uint64_t cases,
                          std::uint64_t seed, Draw draw, Parity parity) {
  VerifyReport report;
  report.target = std::move(target);
  std::mt19937_64 rng(seed);
  for (std::uint64_t c = 0; c < cases; ++c) {
    Multiset s(ring);
    auto size = uniform(rng, 1, 6);
    for (std::int64_t i = 0; i < size; ++i) s.insert(draw(rng));
    ++report.cases;
    if (parity(sigma(s)) != parity(pi(s))) fail(report, s);
  }
  return report;
}

}  // namespace

VerifyReport verify_product_dominates_sum(std::uint64_t cases, std::uint64_t seed) {
  VerifyReport report;
  report.target = "product-dominates-sum";
  std::mt19937_64 rng(seed);
  for (std::uint64_t c = 0; c < cases; ++c) {
    Multiset s(RingId::nat());
    auto size = uniform(rng, 1, 8);
    bool above_two = false;
    for (std::int64_t i = 0; i < size; ++i) {
      auto v = uniform(rng, 2, 50);
      above_two |= v > 2;
      s.insert(make_nat(v));
    }
    ++report.cases;
    auto sum = std::get<Nat>(sigma(s)).value;
    auto product = std::get<Nat>(pi(s)).value;
    bool strict = size >= 2 && above_two;
    if (product < sum || (strict && product == sum)) fail(report, s);
  }
  return report;
}

VerifyReport verify_gaussian_parity(std::uint64_t cases, std::uint64_t seed) {
  return parity_check(
      "gaussian-parity", RingId::gaussian(), cases, seed,
      [](std::mt19937_64& rng) {
        while (true) {
          Gaussian g{uniform(rng, -20, 20), uniform(rng, -20, 20)};
          if (!divisible_by_one_plus_i(g)) return RingElement(g);
        }
      },
      [](const RingElement& x) { return phi_parity(x); });
}

VerifyReport verify_sqrt2_parity(std::uint64_t cases, std::uint64_t seed) {
  return parity_check(
      "sqrt2-parity", RingId::sqrt2(), cases, seed,
      [](std::mt19937_64& rng) {
        while (true) {
          Sqrt2 x{uniform(rng, -20, 20), uniform(rng, -20, 20)};
          if (!divisible_by_sqrt2(x)) return RingElement(x);
        }
      },
      [](const RingElement& x) { return phi_parity(x); });
}

VerifyReport verify_field_exhaustiveness(std::int64_t p, std::int64_t max_len, SearchBudget budget) {
  if (p > 13 || max_len > 5)
    throw Error(ErrorCode::PreconditionViolation, "field exhaustiveness is checked for p <= 13, max_len <= 5");
  RingId field = RingId::prime_field(p);
  VerifyReport report;
  report.target = "field-exhaustiveness";
  const RingElement unity = one(field);
  for (auto& s : brute_force_biop_search(field, field_pool(field), max_len, {false, true}, budget)) {
    ++report.cases;
    bool produced = false;
    for (const auto& [a, k] : s.entries()) {
      Multiset rest = s;
      rest.erase(a);
      RingElement product = pi(rest);
      if (product == unity) continue;
      if (mul(sigma(rest), field_inverse(subtract(product, unity))) == a) {
        produced = true;
        break;
      }
    }
    if (!produced) fail(report, s);
    report.found.push_back(std::move(s));
  }
  return report;
}

VerifyReport verify_lunar_triviality(int max_digits, std::int64_t max_len, SearchBudget budget) {
  if (max_digits > 3 || max_len > 5)
    throw Error(ErrorCode::PreconditionViolation, "lunar triviality is checked for max_digits <= 3, max_len <= 5");
  VerifyReport report;
  report.target = "lunar-triviality";
  for (auto& s : brute_force_biop_search(RingId::lunar(), lunar_pool(max_digits), max_len,
                                         {false, true}, budget)) {
    ++report.cases;
    std::uint64_t long_elements = 0;
    for (const auto& [x, k] : s.entries())
      if (lunar_digit_count(std::get<Lunar>(x)) >= 2) long_elements += k;
    if (long_elements > 1 || is_minimal(s, budget).minimal) fail(report, s);
    report.found.push_back(std::move(s));
  }
  return report;
}

}  // namespace biop
