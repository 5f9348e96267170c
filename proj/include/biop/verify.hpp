#pragma once

// Runnable checks of the structural facts the constructions rely on. Each
// returns a report instead of asserting, so callers (tests, CLI) decide what
// a failure means.

#include <cstdint>
#include <string>
#include <vector>

#include "biop/enumerate.hpp"

namespace biop {

struct VerifyReport {
  std::string target;
  bool holds = true;
  // Number of multisets (or operand pairs) examined.
  std::uint64_t cases = 0;
  std::vector<Multiset> counterexamples;
  // Non-trivial bioperational multisets met along the way, where that is
  // informative (lunar and field searches).
  std::vector<Multiset> found;
};

// pi >= sigma for random multisets of integers in [2, 50] of size 1..8, and
// strictly so when the size is at least 2 and some element exceeds 2.
VerifyReport verify_product_dominates_sum(std::uint64_t cases, std::uint64_t seed);

// Im(pi) = Im(sigma) mod 2 for random Gaussian multisets of size 1..6 with
// no element divisible by 1+i.
VerifyReport verify_gaussian_parity(std::uint64_t cases, std::uint64_t seed);
// Same congruence for the sqrt2 coefficient over Z[sqrt2], no element
// divisible by sqrt2.
VerifyReport verify_sqrt2_parity(std::uint64_t cases, std::uint64_t seed);

// For every non-trivial bioperational multiset over F_p of size <= max_len,
// some element a satisfies pi(S - {a}) != 1 and
// a = sigma(S - {a}) / (pi(S - {a}) - 1). p <= 13, max_len <= 5.
VerifyReport verify_field_exhaustiveness(std::int64_t p, std::int64_t max_len,
                                         SearchBudget budget = {kEnumerationNodeBudget});

// Every non-trivial lunar bioperational multiset with at most max_len
// elements of at most max_digits digits has at most one element with two or
// more digits and is not minimal. max_digits <= 3, max_len <= 5.
VerifyReport verify_lunar_triviality(int max_digits, std::int64_t max_len,
                                     SearchBudget budget = {kEnumerationNodeBudget});

}  // namespace biop
