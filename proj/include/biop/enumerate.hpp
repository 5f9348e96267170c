#pragma once

// Exhaustive searches: bioperational multisets over N by length or by
// sum-product, the record positions of the length counts, a generic
// brute-force search over a finite element pool, and uniform solutions
// {a x n} over prime fields.

#include <cstdint>
#include <utility>
#include <vector>

#include "biop/multiset.hpp"

namespace biop {

// Default node budget for the exhaustive searches in this header.
inline constexpr std::uint64_t kEnumerationNodeBudget = 100'000'000;

enum class QueryKind { ByLength, BySumProduct };

struct EnumerationReport {
  RingId ring = RingId::nat();
  QueryKind kind = QueryKind::ByLength;
  std::int64_t value = 0;
  // Canonically sorted, duplicate-free.
  std::vector<Multiset> solutions;
  std::size_t count() const noexcept { return solutions.size(); }
};

struct RecordReport {
  std::int64_t max_n = 0;
  // counts[i] is the number of solutions of length i + 2.
  std::vector<std::uint64_t> counts;
  // Lengths where the count strictly exceeds every earlier count.
  std::vector<std::int64_t> positions;
};

struct NatSearchOptions {
  // Adds the all-zero multiset of length n.
  bool include_vanishing = false;
  // Splits the search on the largest element; 0 or 1 runs inline.
  unsigned threads = 1;
  SearchBudget budget{kEnumerationNodeBudget};
};

// All bioperational multisets over N of length exactly n >= 2, without the
// vanishing one unless asked for.
EnumerationReport enumerate_nat_by_length(std::int64_t n, const NatSearchOptions& options = {});
// Number of non-vanishing solutions of length n, without materializing them.
std::uint64_t count_nat_by_length(std::int64_t n, SearchBudget budget = {kEnumerationNodeBudget});

// One solution per factorization of m into at least two parts >= 2, each
// padded with ones. Empty for prime m.
EnumerationReport enumerate_nat_by_sum_product(std::int64_t m);

// Unordered factorizations of m into at least two parts >= 2, each sorted
// ascending.
std::vector<std::vector<std::int64_t>> nat_factorizations(std::int64_t m);

RecordReport records_nat(std::int64_t max_n, SearchBudget budget = {kEnumerationNodeBudget});

// Terms of the length-count sequence starting at n = 2.
std::vector<std::uint64_t> nat_length_counts(std::size_t terms);
// The first `terms` record positions. Gives up with SearchBudgetExceeded if
// they are not all found below max_n.
std::vector<std::int64_t> nat_record_positions(std::size_t terms, std::int64_t max_n = 5000);

struct SearchFilter {
  bool include_trivial = true;
  bool include_vanishing = true;
};

// Every bioperational multiset with elements from the pool and total
// multiplicity 1..max_len (max_len <= 8). Canonically sorted.
std::vector<Multiset> brute_force_biop_search(const RingId& ring, const std::vector<RingElement>& pool,
                                              std::int64_t max_len, SearchFilter filter = {},
                                              SearchBudget budget = {kEnumerationNodeBudget});

struct UniformSolution {
  std::int64_t a = 0;
  std::int64_t n = 0;
  friend bool operator==(const UniformSolution&, const UniformSolution&) = default;
};

// (a, n) with 2 <= n <= n_max and a^(n-1) = n in F_p, so that {a x n} is
// bioperational. Sorted by n, then a.
std::vector<UniformSolution> uniform_field_solutions(std::int64_t p, std::int64_t n_max);

// Every lunar integer with at most `max_digits` digits, in canonical order.
std::vector<RingElement> lunar_pool(int max_digits);
// Every residue of F_p.
std::vector<RingElement> field_pool(const RingId& field);

}  // namespace biop
