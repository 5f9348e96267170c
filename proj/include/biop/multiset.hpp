#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "biop/ring.hpp"

namespace biop {

// Finite multiset over a single ring. Entries are kept sorted in the ring's
// canonical element order with positive multiplicities and no duplicate keys,
// so equal multisets compare and render identically.
class Multiset {
 public:
  using Entry = std::pair<RingElement, std::uint64_t>;

  explicit Multiset(RingId ring) : ring_(ring) {}
  Multiset(RingId ring, std::span<const RingElement> elements);
  Multiset(RingId ring, std::initializer_list<RingElement> elements);
  // Merges duplicate keys; zero multiplicities are dropped.
  static Multiset from_entries(RingId ring, std::vector<Entry> entries);

  const RingId& ring() const noexcept { return ring_; }
  std::span<const Entry> entries() const noexcept { return entries_; }
  std::size_t distinct() const noexcept { return entries_.size(); }
  // Total multiplicity.
  std::uint64_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  std::uint64_t count(const RingElement& x) const;
  bool contains(const RingElement& x) const { return count(x) > 0; }
  // Expanded, canonically sorted element list.
  std::vector<RingElement> elements() const;

  // RingMismatch if x belongs to another ring.
  void insert(const RingElement& x, std::uint64_t multiplicity = 1);
  // NotSubmultiset if x does not occur often enough.
  void erase(const RingElement& x, std::uint64_t multiplicity = 1);

  friend bool operator==(const Multiset& a, const Multiset& b) {
    return a.ring_ == b.ring_ && a.entries_ == b.entries_;
  }
  // Lexicographic on the expanded sorted element sequences.
  friend std::strong_ordering operator<=>(const Multiset& a, const Multiset& b);

 private:
  RingId ring_;
  std::vector<Entry> entries_;
  std::uint64_t size_ = 0;
};

struct SumProductReport {
  RingElement sum;
  RingElement product;
  bool is_bioperational = false;
  bool is_trivial = false;
  bool is_vanishing = false;
};

// EmptyMultiset on empty input.
RingElement sigma(const Multiset& s);
RingElement pi(const Multiset& s);

Multiset msum(const Multiset& a, const Multiset& b);
// NotSubmultiset unless b is contained in a.
Multiset mdiff(const Multiset& a, const Multiset& b);
Multiset mscale(std::uint64_t k, const Multiset& a);
bool is_submultiset(const Multiset& b, const Multiset& a);

SumProductReport classify(const Multiset& s);

inline bool is_bioperational(const Multiset& s) { return classify(s).is_bioperational; }

// Upper bound on visited search nodes (candidate sub-multisets or lattice
// vectors). Exhausting it throws SearchBudgetExceeded.
struct SearchBudget {
  std::uint64_t max_nodes = std::uint64_t{1} << 20;
};

struct MinimalityResult {
  bool minimal = true;
  // When not minimal: the smallest removable sub-multiset T (ties broken by
  // canonical order). S - T is bioperational with the same sum-product; for a
  // non-vanishing S this means pi(T) = 1 and sigma(T) = 0.
  std::optional<Multiset> witness;
};

// NotBioperational if s is not bioperational.
//
// Integral domains other than fields: a non-vanishing S loses only units, so
// the candidates are the unit entries of S and the removable sets are the
// non-negative integer solutions of a small linear system (sum zero, product
// one via the unit group's discrete log). Its componentwise-minimal
// solutions are enumerated with the Contejean-Devie completion procedure,
// which never needs to walk the full box of sub-multisets.
//
// Fields and lunar integers: plain enumeration of sub-multisets.
MinimalityResult is_minimal(const Multiset& s, SearchBudget budget = {});

}  // namespace biop
