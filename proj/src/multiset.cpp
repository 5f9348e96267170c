#include "biop/multiset.hpp"

#include <algorithm>
#include <optional>

namespace biop {

namespace {

bool key_less(const Multiset::Entry& e, const RingElement& x) { return e.first < x; }

std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "multiplicity overflow");
  return r;
}

std::uint64_t checked_add_u64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "multiplicity overflow");
  return r;
}

void require_same_ring(const Multiset& a, const Multiset& b) {
  if (a.ring() != b.ring())
    throw Error(ErrorCode::RingMismatch,
                "multisets over " + a.ring().name() + " and " + b.ring().name());
}

// Largest multiset the balanced fallback will walk one factor at a time.
constexpr std::uint64_t kBalancedProductLimit = 10'000'000;

// Rough magnitude used to keep partial products small.
__int128 magnitude(const RingElement& x) {
  auto abs = [](std::int64_t v) { return v < 0 ? -static_cast<__int128>(v) : static_cast<__int128>(v); };
  if (const auto* r = std::get_if<Sqrt2>(&x)) return abs(r->a) + abs(r->b);
  if (const auto* q = std::get_if<Rational>(&x)) return std::max(abs(q->num), abs(q->den));
  return 0;
}

// Multiplies one factor at a time, each step taking the factor that leaves
// the smallest partial product.
RingElement balanced_product(std::vector<Multiset::Entry> left) {
  RingElement total = left[0].first;
  --left[0].second;
  while (true) {
    std::size_t best = left.size();
    std::optional<RingElement> best_value;
    __int128 best_size = 0;
    for (std::size_t i = 0; i < left.size(); ++i) {
      if (left[i].second == 0) continue;
      try {
        RingElement candidate = mul(total, left[i].first);
        __int128 size = magnitude(candidate);
        if (!best_value || size < best_size) {
          best = i;
          best_size = size;
          best_value = std::move(candidate);
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::Overflow) throw;
      }
    }
    if (best == left.size()) {
      for (const auto& [x, k] : left)
        if (k) throw Error(ErrorCode::Overflow, "64-bit overflow in multiplication");
      return total;
    }
    total = std::move(*best_value);
    --left[best].second;
  }
}

void require_non_empty(const Multiset& s) {
  if (s.empty()) throw Error(ErrorCode::EmptyMultiset, "operation needs a non-empty multiset");
}

}  // namespace

Multiset::Multiset(RingId ring, std::span<const RingElement> elements) : ring_(ring) {
  for (const auto& x : elements) insert(x);
}

Multiset::Multiset(RingId ring, std::initializer_list<RingElement> elements)
    : Multiset(ring, std::span<const RingElement>(elements.begin(), elements.size())) {}

Multiset Multiset::from_entries(RingId ring, std::vector<Entry> entries) {
  Multiset m(ring);
  for (auto& [x, k] : entries)
    if (k > 0) m.insert(x, k);
  return m;
}

std::uint64_t Multiset::count(const RingElement& x) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), x, key_less);
  return (it != entries_.end() && it->first == x) ? it->second : 0;
}

std::vector<RingElement> Multiset::elements() const {
  std::vector<RingElement> out;
  for (const auto& [x, k] : entries_)
    for (std::uint64_t i = 0; i < k; ++i) out.push_back(x);
  return out;
}

void Multiset::insert(const RingElement& x, std::uint64_t multiplicity) {
  if (ring_of(x) != ring_)
    throw Error(ErrorCode::RingMismatch,
                "element of " + ring_of(x).name() + " inserted into multiset over " + ring_.name());
  if (multiplicity == 0) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), x, key_less);
  if (it != entries_.end() && it->first == x)
    it->second = checked_add_u64(it->second, multiplicity);
  else
    entries_.insert(it, Entry{x, multiplicity});
  size_ = checked_add_u64(size_, multiplicity);
}

void Multiset::erase(const RingElement& x, std::uint64_t multiplicity) {
  if (multiplicity == 0) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), x, key_less);
  if (it == entries_.end() || !(it->first == x) || it->second < multiplicity)
    throw Error(ErrorCode::NotSubmultiset, "element does not occur often enough to remove");
  it->second -= multiplicity;
  size_ -= multiplicity;
  if (it->second == 0) entries_.erase(it);
}

std::strong_ordering operator<=>(const Multiset& a, const Multiset& b) {
  std::size_t i = 0, j = 0;
  std::uint64_t used_a = 0, used_b = 0;
  while (i < a.entries_.size() && j < b.entries_.size()) {
    const auto& [x, kx] = a.entries_[i];
    const auto& [y, ky] = b.entries_[j];
    if (auto c = x <=> y; c != 0) return c;
    std::uint64_t step = std::min(kx - used_a, ky - used_b);
    used_a += step;
    used_b += step;
    if (used_a == kx) ++i, used_a = 0;
    if (used_b == ky) ++j, used_b = 0;
  }
  bool a_done = i == a.entries_.size();
  bool b_done = j == b.entries_.size();
  if (a_done && b_done) return std::strong_ordering::equal;
  return a_done ? std::strong_ordering::less : std::strong_ordering::greater;
}

RingElement sigma(const Multiset& s) {
  require_non_empty(s);
  auto entries = s.entries();
  RingElement total = times(entries[0].first, entries[0].second);
  for (std::size_t i = 1; i < entries.size(); ++i)
    total = add(total, times(entries[i].first, entries[i].second));
  return total;
}

RingElement pi(const Multiset& s) {
  require_non_empty(s);
  // Zero annihilates in every supported structure; short-circuit so that a
  // zero factor is not preceded by an overflowing partial product.
  RingElement z = zero(s.ring());
  if (s.contains(z)) return z;
  auto entries = s.entries();
  try {
    RingElement total = power(entries[0].first, entries[0].second);
    for (std::size_t i = 1; i < entries.size(); ++i)
      total = mul(total, power(entries[i].first, entries[i].second));
    return total;
  } catch (const Error& e) {
    // Infinite unit groups (and reciprocals in Q) let partial products blow
    // up even when the full product is small: (1+r)^60 (-1+r)^60 = 1.
    bool retry = s.ring().kind() == RingKind::Sqrt2 || s.ring().kind() == RingKind::Rational;
    if (e.code() != ErrorCode::Overflow || !retry || s.size() > kBalancedProductLimit) throw;
  }
  return balanced_product({entries.begin(), entries.end()});
}

Multiset msum(const Multiset& a, const Multiset& b) {
  require_same_ring(a, b);
  Multiset out = a;
  for (const auto& [x, k] : b.entries()) out.insert(x, k);
  return out;
}

bool is_submultiset(const Multiset& b, const Multiset& a) {
  if (a.ring() != b.ring()) return false;
  for (const auto& [x, k] : b.entries())
    if (a.count(x) < k) return false;
  return true;
}

Multiset mdiff(const Multiset& a, const Multiset& b) {
  require_same_ring(a, b);
  if (!is_submultiset(b, a))
    throw Error(ErrorCode::NotSubmultiset, "subtrahend is not a sub-multiset");
  Multiset out = a;
  for (const auto& [x, k] : b.entries()) out.erase(x, k);
  return out;
}

Multiset mscale(std::uint64_t k, const Multiset& a) {
  Multiset out(a.ring());
  if (k == 0) return out;
  for (const auto& [x, m] : a.entries()) out.insert(x, checked_mul_u64(m, k));
  return out;
}

SumProductReport classify(const Multiset& s) {
  require_non_empty(s);
  SumProductReport r{sigma(s), pi(s)};
  r.is_bioperational = r.sum == r.product;
  r.is_trivial = s.size() == 1;
  r.is_vanishing = r.is_bioperational && is_zero(r.sum);
  return r;
}

}  // namespace biop
