#include "biop/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "biop/bioperate.hpp"

namespace biop {

namespace {

class SharedBudget {
 public:
  explicit SharedBudget(SearchBudget budget) : limit_(budget.max_nodes) {}
  void tick() {
    if (visited_.fetch_add(1, std::memory_order_relaxed) + 1 > limit_)
      throw Error(ErrorCode::SearchBudgetExceeded,
                  "search exceeded " + std::to_string(limit_) + " nodes");
  }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> visited_{0};
};

// Depth-first walk over a1 >= a2 >= ... >= ak >= 2 with deficit
// d = pi - sigma. Padding with d ones gives a solution of length k + d, and
// d never decreases once pi >= 2, so d + k > n closes the branch. The new
// deficit (pi - 1) e - sigma grows with e, so the inner loop can stop at the
// first element that overshoots.
class NatLengthSearch {
 public:
  using Visit = std::function<void(const std::vector<std::int64_t>&)>;

  NatLengthSearch(std::int64_t n, SharedBudget& budget, Visit visit)
      : n_(n), budget_(budget), visit_(std::move(visit)) {}

  void run_from(std::int64_t a1) {
    budget_.tick();
    stack_.assign(1, a1);
    descend(a1, a1, a1);
  }

 private:
  void descend(std::int64_t pi, std::int64_t sigma, std::int64_t max_e) {
    const auto k = static_cast<std::int64_t>(stack_.size()) + 1;
    for (std::int64_t e = 2; e <= max_e; ++e) {
      std::int64_t d = (pi - 1) * e - sigma;
      if (d + k > n_) break;
      budget_.tick();
      stack_.push_back(e);
      if (d + k == n_)
        visit_(stack_);
      else
        descend(pi * e, sigma + e, e);
      stack_.pop_back();
    }
  }

  std::int64_t n_;
  SharedBudget& budget_;
  Visit visit_;
  std::vector<std::int64_t> stack_;
};

Multiset padded(std::int64_t n, const std::vector<std::int64_t>& parts) {
  std::vector<Multiset::Entry> entries;
  entries.reserve(parts.size() + 1);
  entries.emplace_back(make_nat(1), static_cast<std::uint64_t>(n) - parts.size());
  for (auto a : parts) entries.emplace_back(make_nat(a), 1);
  return Multiset::from_entries(RingId::nat(), std::move(entries));
}

void require_length(std::int64_t n) {
  if (n < 2) throw Error(ErrorCode::PreconditionViolation, "length must be at least 2");
}

// Runs `body(a1)` for a1 = 2..n, spreading the values over worker threads.
void for_each_first_element(std::int64_t n, unsigned threads,
                            const std::function<void(std::int64_t)>& body) {
  if (threads <= 1) {
    for (std::int64_t a1 = 2; a1 <= n; ++a1) body(a1);
    return;
  }
  std::atomic<std::int64_t> next{2};
  std::exception_ptr failure;
  std::mutex failure_lock;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      try {
        for (std::int64_t a1 = next++; a1 <= n; a1 = next++) body(a1);
      } catch (...) {
        std::lock_guard lock(failure_lock);
        if (!failure) failure = std::current_exception();
        next = n + 1;
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

EnumerationReport enumerate_nat_by_length(std::int64_t n, const NatSearchOptions& options) {
  require_length(n);
  SharedBudget budget(options.budget);
  std::vector<std::vector<Multiset>> per_first(static_cast<std::size_t>(n + 1));
  for_each_first_element(n, options.threads, [&](std::int64_t a1) {
    auto& out = per_first[static_cast<std::size_t>(a1)];
    NatLengthSearch search(n, budget, [&](const std::vector<std::int64_t>& parts) {
      out.push_back(padded(n, parts));
    });
    search.run_from(a1);
  });

  EnumerationReport report;
  report.kind = QueryKind::ByLength;
  report.value = n;
  for (auto& group : per_first)
    for (auto& s : group) report.solutions.push_back(std::move(s));
  if (options.include_vanishing)
    report.solutions.push_back(Multiset::from_entries(RingId::nat(), {{make_nat(0), static_cast<std::uint64_t>(n)}}));
  std::sort(report.solutions.begin(), report.solutions.end());
  return report;
}

std::uint64_t count_nat_by_length(std::int64_t n, SearchBudget budget) {
  require_length(n);
  SharedBudget shared(budget);
  std::uint64_t count = 0;
  NatLengthSearch search(n, shared, [&](const std::vector<std::int64_t>&) { ++count; });
  for (std::int64_t a1 = 2; a1 <= n; ++a1) search.run_from(a1);
  return count;
}

std::vector<std::vector<std::int64_t>> nat_factorizations(std::int64_t m) {
  if (m < 2) throw Error(ErrorCode::PreconditionViolation, "sum-product must be at least 2");
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> parts;
  std::function<void(std::int64_t, std::int64_t)> split = [&](std::int64_t rest, std::int64_t least) {
    for (std::int64_t d = least; d <= rest / d; ++d) {
      if (rest % d) continue;
      parts.push_back(d);
      split(rest / d, d);
      parts.pop_back();
    }
    if (!parts.empty() && rest >= least) {
      parts.push_back(rest);
      out.push_back(parts);
      parts.pop_back();
    }
  };
  split(m, 2);
  return out;
}

EnumerationReport enumerate_nat_by_sum_product(std::int64_t m) {
  EnumerationReport report;
  report.kind = QueryKind::BySumProduct;
  report.value = m;
  for (const auto& parts : nat_factorizations(m)) {
    Multiset factors(RingId::nat());
    for (auto a : parts) factors.insert(make_nat(a));
    report.solutions.push_back(bioperate_nat(factors).result);
  }
  std::sort(report.solutions.begin(), report.solutions.end());
  report.solutions.erase(std::unique(report.solutions.begin(), report.solutions.end()),
                         report.solutions.end());
  return report;
}

RecordReport records_nat(std::int64_t max_n, SearchBudget budget) {
  require_length(max_n);
  RecordReport report;
  report.max_n = max_n;
  std::uint64_t best = 0;
  for (std::int64_t n = 2; n <= max_n; ++n) {
    std::uint64_t c = count_nat_by_length(n, budget);
    report.counts.push_back(c);
    if (c > best) {
      best = c;
      report.positions.push_back(n);
    }
  }
  return report;
}

std::vector<std::uint64_t> nat_length_counts(std::size_t terms) {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < terms; ++i) out.push_back(count_nat_by_length(static_cast<std::int64_t>(i) + 2));
  return out;
}

std::vector<std::int64_t> nat_record_positions(std::size_t terms, std::int64_t max_n) {
  std::vector<std::int64_t> out;
  std::uint64_t best = 0;
  for (std::int64_t n = 2; out.size() < terms; ++n) {
    if (n > max_n)
      throw Error(ErrorCode::SearchBudgetExceeded,
                  "only " + std::to_string(out.size()) + " record positions below " + std::to_string(max_n));
    std::uint64_t c = count_nat_by_length(n);
    if (c > best) {
      best = c;
      out.push_back(n);
    }
  }
  return out;
}

std::vector<Multiset> brute_force_biop_search(const RingId& ring, const std::vector<RingElement>& pool,
                                              std::int64_t max_len, SearchFilter filter,
                                              SearchBudget budget) {
  if (max_len < 1 || max_len > 8)
    throw Error(ErrorCode::PreconditionViolation, "max_len must be between 1 and 8");
  std::vector<RingElement> items;
  for (const auto& x : pool) {
    if (ring_of(x) != ring) throw Error(ErrorCode::RingMismatch, "pool element outside " + ring.name());
    items.push_back(x);
  }
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());

  SharedBudget shared(budget);
  std::vector<Multiset> out;
  std::vector<std::uint64_t> counts(items.size(), 0);
  std::function<void(std::size_t, std::int64_t, const RingElement&, const RingElement&)> walk =
      [&](std::size_t start, std::int64_t len, const RingElement& sum, const RingElement& product) {
        if (sum == product) {
          bool vanishing = is_zero(sum);
          if ((filter.include_trivial || len > 1) && (filter.include_vanishing || !vanishing)) {
            std::vector<Multiset::Entry> entries;
            for (std::size_t i = 0; i < items.size(); ++i)
              if (counts[i]) entries.emplace_back(items[i], counts[i]);
            out.push_back(Multiset::from_entries(ring, std::move(entries)));
          }
        }
        if (len == max_len) return;
        for (std::size_t i = start; i < items.size(); ++i) {
          shared.tick();
          ++counts[i];
          walk(i, len + 1, add(sum, items[i]), mul(product, items[i]));
          --counts[i];
        }
      };
  for (std::size_t i = 0; i < items.size(); ++i) {
    shared.tick();
    ++counts[i];
    walk(i, 1, items[i], items[i]);
    --counts[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<UniformSolution> uniform_field_solutions(std::int64_t p, std::int64_t n_max) {
  RingId field = RingId::prime_field(p);
  if (n_max < 2) throw Error(ErrorCode::PreconditionViolation, "n_max must be at least 2");
  std::vector<UniformSolution> out;
  for (std::int64_t n = 2; n <= n_max; ++n) {
    RingElement target = make_residue(n, field);
    for (std::int64_t a = 0; a < p; ++a)
      if (power(make_residue(a, field), static_cast<std::uint64_t>(n - 1)) == target) out.push_back({a, n});
  }
  return out;
}

std::vector<RingElement> lunar_pool(int max_digits) {
  if (max_digits < 1 || max_digits > 6)
    throw Error(ErrorCode::PreconditionViolation, "max_digits must be between 1 and 6");
  std::int64_t limit = 1;
  for (int i = 0; i < max_digits; ++i) limit *= 10;
  std::vector<RingElement> out;
  out.reserve(static_cast<std::size_t>(limit));
  for (std::int64_t v = 0; v < limit; ++v) out.push_back(make_lunar(std::to_string(v)));
  return out;
}

std::vector<RingElement> field_pool(const RingId& field) {
  if (field.kind() != RingKind::PrimeField)
    throw Error(ErrorCode::UnsupportedRing, "field_pool needs a prime field");
  std::vector<RingElement> out;
  for (std::int64_t a = 0; a < field.modulus(); ++a) out.push_back(make_residue(a, field));
  return out;
}

}  // namespace biop
