#include <algorithm>
#include <limits>
#include <set>

#include "biop/multiset.hpp"

namespace biop {

namespace {

using Row = std::vector<std::int64_t>;

class BudgetCounter {
 public:
  explicit BudgetCounter(SearchBudget budget) : limit_(budget.max_nodes) {}
  void tick() {
    if (++visited_ > limit_)
      throw Error(ErrorCode::SearchBudgetExceeded,
                  "minimality search exceeded " + std::to_string(limit_) + " nodes");
  }

 private:
  std::uint64_t limit_;
  std::uint64_t visited_ = 0;
};

Multiset build_subset(const RingId& ring, const std::vector<Multiset::Entry>& pool,
                      const std::vector<std::int64_t>& counts) {
  Multiset t(ring);
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (counts[i] > 0) t.insert(pool[i].first, static_cast<std::uint64_t>(counts[i]));
  return t;
}

void keep_best(std::optional<Multiset>& best, Multiset candidate) {
  if (!best || candidate.size() < best->size() ||
      (candidate.size() == best->size() && candidate < *best))
    best = std::move(candidate);
}

// Exhaustive walk over every sub-multiset T of the pool. T is removable when
// S - T is non-empty, bioperational and keeps the sum-product.
std::optional<Multiset> box_search(const Multiset& s, const RingElement& target,
                                   const std::vector<Multiset::Entry>& pool, BudgetCounter& budget) {
  std::optional<Multiset> best;
  std::vector<std::int64_t> counts(pool.size(), 0);
  while (true) {
    std::size_t i = 0;
    while (i < pool.size() && counts[i] == static_cast<std::int64_t>(pool[i].second)) counts[i++] = 0;
    if (i == pool.size()) break;
    ++counts[i];
    budget.tick();
    Multiset t = build_subset(s.ring(), pool, counts);
    if (t.size() >= s.size()) continue;
    Multiset rest = mdiff(s, t);
    RingElement sum = sigma(rest);
    if (sum == target && pi(rest) == target) keep_best(best, std::move(t));
  }
  return best;
}

// Componentwise-minimal non-negative solutions of A x = 0 with x_j <= upper_j
// (Contejean-Devie). Vectors grow one coordinate at a time, and only in
// directions that decrease the defect A x.
std::vector<std::vector<std::int64_t>> hilbert_basis(const std::vector<Row>& a,
                                                     const std::vector<std::int64_t>& upper,
                                                     BudgetCounter& budget) {
  const std::size_t cols = upper.size();
  const std::size_t rows = a.size();
  auto column_dot = [&](const std::vector<__int128>& defect, std::size_t j) {
    __int128 d = 0;
    for (std::size_t r = 0; r < rows; ++r) d += defect[r] * a[r][j];
    return d;
  };

  std::vector<std::vector<std::int64_t>> basis;
  std::set<std::vector<std::int64_t>> frontier;
  for (std::size_t j = 0; j < cols; ++j) {
    if (upper[j] < 1) continue;
    std::vector<std::int64_t> e(cols, 0);
    e[j] = 1;
    frontier.insert(std::move(e));
  }

  auto dominated = [&](const std::vector<std::int64_t>& y) {
    for (const auto& b : basis) {
      bool le = true;
      for (std::size_t j = 0; j < cols && le; ++j) le = b[j] <= y[j];
      if (le) return true;
    }
    return false;
  };

  while (!frontier.empty()) {
    std::vector<std::pair<std::vector<std::int64_t>, std::vector<__int128>>> open;
    for (const auto& x : frontier) {
      std::vector<__int128> defect(rows, 0);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t j = 0; j < cols; ++j) defect[r] += static_cast<__int128>(a[r][j]) * x[j];
      if (std::all_of(defect.begin(), defect.end(), [](__int128 v) { return v == 0; }))
        basis.push_back(x);
      else
        open.emplace_back(x, std::move(defect));
    }
    std::set<std::vector<std::int64_t>> next;
    for (const auto& [x, defect] : open) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (x[j] >= upper[j] || column_dot(defect, j) >= 0) continue;
        std::vector<std::int64_t> y = x;
        ++y[j];
        if (dominated(y) || next.count(y)) continue;
        budget.tick();
        next.insert(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return basis;
}

constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max();

// Discrete log of a unit in the cyclic unit groups of Z[i] (generator i) and
// Z[w] (generator 1 + w).
std::int64_t cyclic_unit_log(const RingElement& u, const RingElement& generator, int order) {
  RingElement g = one(ring_of(u));
  for (int k = 0; k < order; ++k) {
    if (g == u) return k;
    g = mul(g, generator);
  }
  throw Error(ErrorCode::InternalInvariantViolation, "element is not a unit");
}

// u = sign * (1 + sqrt2)^exponent
std::pair<int, std::int64_t> sqrt2_unit_log(Sqrt2 u) {
  auto negative = [](const Sqrt2& v) {
    if (v.a >= 0 && v.b >= 0) return false;
    if (v.a <= 0 && v.b <= 0) return true;
    __int128 a2 = static_cast<__int128>(v.a) * v.a;
    __int128 b2 = 2 * static_cast<__int128>(v.b) * v.b;
    return a2 > b2 ? v.a < 0 : v.b < 0;
  };
  int sign = 1;
  RingElement v = u;
  if (negative(u)) {
    sign = -1;
    v = negate(v);
  }
  const RingElement fundamental = make_sqrt2(1, 1);
  const RingElement inverse = make_sqrt2(-1, 1);
  const RingElement unity = make_sqrt2(1, 0);
  std::int64_t exponent = 0;
  while (v != unity) {
    const auto& w = std::get<Sqrt2>(v);
    if (w.a > 0 && w.b > 0) {
      v = mul(v, inverse);
      ++exponent;
    } else {
      v = mul(v, fundamental);
      --exponent;
    }
    if (exponent > 200 || exponent < -200)
      throw Error(ErrorCode::InternalInvariantViolation, "sqrt2 unit log did not converge");
  }
  return {sign, exponent};
}

// Appends one row per coordinate of the sum (sigma(T) = 0).
void add_sum_rows(const RingId& ring, const std::vector<Multiset::Entry>& pool, std::size_t cols,
                  std::vector<Row>& rows) {
  auto push = [&](auto&& coordinate) {
    Row r(cols, 0);
    for (std::size_t i = 0; i < pool.size(); ++i) r[i] = coordinate(pool[i].first);
    rows.push_back(std::move(r));
  };
  switch (ring.kind()) {
    case RingKind::Nat: push([](const RingElement& x) { return std::get<Nat>(x).value; }); break;
    case RingKind::Int: push([](const RingElement& x) { return std::get<Int>(x).value; }); break;
    case RingKind::Gaussian:
      push([](const RingElement& x) { return std::get<Gaussian>(x).re; });
      push([](const RingElement& x) { return std::get<Gaussian>(x).im; });
      break;
    case RingKind::Eisenstein:
      push([](const RingElement& x) { return std::get<Eisenstein>(x).a; });
      push([](const RingElement& x) { return std::get<Eisenstein>(x).b; });
      break;
    case RingKind::Sqrt2:
      push([](const RingElement& x) { return std::get<Sqrt2>(x).a; });
      push([](const RingElement& x) { return std::get<Sqrt2>(x).b; });
      break;
    default:
      throw Error(ErrorCode::UnsupportedRing, "no lattice encoding for " + ring.name());
  }
}

// Encodes pi(T) = 1 over the unit pool. Each congruence "sum of logs = 0 mod g"
// gets a slack column carrying -g.
void add_product_rows(const RingId& ring, const std::vector<Multiset::Entry>& pool,
                      std::vector<Row>& rows, std::vector<std::int64_t>& upper) {
  const std::size_t n = pool.size();
  auto congruence = [&](auto&& log_of, std::int64_t order) {
    for (auto& r : rows) r.push_back(0);
    upper.push_back(kUnbounded);
    Row r(upper.size(), 0);
    for (std::size_t i = 0; i < n; ++i) r[i] = log_of(pool[i].first);
    r.back() = -order;
    rows.push_back(std::move(r));
  };
  switch (ring.kind()) {
    case RingKind::Nat: break;  // the only unit is 1
    case RingKind::Int:
      congruence([](const RingElement& x) { return std::get<Int>(x).value < 0 ? 1 : 0; }, 2);
      break;
    case RingKind::Gaussian: {
      const RingElement i = make_gaussian(0, 1);
      congruence([&](const RingElement& x) { return cyclic_unit_log(x, i, 4); }, 4);
      break;
    }
    case RingKind::Eisenstein: {
      const RingElement zeta = make_eisenstein(1, 1);
      congruence([&](const RingElement& x) { return cyclic_unit_log(x, zeta, 6); }, 6);
      break;
    }
    case RingKind::Sqrt2: {
      Row exponents(upper.size(), 0);
      for (std::size_t i = 0; i < n; ++i)
        exponents[i] = sqrt2_unit_log(std::get<Sqrt2>(pool[i].first)).second;
      rows.push_back(std::move(exponents));
      congruence(
          [](const RingElement& x) { return sqrt2_unit_log(std::get<Sqrt2>(x)).first < 0 ? 1 : 0; },
          2);
      break;
    }
    default:
      throw Error(ErrorCode::UnsupportedRing, "no lattice encoding for " + ring.name());
  }
}

std::optional<Multiset> lattice_search(const Multiset& s, bool vanishing, BudgetCounter& budget) {
  const RingId& ring = s.ring();
  if (vanishing) {
    const RingElement z = zero(ring);
    if (s.count(z) >= 2) return Multiset(ring, {z});
  }
  std::vector<Multiset::Entry> pool;
  for (const auto& [x, k] : s.entries()) {
    bool candidate = vanishing ? !is_zero(x) : is_unit(x);
    if (candidate) pool.emplace_back(x, k);
  }
  if (pool.empty()) return std::nullopt;

  std::vector<std::int64_t> upper;
  for (const auto& entry : pool)
    upper.push_back(static_cast<std::int64_t>(
        std::min<std::uint64_t>(entry.second, static_cast<std::uint64_t>(kUnbounded))));
  std::vector<Row> rows;
  add_sum_rows(ring, pool, upper.size(), rows);
  if (!vanishing) add_product_rows(ring, pool, rows, upper);

  std::optional<Multiset> best;
  for (const auto& solution : hilbert_basis(rows, upper, budget)) {
    std::vector<std::int64_t> counts(solution.begin(), solution.begin() + pool.size());
    Multiset t = build_subset(ring, pool, counts);
    // A vanishing S must keep its zero; T is drawn from non-zero entries so
    // that holds, and T = S - {0} is always available.
    keep_best(best, std::move(t));
  }
  return best;
}

}  // namespace

MinimalityResult is_minimal(const Multiset& s, SearchBudget budget) {
  SumProductReport report = classify(s);
  if (!report.is_bioperational)
    throw Error(ErrorCode::NotBioperational, "minimality is defined for bioperational multisets");
  if (s.size() == 1) return {};

  BudgetCounter counter(budget);
  std::optional<Multiset> witness;
  switch (s.ring().kind()) {
    case RingKind::Lunar:
    case RingKind::Rational:
    case RingKind::PrimeField: {
      std::vector<Multiset::Entry> pool;
      for (const auto& e : s.entries())
        if (s.ring().kind() == RingKind::Lunar || report.is_vanishing || is_unit(e.first))
          pool.push_back(e);
      witness = box_search(s, report.sum, pool, counter);
      break;
    }
    default:
      witness = lattice_search(s, report.is_vanishing, counter);
      break;
  }
  if (!witness) return {};
  return MinimalityResult{false, std::move(witness)};
}

}  // namespace biop
