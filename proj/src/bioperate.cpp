#include "biop/bioperate.hpp"

#include <algorithm>

#include "biop/checked.hpp"

namespace biop {

namespace {

Appendage appendage(const RingId& ring, std::string label, std::initializer_list<RingElement> elements,
                    RingElement delta) {
  return Appendage{std::move(label), Multiset(ring, elements), std::move(delta)};
}

void require_ring(const Multiset& factors, RingKind kind, const char* what) {
  if (factors.ring().kind() != kind)
    throw Error(ErrorCode::RingMismatch,
                std::string(what) + " got factors over " + factors.ring().name());
}

void precondition(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::PreconditionViolation, message);
}

// Non-zero factors, at least two of them non-units (counted with multiplicity).
void require_non_unit_factorization(const Multiset& factors) {
  std::uint64_t non_units = 0;
  for (const auto& [x, k] : factors.entries()) {
    precondition(!is_zero(x), "factors must be non-zero");
    if (!is_unit(x)) non_units += k;
  }
  precondition(non_units >= 2, "need at least two non-unit factors");
}

std::uint64_t magnitude(std::int64_t v) {
  return v < 0 ? static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(v)
               : static_cast<std::uint64_t>(v);
}

class Builder {
 public:
  explicit Builder(const Multiset& factors)
      : catalog_(appendage_catalog(factors.ring())), current_(factors) {
    trace_.input_factors = factors;
    trace_.target = pi(factors);
    trace_.result = factors;
  }

  const Multiset& current() const { return current_; }
  const RingElement& target() const { return trace_.target; }
  RingElement deficit() const { return subtract(trace_.target, sigma(current_)); }

  void transform(const RingElement& removed, Multiset inserted) {
    current_.erase(removed);
    current_ = msum(current_, inserted);
    trace_.transforms.push_back(FactorTransform{removed, std::move(inserted)});
  }

  // Shifts the sum by `steps` copies of the appendage labelled `up` (steps > 0)
  // or `down` (steps < 0).
  void shift(std::int64_t steps, std::string_view up, std::string_view down) {
    if (steps == 0) return;
    const Appendage& a = find_appendage(catalog_, steps > 0 ? up : down);
    std::uint64_t count = magnitude(steps);
    current_ = msum(current_, mscale(count, a.elements));
    trace_.appendages.push_back(AppendageUse{a.label, count});
  }

  ConstructionTrace finish(SearchBudget budget) {
    if (current_.ring().kind() == RingKind::Nat)
      trace_.result = current_;
    else
      trace_.result = trim_to_minimal(current_, budget, &trace_.trimmed);
    SumProductReport r = classify(trace_.result);
    if (!r.is_bioperational || r.sum != trace_.target)
      throw Error(ErrorCode::InternalInvariantViolation,
                  "construction did not reach the target sum-product");
    return std::move(trace_);
  }

 private:
  std::vector<Appendage> catalog_;
  Multiset current_;
  ConstructionTrace trace_{Multiset(current_.ring()), RingElement{}, {}, {}, {}, Multiset(current_.ring())};
};

}  // namespace

std::vector<Appendage> appendage_catalog(const RingId& ring) {
  if (ring.kind() == RingKind::Nat) return {appendage(ring, "T1", {make_nat(1)}, make_nat(1))};

  switch (ring.kind()) {
    case RingKind::Int:
    case RingKind::Gaussian:
    case RingKind::Eisenstein:
    case RingKind::Sqrt2:
      break;
    default:
      throw Error(ErrorCode::UnsupportedRing, "no appendage catalog for " + ring.name());
  }
  const RingElement p1 = from_integer(ring, 1);
  const RingElement m1 = from_integer(ring, -1);
  std::vector<Appendage> out{
      appendage(ring, "T1", {p1}, p1),
      appendage(ring, "T0", {p1, p1, m1, m1}, from_integer(ring, 0)),
      appendage(ring, "T-1", {p1, m1, m1}, m1),
  };
  switch (ring.kind()) {
    case RingKind::Gaussian: {
      const RingElement i = make_gaussian(0, 1);
      const RingElement mi = make_gaussian(0, -1);
      out.push_back(appendage(ring, "T+2i", {i, i, m1, p1}, make_gaussian(0, 2)));
      out.push_back(appendage(ring, "T-2i", {mi, mi, m1, p1}, make_gaussian(0, -2)));
      break;
    }
    case RingKind::Eisenstein: {
      const RingElement w = make_eisenstein(0, 1);
      const RingElement mw = make_eisenstein(0, -1);
      const RingElement w2 = make_eisenstein(-1, -1);  // w^2 = -1 - w
      Appendage t3 = appendage(ring, "T3w", {w, w, w}, make_eisenstein(0, 3));
      Appendage tm2 = appendage(ring, "T-2w", {mw, w2, m1, p1, p1}, make_eisenstein(0, -2));
      Appendage tw{"Tw", msum(t3.elements, tm2.elements), make_eisenstein(0, 1)};
      Appendage tmw{"T-w", msum(t3.elements, mscale(2, tm2.elements)), make_eisenstein(0, -1)};
      out.push_back(std::move(t3));
      out.push_back(std::move(tm2));
      out.push_back(std::move(tw));
      out.push_back(std::move(tmw));
      break;
    }
    case RingKind::Sqrt2:
      out.push_back(appendage(ring, "T+2r", {make_sqrt2(1, 1), make_sqrt2(-1, 1)}, make_sqrt2(0, 2)));
      out.push_back(appendage(ring, "T-2r", {make_sqrt2(-1, -1), make_sqrt2(1, -1)}, make_sqrt2(0, -2)));
      break;
    default:
      break;
  }
  return out;
}

const Appendage& find_appendage(const std::vector<Appendage>& catalog, std::string_view label) {
  auto it = std::find_if(catalog.begin(), catalog.end(),
                         [&](const Appendage& a) { return a.label == label; });
  if (it == catalog.end())
    throw Error(ErrorCode::InvalidArgument, "unknown appendage '" + std::string(label) + "'");
  return *it;
}

ConstructionTrace bioperate_nat(const Multiset& factors) {
  require_ring(factors, RingKind::Nat, "bioperate_nat");
  precondition(factors.size() >= 2, "need at least two factors");
  for (const auto& [x, k] : factors.entries())
    precondition(std::get<Nat>(x).value >= 2, "factors must be at least 2");
  Builder b(factors);
  // pi >= sigma for factors >= 2, so the deficit is a plain count of ones.
  std::int64_t d = checked::sub(std::get<Nat>(b.target()).value, std::get<Nat>(sigma(factors)).value);
  if (d < 0) throw Error(ErrorCode::InternalInvariantViolation, "product below sum for factors >= 2");
  b.shift(d, "T1", "T1");
  return b.finish({});
}

ConstructionTrace bioperate_int(const Multiset& factors, SearchBudget budget) {
  require_ring(factors, RingKind::Int, "bioperate_int");
  precondition(factors.size() >= 2, "need at least two factors");
  for (const auto& [x, k] : factors.entries())
    precondition(magnitude(std::get<Int>(x).value) >= 2, "factors must satisfy |a| >= 2");
  Builder b(factors);
  b.shift(std::get<Int>(b.deficit()).value, "T1", "T-1");
  return b.finish(budget);
}

ConstructionTrace bioperate_gaussian(const Multiset& factors, SearchBudget budget) {
  require_ring(factors, RingKind::Gaussian, "bioperate_gaussian");
  require_non_unit_factorization(factors);
  Builder b(factors);
  if (std::get<Gaussian>(b.deficit()).im & 1) {
    // Odd imaginary gap: rewrite a factor divisible by 1 + i as {i*a, i, -1}.
    const RingElement i = make_gaussian(0, 1);
    const RingElement m1 = make_gaussian(-1, 0);
    auto it = std::find_if(factors.entries().begin(), factors.entries().end(), [](const auto& e) {
      return divisible_by_one_plus_i(std::get<Gaussian>(e.first));
    });
    if (it == factors.entries().end())
      throw Error(ErrorCode::InternalInvariantViolation,
                  "odd imaginary gap but no factor divisible by 1+i");
    b.transform(it->first, Multiset(factors.ring(), {mul(i, it->first), i, m1}));
  }
  const auto delta = std::get<Gaussian>(b.deficit());
  if (delta.im & 1)
    throw Error(ErrorCode::InternalInvariantViolation, "imaginary gap still odd after transform");
  b.shift(delta.im / 2, "T+2i", "T-2i");
  b.shift(delta.re, "T1", "T-1");
  return b.finish(budget);
}

ConstructionTrace bioperate_eisenstein(const Multiset& factors, SearchBudget budget) {
  require_ring(factors, RingKind::Eisenstein, "bioperate_eisenstein");
  require_non_unit_factorization(factors);
  Builder b(factors);
  const auto delta = std::get<Eisenstein>(b.deficit());
  b.shift(delta.b, "Tw", "T-w");
  b.shift(delta.a, "T1", "T-1");
  return b.finish(budget);
}

ConstructionTrace bioperate_sqrt2(const Multiset& factors, SearchBudget budget) {
  require_ring(factors, RingKind::Sqrt2, "bioperate_sqrt2");
  require_non_unit_factorization(factors);
  Builder b(factors);
  if (std::get<Sqrt2>(b.deficit()).b & 1) {
    // Odd sqrt2 gap: rewrite a multiple of sqrt2 as {(1+sqrt2)a, -1+sqrt2}.
    auto it = std::find_if(factors.entries().begin(), factors.entries().end(), [](const auto& e) {
      return divisible_by_sqrt2(std::get<Sqrt2>(e.first));
    });
    if (it == factors.entries().end())
      throw Error(ErrorCode::InternalInvariantViolation,
                  "odd sqrt2 gap but no factor divisible by sqrt2");
    b.transform(it->first,
                Multiset(factors.ring(), {mul(make_sqrt2(1, 1), it->first), make_sqrt2(-1, 1)}));
  }
  const auto delta = std::get<Sqrt2>(b.deficit());
  if (delta.b & 1)
    throw Error(ErrorCode::InternalInvariantViolation, "sqrt2 gap still odd after transform");
  b.shift(delta.b / 2, "T+2r", "T-2r");
  b.shift(delta.a, "T1", "T-1");
  return b.finish(budget);
}

ConstructionTrace bioperate(const Multiset& factors, SearchBudget budget) {
  switch (factors.ring().kind()) {
    case RingKind::Nat: return bioperate_nat(factors);
    case RingKind::Int: return bioperate_int(factors, budget);
    case RingKind::Gaussian: return bioperate_gaussian(factors, budget);
    case RingKind::Eisenstein: return bioperate_eisenstein(factors, budget);
    case RingKind::Sqrt2: return bioperate_sqrt2(factors, budget);
    default:
      throw Error(ErrorCode::UnsupportedRing,
                  "no bioperation for " + factors.ring().name() + " (use field completion for fields)");
  }
}

Multiset replay(const ConstructionTrace& trace) {
  Multiset current = trace.input_factors;
  for (const auto& t : trace.transforms) {
    current.erase(t.removed);
    current = msum(current, t.inserted);
  }
  if (!trace.appendages.empty()) {
    auto catalog = appendage_catalog(current.ring());
    for (const auto& use : trace.appendages)
      current = msum(current, mscale(use.count, find_appendage(catalog, use.label).elements));
  }
  for (const auto& step : trace.trimmed) current = mdiff(current, mscale(step.times, step.removed));
  return current;
}

Multiset field_complete(const Multiset& s) {
  if (!s.ring().is_field())
    throw Error(ErrorCode::UnsupportedRing, "field completion needs a rational or prime field");
  RingElement product = pi(s);
  RingElement unity = one(s.ring());
  if (product == unity) throw Error(ErrorCode::ProductIsOne, "product is 1; no completing element exists");
  RingElement completion = mul(sigma(s), field_inverse(subtract(product, unity)));
  Multiset out = s;
  out.insert(completion);
  return out;
}

Multiset trim_to_minimal(const Multiset& s, SearchBudget budget, std::vector<TrimStep>* steps) {
  if (!s.ring().is_integral_domain())
    throw Error(ErrorCode::PreconditionViolation, "trimming needs an integral domain");
  Multiset current = s;
  while (true) {
    MinimalityResult r = is_minimal(current, budget);
    if (r.minimal) break;
    const Multiset& t = *r.witness;
    // The witness stays the smallest one for as long as it still fits, so
    // remove it as many times as possible in one step.
    std::uint64_t times = UINT64_MAX;
    for (const auto& [x, k] : t.entries()) {
      std::uint64_t available = current.count(x);
      // A vanishing multiset has to keep one zero.
      if (is_zero(x)) available -= 1;
      times = std::min(times, available / k);
    }
    if (times == 0)
      throw Error(ErrorCode::InternalInvariantViolation, "witness does not fit its multiset");
    current = mdiff(current, mscale(times, t));
    if (steps) steps->push_back(TrimStep{t, times});
  }
  return current;
}

}  // namespace biop
