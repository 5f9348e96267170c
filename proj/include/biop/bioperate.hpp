#pragma once

// Turning a factorization into a bioperational multiset.
//
// Every construction starts from the factors (whose product is the target
// sum-product), shifts the sum with product-one appendages until it matches
// the product, and then trims removable unit groups until the result is
// minimal. Gaussian and sqrt2 inputs may first need one factor rewritten to
// fix a parity obstruction that no appendage can close.

#include <string>
#include <string_view>
#include <vector>

#include "biop/multiset.hpp"

namespace biop {

struct Appendage {
  std::string label;
  Multiset elements;
  RingElement sum_delta;
};

// One factor replaced by a product-preserving group of elements.
struct FactorTransform {
  RingElement removed;
  Multiset inserted;
};

struct AppendageUse {
  std::string label;
  std::uint64_t count = 0;
};

// `removed` taken out `times` times in a row.
struct TrimStep {
  Multiset removed;
  std::uint64_t times = 0;
};

struct ConstructionTrace {
  Multiset input_factors;
  RingElement target;
  std::vector<FactorTransform> transforms;
  std::vector<AppendageUse> appendages;
  // Removed sub-multisets in removal order, run-length encoded.
  std::vector<TrimStep> trimmed;
  Multiset result;
};

// Nat: T1. Int: T1, T0, T-1. Gaussian adds T+2i, T-2i. Eisenstein adds T3w,
// T-2w, Tw, T-w. Sqrt2 adds T+2r, T-2r. UnsupportedRing for the rest.
std::vector<Appendage> appendage_catalog(const RingId& ring);
// UnsupportedRing / InvalidArgument for unknown labels.
const Appendage& find_appendage(const std::vector<Appendage>& catalog, std::string_view label);

// Factors all >= 2, at least two of them. Pads with pi - sigma ones; the
// result is already minimal.
ConstructionTrace bioperate_nat(const Multiset& factors);
// Factors all with |a| >= 2, at least two of them.
ConstructionTrace bioperate_int(const Multiset& factors, SearchBudget budget = {});
// At least two non-unit factors, none of them zero. Units are allowed.
ConstructionTrace bioperate_gaussian(const Multiset& factors, SearchBudget budget = {});
ConstructionTrace bioperate_eisenstein(const Multiset& factors, SearchBudget budget = {});
ConstructionTrace bioperate_sqrt2(const Multiset& factors, SearchBudget budget = {});
// Dispatches on the ring of the factors.
ConstructionTrace bioperate(const Multiset& factors, SearchBudget budget = {});

// Re-applies transforms, appendages and trims to input_factors.
Multiset replay(const ConstructionTrace& trace);

// Appends sigma(S) / (pi(S) - 1). Rational or prime field only; ProductIsOne
// when pi(S) = 1.
Multiset field_complete(const Multiset& s);

// Removes smallest removable witnesses until none is left. When `steps` is
// given, each removal is appended to it. Integral domains only.
Multiset trim_to_minimal(const Multiset& s, SearchBudget budget = {},
                         std::vector<TrimStep>* steps = nullptr);

}  // namespace biop
