#include "biop/biop.h"

#include <cstdlib>
#include <cstring>
#include <new>

#include "biop/literal.hpp"
#include "serialize.hpp"

struct biop_multiset {
  biop::Multiset value;
};

namespace {

using namespace biop;

thread_local std::string last_message;
thread_local std::size_t last_position = 0;

biop_status remember(biop_status status, std::string message, std::size_t position = 0) {
  last_message = std::move(message);
  last_position = position;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
biop_status guarded(F&& body) {
  try {
    body();
    return BIOP_OK;
  } catch (const ParseError& e) {
    return remember(BIOP_PARSE_ERROR, e.what(), e.position());
  } catch (const Error& e) {
    return remember(static_cast<biop_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return remember(BIOP_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return remember(BIOP_UNKNOWN_ERROR, e.what());
  } catch (...) {
    return remember(BIOP_UNKNOWN_ERROR, "unknown failure");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

char* copy_json(const Json& j) { return copy_string(j.dump()); }

biop_multiset* wrap(Multiset s) { return new biop_multiset{std::move(s)}; }

RingId to_ring(biop_ring ring) {
  switch (ring.kind) {
    case BIOP_RING_NAT: return RingId::nat();
    case BIOP_RING_INT: return RingId::integers();
    case BIOP_RING_RATIONAL: return RingId::rational();
    case BIOP_RING_PRIME_FIELD: return RingId::prime_field(ring.modulus);
    case BIOP_RING_LUNAR: return RingId::lunar();
    case BIOP_RING_GAUSSIAN: return RingId::gaussian();
    case BIOP_RING_EISENSTEIN: return RingId::eisenstein();
    case BIOP_RING_SQRT2: return RingId::sqrt2();
  }
  throw Error(ErrorCode::InvalidArgument, "unknown ring kind");
}

SearchBudget budget(std::uint64_t max_nodes) {
  SearchBudget b;
  if (max_nodes) b.max_nodes = max_nodes;
  return b;
}

SearchBudget enumeration_budget(std::uint64_t max_nodes) {
  return SearchBudget{max_nodes ? max_nodes : kEnumerationNodeBudget};
}

struct VerifyTarget {
  const char* name;
  const char* alias;
};

constexpr VerifyTarget kVerifyTargets[] = {
    {"product-dominates-sum", "lemma3.3"},
    {"field-exhaustiveness", "thm5.2"},
    {"lunar-triviality", "thm6.2"},
    {"gaussian-parity", "lemma7.2"},
    {"sqrt2-parity", "lemma9.2"},
};

}  // namespace

extern "C" {

const char* biop_status_name(biop_status status) {
  switch (status) {
    case BIOP_OK: return "Ok";
    case BIOP_NULL_ARGUMENT: return "NullArgument";
    case BIOP_OUT_OF_MEMORY: return "OutOfMemory";
    case BIOP_UNKNOWN_ERROR: return "UnknownError";
    default:
      if (status >= BIOP_PARSE_ERROR && status <= BIOP_INVALID_ARGUMENT)
        return error_name(static_cast<ErrorCode>(status)).data();  // literals, NUL-terminated
      return "UnknownError";
  }
}

const char* biop_last_error_message(void) { return last_message.c_str(); }
size_t biop_last_error_position(void) { return last_position; }
void biop_string_free(char* s) { std::free(s); }

biop_status biop_ring_from_name(const char* name, int64_t modulus, biop_ring* out) {
  if (!out) return remember(BIOP_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    std::optional<std::int64_t> m;
    if (modulus != 0) m = modulus;
    RingId ring = parse_ring(name ? std::string_view(name) : std::string_view(), m);
    *out = biop_ring{static_cast<biop_ring_kind>(ring.kind()), ring.modulus()};
  });
}

biop_status biop_ring_name(biop_ring ring, char** out) {
  if (!out) return remember(BIOP_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_string(to_ring(ring).name()); });
}

biop_status biop_multiset_parse(biop_ring ring, const char* text, biop_multiset** out) {
  if (!text || !out) return remember(BIOP_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = wrap(parse_multiset_literal(to_ring(ring), text)); });
}

void biop_multiset_free(biop_multiset* s) { delete s; }

biop_status biop_multiset_render(const biop_multiset* s, char** out) {
  if (!s || !out) return remember(BIOP_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_string(render(s->value)); });
}

biop_status biop_multiset_size(const biop_multiset* s, uint64_t* out) {
  if (!s || !out) return remember(BIOP_NULL_ARGUMENT, "null argument");
  *out = s->value.size();
  return BIOP_OK;
}

biop_status biop_multiset_equal(const biop_multiset* a, const biop_multiset* b, int* out) {
  if (!a || !b || !out) return remember(BIOP_NULL_ARGUMENT, "null argument");
  *out = a->value == b->value;
  return BIOP_OK;
}

biop_status biop_sigma(const biop_multiset* s, char** out) {
  if (!s || !out) return remember(BIOP_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_string(render(sigma(s->value))); });
}

biop_status biop_pi(const biop_multiset* s, char** out) {
  if (!s || !out) return remember(BIOP_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_string(render(pi(s->value))); });
}

biop_status biop_msum(const biop_multiset* a, const biop_multiset* b, biop_multiset** out) {
  if (!a || !b || !out) return remember(BIOP_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = wrap(msum(a->value, b->value)); });
}

biop_status biop_mdiff(const biop_multiset* a, const biop_multiset* b, biop_multiset** out) {
  if (!a || !b || !out) return remember(BIOP_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = wrap(mdiff(a->value, b->value)); });
}

biop_status biop_mscale(uint64_t k, const biop_multiset* a, biop_multiset** out) {
  if (!a || !out) return remember(BIOP_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = wrap(mscale(k, a->value)); });
}

biop_status biop_is_bioperational(const biop_multiset* s, int* out) {
  if (!s || !out) return remember(BIOP_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = is_bioperational(s->value); });
}

biop_status biop_is_minimal(const biop_multiset* s, uint64_t max_nodes, int* minimal, biop_multiset** witness) {
  if (!s || !minimal) return remember(BIOP_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    MinimalityResult r = is_minimal(s->value, budget(max_nodes));
    biop_multiset* w = r.witness ? wrap(std::move(*r.witness)) : nullptr;
    *minimal = r.minimal;
    if (witness)
      *witness = w;
    else
      delete w;
  });
}

biop_status biop_classify_json(const biop_multiset* s, uint64_t max_nodes, char** out) {
  if (!s || !out) return remember(BIOP_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    SumProductReport report = classify(s->value);
    std::optional<MinimalityResult> minimality;
    if (report.is_bioperational) minimality = is_minimal(s->value, budget(max_nodes));
    *out = copy_json(to_json(report, s->value, minimality));
  });
}

biop_status biop_construct(const biop_multiset* factors, uint64_t max_nodes, biop_multiset** out) {
  if (!factors || !out) return remember(BIOP_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = wrap(bioperate(factors->value, budget(max_nodes)).result); });
}

biop_status biop_construct_json(const biop_multiset* factors, uint64_t max_nodes, char** out) {
  if (!factors || !out) return remember(BIOP_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_json(to_json(bioperate(factors->value, budget(max_nodes)))); });
}

biop_status biop_trim(const biop_multiset* s, uint64_t max_nodes, biop_multiset** out) {
  if (!s || !out) return remember(BIOP_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    if (!is_bioperational(s->value))
      throw Error(ErrorCode::NotBioperational, "only bioperational multisets can be trimmed");
    *out = wrap(trim_to_minimal(s->value, budget(max_nodes)));
  });
}

biop_status biop_complete(const biop_multiset* s, biop_multiset** out) {
  if (!s || !out) return remember(BIOP_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = wrap(field_complete(s->value)); });
}

biop_status biop_complete_json(const biop_multiset* s, char** out) {
  if (!s || !out) return remember(BIOP_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_json(completion_json(s->value, field_complete(s->value))); });
}

biop_status biop_enumerate_length_json(int64_t n, int include_vanishing, unsigned threads,
                                       uint64_t max_nodes, char** out) {
  if (!out) return remember(BIOP_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    NatSearchOptions options;
    options.include_vanishing = include_vanishing != 0;
    options.threads = threads;
    options.budget = enumeration_budget(max_nodes);
    *out = copy_json(to_json(enumerate_nat_by_length(n, options)));
  });
}

biop_status biop_enumerate_sum_product_json(int64_t m, char** out) {
  if (!out) return remember(BIOP_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_json(to_json(enumerate_nat_by_sum_product(m))); });
}

biop_status biop_records_json(int64_t max_n, uint64_t max_nodes, char** out) {
  if (!out) return remember(BIOP_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_json(to_json(records_nat(max_n, enumeration_budget(max_nodes)))); });
}

biop_status biop_uniform_json(int64_t p, int64_t n_max, char** out) {
  if (!out) return remember(BIOP_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_json(uniform_json(p, n_max, uniform_field_solutions(p, n_max))); });
}

biop_status biop_search_json(biop_ring ring, const char* pool, int64_t max_len, int include_trivial,
                             int include_vanishing, uint64_t max_nodes, char** out) {
  if (!pool || !out) return remember(BIOP_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    RingId r = to_ring(ring);
    Multiset items = parse_multiset_literal(r, pool);
    std::vector<RingElement> elements;
    for (const auto& [x, k] : items.entries()) elements.push_back(x);
    auto found = brute_force_biop_search(r, elements, max_len,
                                         SearchFilter{include_trivial != 0, include_vanishing != 0},
                                         enumeration_budget(max_nodes));
    Json j;
    j["ring"] = r.name();
    j["pool"] = render(items);
    j["max_len"] = max_len;
    j["count"] = found.size();
    j["solutions"] = Json::array();
    for (const auto& s : found) j["solutions"].push_back(render(s));
    *out = copy_json(j);
  });
}

biop_verify_params biop_verify_defaults(void) {
  return biop_verify_params{500, 1, 11, 4, 2, 0};
}

const char* biop_verify_target_name(const char* target) {
  if (!target) return nullptr;
  for (const auto& t : kVerifyTargets)
    if (std::strcmp(target, t.name) == 0 || std::strcmp(target, t.alias) == 0) return t.name;
  return nullptr;
}

biop_status biop_verify_json(const char* target, const biop_verify_params* params, char** out) {
  if (!target || !out) return remember(BIOP_NULL_ARGUMENT, "null argument");
  biop_verify_params p = params ? *params : biop_verify_defaults();
  return guarded([&] {
    const char* name = biop_verify_target_name(target);
    if (!name) throw Error(ErrorCode::InvalidArgument, "unknown verification target '" + std::string(target) + "'");
    std::string_view which = name;
    VerifyReport report;
    if (which == "product-dominates-sum")
      report = verify_product_dominates_sum(p.cases, p.seed);
    else if (which == "gaussian-parity")
      report = verify_gaussian_parity(p.cases, p.seed);
    else if (which == "sqrt2-parity")
      report = verify_sqrt2_parity(p.cases, p.seed);
    else if (which == "field-exhaustiveness")
      report = verify_field_exhaustiveness(p.modulus, p.max_len, enumeration_budget(p.max_nodes));
    else
      report = verify_lunar_triviality(p.max_digits, p.max_len, enumeration_budget(p.max_nodes));
    *out = copy_json(to_json(report));
  });
}

biop_status biop_oeis_json(const char* id, size_t count, char** out) {
  if (!id || !out) return remember(BIOP_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    Json j;
    std::string_view which = id;
    j["id"] = which;
    if (which == "A033178")
      j["terms"] = nat_length_counts(count);
    else if (which == "A309230")
      j["terms"] = nat_record_positions(count);
    else
      throw Error(ErrorCode::InvalidArgument, "unsupported sequence '" + std::string(which) + "'");
    *out = copy_json(j);
  });
}

}  // extern "C"
