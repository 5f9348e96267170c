#ifndef BIOP_BIOP_H
#define BIOP_BIOP_H

/* C interface to the bioperational multiset library.
 *
 * Every fallible call returns a biop_status. On failure the out-parameters
 * are left untouched and biop_last_error_message() describes the problem
 * (per thread, valid until the next failing call on that thread).
 *
 * Strings returned through char** are owned by the caller and released with
 * biop_string_free; multisets with biop_multiset_free.
 *
 * A max_nodes argument of 0 selects the library's default search budget.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef BIOP_BUILDING_LIBRARY
#    define BIOP_API __declspec(dllexport)
#  else
#    define BIOP_API __declspec(dllimport)
#  endif
#else
#  define BIOP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum biop_status {
  BIOP_OK = 0,
  BIOP_PARSE_ERROR = 1,
  BIOP_EMPTY_MULTISET = 2,
  BIOP_RING_MISMATCH = 3,
  BIOP_NOT_SUBMULTISET = 4,
  BIOP_OVERFLOW = 5,
  BIOP_NOT_BIOPERATIONAL = 6,
  BIOP_SEARCH_BUDGET_EXCEEDED = 7,
  BIOP_PRECONDITION_VIOLATION = 8,
  BIOP_UNSUPPORTED_RING = 9,
  BIOP_ZERO_DIVISION = 10,
  BIOP_PRODUCT_IS_ONE = 11,
  BIOP_INTERNAL_INVARIANT_VIOLATION = 12,
  BIOP_INVALID_ARGUMENT = 13,
  BIOP_NULL_ARGUMENT = 100,
  BIOP_OUT_OF_MEMORY = 101,
  BIOP_UNKNOWN_ERROR = 102
} biop_status;

typedef enum biop_ring_kind {
  BIOP_RING_NAT = 0,
  BIOP_RING_INT = 1,
  BIOP_RING_RATIONAL = 2,
  BIOP_RING_PRIME_FIELD = 3,
  BIOP_RING_LUNAR = 4,
  BIOP_RING_GAUSSIAN = 5,
  BIOP_RING_EISENSTEIN = 6,
  BIOP_RING_SQRT2 = 7
} biop_ring_kind;

typedef struct biop_ring {
  biop_ring_kind kind;
  int64_t modulus; /* prime fields only, 0 otherwise */
} biop_ring;

typedef struct biop_multiset biop_multiset;

typedef struct biop_verify_params {
  uint64_t cases;     /* random checks */
  uint64_t seed;
  int64_t modulus;    /* field exhaustiveness */
  int64_t max_len;
  int32_t max_digits; /* lunar triviality */
  uint64_t max_nodes;
} biop_verify_params;

/* Diagnostic names such as "ParseError" or "OverflowError". */
BIOP_API const char* biop_status_name(biop_status status);
BIOP_API const char* biop_last_error_message(void);
/* Character offset of the last ParseError on this thread. */
BIOP_API size_t biop_last_error_position(void);
BIOP_API void biop_string_free(char* s);

/* name: nat, int, rational, lunar, gaussian, eisenstein, sqrt2, prime or
 * prime(p). A non-zero modulus selects the prime field (name may be NULL). */
BIOP_API biop_status biop_ring_from_name(const char* name, int64_t modulus, biop_ring* out);
BIOP_API biop_status biop_ring_name(biop_ring ring, char** out);

BIOP_API biop_status biop_multiset_parse(biop_ring ring, const char* text, biop_multiset** out);
BIOP_API void biop_multiset_free(biop_multiset* s);
BIOP_API biop_status biop_multiset_render(const biop_multiset* s, char** out);
BIOP_API biop_status biop_multiset_size(const biop_multiset* s, uint64_t* out);
BIOP_API biop_status biop_multiset_equal(const biop_multiset* a, const biop_multiset* b, int* out);

/* Rendered sum and product. */
BIOP_API biop_status biop_sigma(const biop_multiset* s, char** out);
BIOP_API biop_status biop_pi(const biop_multiset* s, char** out);

BIOP_API biop_status biop_msum(const biop_multiset* a, const biop_multiset* b, biop_multiset** out);
BIOP_API biop_status biop_mdiff(const biop_multiset* a, const biop_multiset* b, biop_multiset** out);
BIOP_API biop_status biop_mscale(uint64_t k, const biop_multiset* a, biop_multiset** out);

BIOP_API biop_status biop_is_bioperational(const biop_multiset* s, int* out);
/* witness may be NULL; it is set to NULL when s is minimal. */
BIOP_API biop_status biop_is_minimal(const biop_multiset* s, uint64_t max_nodes, int* minimal,
                                     biop_multiset** witness);
/* Sum, product, classification and (when bioperational) minimality. */
BIOP_API biop_status biop_classify_json(const biop_multiset* s, uint64_t max_nodes, char** out);

BIOP_API biop_status biop_construct(const biop_multiset* factors, uint64_t max_nodes, biop_multiset** out);
BIOP_API biop_status biop_construct_json(const biop_multiset* factors, uint64_t max_nodes, char** out);
BIOP_API biop_status biop_trim(const biop_multiset* s, uint64_t max_nodes, biop_multiset** out);

/* Rational and prime fields: append the single element that makes s
 * bioperational. */
BIOP_API biop_status biop_complete(const biop_multiset* s, biop_multiset** out);
BIOP_API biop_status biop_complete_json(const biop_multiset* s, char** out);

BIOP_API biop_status biop_enumerate_length_json(int64_t n, int include_vanishing, unsigned threads,
                                                uint64_t max_nodes, char** out);
BIOP_API biop_status biop_enumerate_sum_product_json(int64_t m, char** out);
BIOP_API biop_status biop_records_json(int64_t max_n, uint64_t max_nodes, char** out);
BIOP_API biop_status biop_uniform_json(int64_t p, int64_t n_max, char** out);
/* Multisets drawn from pool (a multiset literal, repetitions ignored) with
 * at most max_len elements. */
BIOP_API biop_status biop_search_json(biop_ring ring, const char* pool, int64_t max_len,
                                      int include_trivial, int include_vanishing, uint64_t max_nodes,
                                      char** out);

BIOP_API biop_verify_params biop_verify_defaults(void);
/* target: product-dominates-sum, gaussian-parity, sqrt2-parity,
 * field-exhaustiveness, lunar-triviality, or one of their short aliases
 * (see biop_verify_target_name). */
BIOP_API const char* biop_verify_target_name(const char* target);
BIOP_API biop_status biop_verify_json(const char* target, const biop_verify_params* params, char** out);

/* id: A033178 (counts by length from n = 2) or A309230 (record positions). */
BIOP_API biop_status biop_oeis_json(const char* id, size_t count, char** out);

#ifdef __cplusplus
}
#endif

#endif
