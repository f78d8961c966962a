/* C interface to the Sheffer-Appell engine.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns shf_status; on
 * failure shf_last_error() describes the problem (per thread, valid until
 * the next call on that thread). Strings returned through char** are
 * NUL-terminated, heap-allocated and released with shf_string_free.
 *
 * Handles are immutable after creation and may be shared across threads.
 */
#ifndef SHEFFER_SHEFFER_H
#define SHEFFER_SHEFFER_H

#include <stddef.h>

#if defined(_WIN32)
#define SHF_API __declspec(dllexport)
#else
#define SHF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum shf_status {
  SHF_OK = 0,
  SHF_ERR_INVALID_ARGUMENT = 1, /* malformed input, missing/unknown parameter */
  SHF_ERR_UNKNOWN_FAMILY = 2,
  SHF_ERR_CONTRACT = 3, /* precondition violated (order too small, non-delta series, ...) */
  SHF_ERR_INTERNAL = 4
} shf_status;

typedef enum shf_kind {
  SHF_KIND_SHEFFER = 0,
  SHF_KIND_APPELL = 1, /* Appell sequence of l, ignoring h */
  SHF_KIND_SHEFFER_APPELL = 2
} shf_kind;

typedef enum shf_format { SHF_FORMAT_JSON = 0, SHF_FORMAT_CSV = 1, SHF_FORMAT_LATEX = 2 } shf_format;

/* Identities satisfied by every Sheffer-Appell sequence. */
typedef enum shf_identity {
  SHF_IDENTITY_DIFFERENTIAL = 0,          /* sum (x a_k + b_k + c_k) A_n^(k)/k! = n A_n */
  SHF_IDENTITY_DERIVATIVE_RECURRENCE = 1, /* A_{n+1} = sum (x a_k + b_k + c_k) A_n^(k)/k! */
  SHF_IDENTITY_SCALED_RECURRENCE = 2,     /* weighted by h'(h^{-1}(y)) */
  SHF_IDENTITY_BINOMIAL_RECURRENCE = 3    /* A_{n+1} = sum C(n,k)(x a_k + b_k + c_k) A_{n-k} */
} shf_identity;

/* Associated-sequence (l = 1) specializations. */
typedef enum shf_corollary {
  SHF_COROLLARY_DIFFERENTIAL = 0,
  SHF_COROLLARY_DERIVATIVE_RECURRENCE = 1,
  SHF_COROLLARY_SCALED_DUPLICATE = 2,
  SHF_COROLLARY_BINOMIAL_RECURRENCE = 3
} shf_corollary;

typedef enum shf_property {
  SHF_PROPERTY_LINEARITY = 0,        /* P and W are linear */
  SHF_PROPERTY_PASCAL_PRODUCT = 1,   /* P[f g] = P[f] P[g] = P[g] P[f] */
  SHF_PROPERTY_WRONSKIAN_PRODUCT = 2,/* W[f g] = P[f] W[g] = P[g] W[f] */
  SHF_PROPERTY_COMPOSITION = 3       /* W[l(h)] = W[1,h,..,h^n] Omega^{-1} W[l] */
} shf_property;

typedef struct shf_pair shf_pair;
typedef struct shf_sequence shf_sequence;

SHF_API const char* shf_last_error(void);
SHF_API void shf_string_free(char* s);

/* JSON array of {name, params: [{name, type}], description, extension}. */
SHF_API shf_status shf_families_json(char** out);

/* Builds a catalog pair. Parameter values are exact rationals ("2", "-1/3"). */
SHF_API shf_status shf_pair_create(const char* family, const char* const* param_names,
                                   const char* const* param_values, size_t param_count, size_t order,
                                   shf_pair** out);
/* Builds a pair from explicit coefficient strings of y^0..y^order (equal lengths). */
SHF_API shf_status shf_pair_from_coefficients(const char* const* l_coeffs, const char* const* h_coeffs,
                                              size_t count, shf_pair** out);
SHF_API void shf_pair_free(shf_pair* pair);
SHF_API size_t shf_pair_order(const shf_pair* pair);

/* Polynomials of degree 0..n; requires pair order >= n. */
SHF_API shf_status shf_sequence_generate(const shf_pair* pair, shf_kind kind, size_t n, shf_sequence** out);
SHF_API void shf_sequence_free(shf_sequence* seq);
SHF_API size_t shf_sequence_length(const shf_sequence* seq);
/* Coefficients of polys[degree] as a JSON array of rational strings. */
SHF_API shf_status shf_sequence_poly_json(const shf_sequence* seq, size_t degree, char** out);
SHF_API shf_status shf_sequence_render(const shf_sequence* seq, shf_format format, char** out);

/* {"identity", "a", "b", "c"}, each vector of length n+1. Requires order >= max(n+1, 2). */
SHF_API shf_status shf_coefficients_json(const shf_pair* pair, shf_identity identity, size_t n, char** out);

/* Residual polynomial (JSON array) at degree n; *is_zero set to 1 iff it vanishes. */
SHF_API shf_status shf_residual(const shf_pair* pair, shf_identity identity, size_t n, char** residual_json,
                                int* is_zero);
/* Requires l = 1, otherwise SHF_ERR_INVALID_ARGUMENT. */
SHF_API shf_status shf_corollary_residual(const shf_pair* pair, shf_corollary which, size_t n,
                                          char** residual_json, int* is_zero);

/* Matrix factorization of the Sheffer-Appell x-derivative table. */
SHF_API shf_status shf_lemma_check(const shf_pair* pair, size_t n, int* holds);

/* Checks the property on the pair's own series (l, h, 1/l, e^{xy}). */
SHF_API shf_status shf_property_check(const shf_pair* pair, shf_property property, size_t n, int* holds);

/* Binomial convolution of dv(1/l) with the Sheffer sequence equals the
 * Sheffer-Appell sequence, degrees 0..n. */
SHF_API shf_status shf_convolution_check(const shf_pair* pair, size_t n, int* holds);

/* Closed-form identity audit (n >= 3) as JSON. */
SHF_API shf_status shf_audit_json(size_t n, char** out);

#ifdef __cplusplus
}
#endif

#endif /* SHEFFER_SHEFFER_H */
