#ifndef MUSYM_H
#define MUSYM_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MusymStatus {
  MUSYM_STATUS_OK = 0,
  MUSYM_STATUS_NULL_POINTER = 1,
  MUSYM_STATUS_INVALID_UTF8 = 2,
  MUSYM_STATUS_PARSE = 3,
  MUSYM_STATUS_INVALID_PARTITION = 4,
  MUSYM_STATUS_INVALID_ARGUMENT = 5,
  MUSYM_STATUS_UNSUPPORTED = 6,
  MUSYM_STATUS_NOT_SYMMETRIC = 7,
  MUSYM_STATUS_INTERNAL = 8,
} MusymStatus;

typedef enum MusymAlgorithm {
  MUSYM_ALGORITHM_GROEBNER = 0,
  MUSYM_ALGORITHM_CANONIZE_REDUCE = 1,
  MUSYM_ALGORITHM_LINEAR_SYSTEM = 2,
} MusymAlgorithm;

typedef enum MusymBasis {
  MUSYM_BASIS_ELEMENTARY = 0,
  MUSYM_BASIS_POWER_SUM = 1,
  MUSYM_BASIS_COMPLETE_HOMOGENEOUS = 2,
  MUSYM_BASIS_MONOMIAL = 3,
} MusymBasis;

/**
 * Opaque gist result handle; may hold a "not μ-symmetric" verdict.
 */
typedef struct MusymGist MusymGist;

/**
 * Opaque polynomial handle.
 */
typedef struct MusymPoly MusymPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses polynomial text such as `3*r1^2 + 2*r1*r2`.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum MusymStatus musym_poly_parse(const char *text, struct MusymPoly **out);

/**
 * # Safety
 * `p` must come from [`musym_poly_parse`] and not be freed twice.
 */
void musym_poly_free(struct MusymPoly *p);

/**
 * Canonical text of a polynomial.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum MusymStatus musym_poly_to_string(const struct MusymPoly *p, char **out);

/**
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void musym_string_free(char *s);

/**
 * Decides μ-symmetry of `poly` and computes a gist.
 *
 * `mu` points to `mu_len` positive parts in non-increasing order; `algo` and
 * `basis` take the values of [`MusymAlgorithm`] and [`MusymBasis`]. A
 * polynomial that is not μ-symmetric still yields `MUSYM_STATUS_OK`; ask
 * [`musym_gist_is_symmetric`].
 *
 * # Safety
 * `poly` must be a live handle, `mu` must point to `mu_len` readable values
 * and `out` must be a valid pointer.
 */
enum MusymStatus musym_gist(const struct MusymPoly *poly,
                            const uint32_t *mu,
                            size_t mu_len,
                            uint32_t algo,
                            uint32_t basis_kind,
                            struct MusymGist **out);

/**
 * 1 if the result carries a gist, 0 if the input was not μ-symmetric or the
 * handle is null.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
int32_t musym_gist_is_symmetric(const struct MusymGist *g);

/**
 * Text of the gist polynomial.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum MusymStatus musym_gist_to_string(const struct MusymGist *g, char **out);

/**
 * Evaluates the gist at integer values of z₁..z_n; the exact result is
 * written as `p/q` (or `p` when integral).
 *
 * # Safety
 * `g` must be a live handle, `values` must point to `len` readable values
 * and `out` must be a valid pointer.
 */
enum MusymStatus musym_gist_eval(const struct MusymGist *g,
                                 const int64_t *values,
                                 size_t len,
                                 char **out);

/**
 * # Safety
 * `g` must come from [`musym_gist`] and not be freed twice.
 */
void musym_gist_free(struct MusymGist *g);

/**
 * Message for the last failure on this thread, or null. The pointer stays
 * valid until the next library call on the same thread.
 */
const char *musym_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MUSYM_H */
