#ifndef MONOGEN_H
#define MONOGEN_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MonogenFamily {
  /**
   * x^5 + ax + b
   */
  MONOGEN_FAMILY_QUINTIC_LINEAR = 0,
  /**
   * x^6 + ax + b
   */
  MONOGEN_FAMILY_SEXTIC_LINEAR = 1,
  /**
   * x^5 + cx^4 + d
   */
  MONOGEN_FAMILY_QUINTIC_NM1 = 2,
  /**
   * x^6 + cx^5 + d
   */
  MONOGEN_FAMILY_SEXTIC_NM1 = 3,
} MonogenFamily;

typedef enum MonogenOutcome {
  MONOGEN_OUTCOME_GENERATOR = 0,
  MONOGEN_OUTCOME_NOT_GENERATOR = 1,
  MONOGEN_OUTCOME_UNKNOWN = 2,
} MonogenOutcome;

typedef enum MonogenStatus {
  MONOGEN_STATUS_OK = 0,
  MONOGEN_STATUS_NULL_POINTER = 1,
  MONOGEN_STATUS_INVALID_UTF8 = 2,
  MONOGEN_STATUS_PARSE = 3,
  MONOGEN_STATUS_NOT_MONIC = 4,
  MONOGEN_STATUS_ZERO_DISCRIMINANT = 5,
  MONOGEN_STATUS_HYPOTHESIS = 6,
  MONOGEN_STATUS_INDEX_OUT_OF_RANGE = 7,
  MONOGEN_STATUS_INTERNAL = 8,
} MonogenStatus;

typedef enum MonogenTriState {
  MONOGEN_TRI_STATE_FALSE = 0,
  MONOGEN_TRI_STATE_TRUE = 1,
  MONOGEN_TRI_STATE_UNKNOWN = 2,
} MonogenTriState;

/**
 * Opaque monic integer polynomial.
 */
typedef struct MonogenPolynomial MonogenPolynomial;

/**
 * Opaque certification result.
 */
typedef struct MonogenVerdict MonogenVerdict;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. Owned by the
 * library; valid until the next failing call on the same thread.
 */
const char *monogen_last_error(void);

/**
 * Parse text such as "x^5 + 2x + 2".
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a writable pointer.
 */
enum MonogenStatus monogen_polynomial_parse(const char *text, struct MonogenPolynomial **out);

/**
 * Build a polynomial from `len` coefficients, constant term first.
 *
 * # Safety
 * `coeffs` must point to `len` readable values and `out` must be writable.
 */
enum MonogenStatus monogen_polynomial_from_coeffs(const int64_t *coeffs,
                                                  size_t len,
                                                  struct MonogenPolynomial **out);

/**
 * The polynomial rendered as text; release with `monogen_string_free`.
 *
 * # Safety
 * `poly` must be NULL or a handle from this library.
 */
char *monogen_polynomial_to_string(const struct MonogenPolynomial *poly);

/**
 * # Safety
 * `poly` must be NULL or a handle from this library not yet freed.
 */
void monogen_polynomial_free(struct MonogenPolynomial *poly);

/**
 * Decide whether a root of `poly` generates the ring of integers.
 * `rho_iterations` of 0 selects the default factoring budget.
 *
 * # Safety
 * `poly` must be a live handle and `out` writable.
 */
enum MonogenStatus monogen_certify(const struct MonogenPolynomial *poly,
                                   uint64_t rho_iterations,
                                   struct MonogenVerdict **out);

/**
 * # Safety
 * `verdict` must be a live handle and `out` writable.
 */
enum MonogenStatus monogen_verdict_outcome(const struct MonogenVerdict *verdict,
                                           enum MonogenOutcome *out);

/**
 * # Safety
 * `verdict` must be a live handle and `out` writable.
 */
enum MonogenStatus monogen_verdict_irreducible(const struct MonogenVerdict *verdict, bool *out);

/**
 * Number of primes tested.
 *
 * # Safety
 * `verdict` must be NULL or a live handle.
 */
size_t monogen_verdict_prime_count(const struct MonogenVerdict *verdict);

/**
 * The `index`-th tested prime as decimal text, and whether it divides the index.
 *
 * # Safety
 * `verdict` must be a live handle; `prime` and `divides` must be writable.
 */
enum MonogenStatus monogen_verdict_prime(const struct MonogenVerdict *verdict,
                                         size_t index,
                                         char **prime,
                                         bool *divides);

/**
 * Discriminant as decimal text; release with `monogen_string_free`.
 *
 * # Safety
 * `verdict` must be NULL or a live handle.
 */
char *monogen_verdict_discriminant(const struct MonogenVerdict *verdict);

/**
 * The verdict as a JSON record; release with `monogen_string_free`.
 *
 * # Safety
 * `verdict` must be NULL or a live handle.
 */
char *monogen_verdict_json(const struct MonogenVerdict *verdict);

/**
 * # Safety
 * `verdict` must be NULL or a handle from this library not yet freed.
 */
void monogen_verdict_free(struct MonogenVerdict *verdict);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library not yet freed.
 */
void monogen_string_free(char *s);

/**
 * Evaluate a family's closed-form criterion at `(x, y)`.
 *
 * # Safety
 * `applies` and `monogenic` must be writable.
 */
enum MonogenStatus monogen_theorem_check(enum MonogenFamily family,
                                         int64_t x,
                                         int64_t y,
                                         bool *applies,
                                         enum MonogenTriState *monogenic);

/**
 * Density lower bound for `x^n + bx + b`.
 *
 * # Safety
 * `out` must be writable.
 */
enum MonogenStatus monogen_bound_linear_family(uint64_t n, double *out);

/**
 * Density lower bound for `x^n + cx^(n-1) + cd`.
 *
 * # Safety
 * `out` must be writable.
 */
enum MonogenStatus monogen_bound_nminus1_family(uint64_t n, int64_t c, double *out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* MONOGEN_H */
