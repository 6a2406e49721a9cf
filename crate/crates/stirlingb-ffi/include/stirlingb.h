/* C interface for the stirlingb exact combinatorics library. */

#ifndef STIRLINGB_H
#define STIRLINGB_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every C entry point.
 */
typedef enum StbStatus {
  STB_STATUS_OK = 0,
  /**
   * Arguments outside the mathematical domain of the operation.
   */
  STB_STATUS_DOMAIN = 1,
  /**
   * A coefficient or evaluation overflowed 64 bits.
   */
  STB_STATUS_OVERFLOW = 2,
  /**
   * An enumeration exceeded the configured size guard.
   */
  STB_STATUS_SIZE_LIMIT = 3,
  /**
   * Malformed object text.
   */
  STB_STATUS_PARSE = 4,
  /**
   * A restricted-growth condition failed.
   */
  STB_STATUS_INVALID_WORD = 5,
  /**
   * Structurally invalid object (e.g. a word that is no image).
   */
  STB_STATUS_MALFORMED = 6,
  STB_STATUS_NULL_POINTER = 7,
  STB_STATUS_INVALID_UTF8 = 8,
  STB_STATUS_UNKNOWN_IDENTITY = 9,
  /**
   * An internal invariant was violated; never expected.
   */
  STB_STATUS_INTERNAL = 10,
} StbStatus;

/**
 * Opaque handle to an exact polynomial in `q`.
 */
typedef struct StbPoly StbPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The q-bracket `[n]_q = 1 + q + ... + q^(n-1)`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum StbStatus stb_q_bracket(uint64_t n, struct StbPoly **out);

/**
 * Second-kind q-Stirling number of type B.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum StbStatus stb_stirling2_q(uint64_t n, uint64_t k, struct StbPoly **out);

/**
 * q,r-variant of the second-kind number; zero outside the r-domain.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum StbStatus stb_stirling2_q_r(uint64_t n, uint64_t k, uint64_t r, struct StbPoly **out);

/**
 * Type-A first-kind q-Stirling number.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum StbStatus stb_stirling_a_q(uint64_t n, uint64_t k, struct StbPoly **out);

/**
 * q,r-variant of the type-A number; zero outside the r-domain.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum StbStatus stb_stirling_a_q_r(uint64_t n, uint64_t k, uint64_t r, struct StbPoly **out);

/**
 * First-kind q-Stirling number of type B.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum StbStatus stb_stirling_b1_q(uint64_t n, uint64_t k, struct StbPoly **out);

/**
 * q,r-variant of the first-kind type-B number.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum StbStatus stb_stirling_b1_q_r(uint64_t n, uint64_t k, uint64_t r, struct StbPoly **out);

/**
 * Shifted first-kind q-Stirling number of type B.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum StbStatus stb_sstirling_b1_q(uint64_t n, uint64_t k, struct StbPoly **out);

/**
 * Degree of the polynomial, or -1 for the zero polynomial or null.
 *
 * # Safety
 * `poly` must be a live handle or null.
 */
int64_t stb_poly_degree(const struct StbPoly *poly);

/**
 * Coefficient of `q^d`; zero beyond the degree or for null.
 *
 * # Safety
 * `poly` must be a live handle or null.
 */
int64_t stb_poly_coeff(const struct StbPoly *poly, uint64_t d);

/**
 * Value at `q = 1` (the checked coefficient sum).
 *
 * # Safety
 * `poly` must be a live handle; `out` must be valid for writes.
 */
enum StbStatus stb_poly_eval_at_one(const struct StbPoly *poly, int64_t *out);

/**
 * Canonical text form, e.g. "2+q+q^2". Free with `stb_string_free`.
 *
 * # Safety
 * `poly` must be a live handle; `out` must be valid for writes.
 */
enum StbStatus stb_poly_to_string(const struct StbPoly *poly, char **out);

/**
 * Releases a polynomial handle. Null is a no-op.
 *
 * # Safety
 * `poly` must have come from this library and not been freed before.
 */
void stb_poly_free(struct StbPoly *poly);

/**
 * Releases a string returned by this library. Null is a no-op.
 *
 * # Safety
 * `s` must have come from this library and not been freed before.
 */
void stb_string_free(char *s);

/**
 * All statistics of a signed permutation given in window text form
 * (e.g. "[-3,2,-1,5,-4]"), as a JSON object.
 *
 * # Safety
 * `window` must be a valid NUL-terminated string; `out_json` must be
 * valid for writes.
 */
enum StbStatus stb_perm_stats_json(const char *window, char **out_json);

/**
 * Statistics of a first-kind type-B word given in text form
 * (e.g. "(1,1)(-2,1)"), as a JSON object.
 *
 * # Safety
 * `word` must be a valid NUL-terminated string; `out_json` must be
 * valid for writes.
 */
enum StbStatus stb_word1_stats_json(const char *word, char **out_json);

/**
 * Weight exponent of a second-kind word given in text form
 * (e.g. "1,0,-1,2,-2,2").
 *
 * # Safety
 * `word` must be a valid NUL-terminated string; `out_exponent` must be
 * valid for writes.
 */
enum StbStatus stb_word2_weight(const char *word, uint64_t *out_exponent);

/**
 * Runs one identity (or "all") and reports whether every check passed.
 *
 * # Safety
 * `identity` must be a valid NUL-terminated string; `out_all_pass` must
 * be valid for writes.
 */
enum StbStatus stb_verify(const char *identity,
                          uint64_t max_n,
                          uint64_t max_m,
                          uint64_t jobs,
                          bool *out_all_pass);

/**
 * Like `stb_verify`, but also returns the full report stream as a JSON
 * array. Free the string with `stb_string_free`.
 *
 * # Safety
 * `identity` must be a valid NUL-terminated string; `out_all_pass` and
 * `out_json` must be valid for writes.
 */
enum StbStatus stb_verify_json(const char *identity,
                               uint64_t max_n,
                               uint64_t max_m,
                               uint64_t jobs,
                               bool *out_all_pass,
                               char **out_json);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* STIRLINGB_H */
