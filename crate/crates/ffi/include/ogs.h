#ifndef OGS_H
#define OGS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Which canonical form a call refers to.
 */
typedef enum {
  OGS_GROUP_SYMMETRIC = 0,
  OGS_GROUP_ALTERNATING = 1,
} OgsGroup;

/**
 * Which text notation to print.
 */
typedef enum {
  OGS_NOTATION_ONE_LINE = 0,
  OGS_NOTATION_CYCLES = 1,
} OgsNotation;

/**
 * Result code of every fallible call.
 */
typedef enum {
  OGS_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  OGS_STATUS_NULL_POINTER = 1,
  /**
   * An argument was structurally invalid (unknown suite, zero degree).
   */
  OGS_STATUS_INVALID_ARGUMENT = 2,
  /**
   * Text failed to parse in the expected grammar.
   */
  OGS_STATUS_PARSE_ERROR = 3,
  /**
   * An index, exponent, or degree was out of range.
   */
  OGS_STATUS_BOUNDS_ERROR = 4,
  /**
   * The permutation was odd where an even one is required.
   */
  OGS_STATUS_PARITY_ERROR = 5,
} OgsStatus;

/**
 * Opaque permutation handle.
 */
typedef struct OgsPerm OgsPerm;

/**
 * The permutation statistics bundle filled by [`ogs_perm_stats`].
 */
typedef struct {
  uint64_t major_index;
  uint64_t inversions;
  uint64_t order;
  bool is_even;
} OgsStats;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * A human-readable description of a status code. The returned pointer is
 * static and must not be freed.
 */
const char *ogs_status_describe(OgsStatus status);

/**
 * Frees a string returned by this library. Null is a no-op.
 *
 * # Safety
 * `text` must have been returned by a function of this library through a
 * `char**` out parameter, and must not be used afterwards.
 */
void ogs_string_free(char *text);

/**
 * Frees a permutation handle. Null is a no-op.
 *
 * # Safety
 * `perm` must have been returned by a function of this library and must not
 * be used afterwards.
 */
void ogs_perm_free(OgsPerm *perm);

/**
 * Creates the identity permutation on `{1..degree}`.
 *
 * # Safety
 * `out` must point to writable storage for one handle.
 */
OgsStatus ogs_perm_identity(size_t degree, OgsPerm **out);

/**
 * Parses a permutation in one-line (`[2;4;1;3]`) or cycle (`(1,2)(3,4)`)
 * notation at the given degree.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string; `out` must be writable.
 */
OgsStatus ogs_perm_parse(const char *text, size_t degree, OgsPerm **out);

/**
 * Degree of a permutation; 0 when the handle is null.
 *
 * # Safety
 * `perm` must be a live handle or null.
 */
size_t ogs_perm_degree(const OgsPerm *perm);

/**
 * Image of the 1-based `point` under the permutation.
 *
 * # Safety
 * `perm` must be a live handle or null; `out` must be writable.
 */
OgsStatus ogs_perm_image(const OgsPerm *perm, size_t point, size_t *out);

/**
 * Left-to-right product: the result applies `a` first, then `b`.
 *
 * # Safety
 * `a` and `b` must be live handles or null; `out` must be writable.
 */
OgsStatus ogs_perm_compose(const OgsPerm *a, const OgsPerm *b, OgsPerm **out);

/**
 * Group inverse.
 *
 * # Safety
 * `perm` must be a live handle or null; `out` must be writable.
 */
OgsStatus ogs_perm_inverse(const OgsPerm *perm, OgsPerm **out);

/**
 * Prints a permutation in the requested notation into a new string.
 *
 * # Safety
 * `perm` must be a live handle or null; `out` must be writable.
 */
OgsStatus ogs_perm_print(const OgsPerm *perm, OgsNotation notation, char **out);

/**
 * Fills the statistics bundle: major index, inversion count, order, parity.
 *
 * # Safety
 * `perm` must be a live handle or null; `out` must be writable.
 */
OgsStatus ogs_perm_stats(const OgsPerm *perm, OgsStats *out);

/**
 * Encodes a permutation into the canonical-form text of the chosen group
 * (`t2^a * t3^b * ...` or `t3^a * u4^b * v4^c * ...`; the identity is `e`).
 *
 * # Safety
 * `perm` must be a live handle or null; `out` must be writable.
 */
OgsStatus ogs_encode(OgsGroup group, const OgsPerm *perm, char **out);

/**
 * Decodes canonical-form text at the given degree back to a permutation.
 *
 * # Safety
 * `form` must be a valid NUL-terminated string; `out` must be writable.
 */
OgsStatus ogs_decode(OgsGroup group, size_t degree, const char *form, OgsPerm **out);

/**
 * Normalizes a word of `t` powers (e.g. `t4^2 * t3^-1`) into symmetric
 * canonical-form text via the exchange-law rewriter.
 *
 * # Safety
 * `word` must be a valid NUL-terminated string; `out` must be writable.
 */
OgsStatus ogs_normalize(size_t degree, const char *word, char **out);

/**
 * Runs a verification suite (`"all"`, `"uniqueness"`, `"exchange"`,
 * `"alt4"`, ...) up to the degree ceiling `nmax` and returns the TSV
 * report. `all_passed` receives whether every check succeeded; failing
 * checks are data in the report, not an error status.
 *
 * # Safety
 * `suite` must be a valid NUL-terminated string; `out_tsv` and
 * `all_passed` must be writable.
 */
OgsStatus ogs_verify(const char *suite,
                     size_t nmax,
                     uint64_t seed,
                     char **out_tsv,
                     bool *all_passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* OGS_H */
