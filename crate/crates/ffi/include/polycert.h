#ifndef POLYCERT_H
#define POLYCERT_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum PcStatus {
  PC_STATUS_OK = 0,
  PC_STATUS_NULL_POINTER = 1,
  PC_STATUS_INVALID_UTF8 = 2,
  PC_STATUS_PARSE_ERROR = 3,
  /*
   Input outside a function's domain: wrong parity, nonpositive
   coefficient, bad `n` or precision.
   */
  PC_STATUS_INVALID_INPUT = 4,
  PC_STATUS_INTERNAL = 5,
} PcStatus;

typedef enum PcCondition {
  PC_CONDITION_EVEN = 0,
  PC_CONDITION_ODD = 1,
  PC_CONDITION_HUTCHINSON = 2,
} PcCondition;

typedef enum PcVerdict {
  PC_VERDICT_CERTIFIED_POSITIVE = 0,
  PC_VERDICT_CERTIFIED_ONE_REAL_ZERO = 1,
  PC_VERDICT_CERTIFIED_ALL_REAL_ZEROS = 2,
  PC_VERDICT_CONDITION_FAILS = 3,
  PC_VERDICT_BOUNDARY_CASE = 4,
} PcVerdict;

/*
 A polynomial with exact rational coefficients.
 */
typedef struct PcPolynomial PcPolynomial;

/*
 The result of a ratio check.
 */
typedef struct PcReport PcReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Parses `"1, 3/2, 1"` (constant term first).

 # Safety
 `text` must be a NUL-terminated string; `out` must be writable.
 */
enum PcStatus pc_polynomial_parse(const char *text, struct PcPolynomial **out);

/*
 # Safety
 `p` must come from [`pc_polynomial_parse`] and not be used afterwards.
 Null is ignored.
 */
void pc_polynomial_free(struct PcPolynomial *p);

/*
 # Safety
 `p` must be a live handle; `out` must be writable.
 */
enum PcStatus pc_polynomial_degree(const struct PcPolynomial *p, size_t *out);

/*
 Canonical text form; release with [`pc_string_free`].

 # Safety
 `p` must be a live handle; `out` must be writable.
 */
enum PcStatus pc_polynomial_to_string(const struct PcPolynomial *p, char **out);

/*
 Runs one ratio condition.

 # Safety
 `p` must be a live handle; `out` must be writable.
 */
enum PcStatus pc_check(const struct PcPolynomial *p,
                       enum PcCondition condition,
                       struct PcReport **out);

/*
 # Safety
 `r` must be a live handle; `out` must be writable.
 */
enum PcStatus pc_report_verdict(const struct PcReport *r, enum PcVerdict *out);

/*
 The report as JSON; rationals are `"p/q"` strings.

 # Safety
 `r` must be a live handle; `out` must be writable.
 */
enum PcStatus pc_report_to_json(const struct PcReport *r, char **out);

/*
 # Safety
 `r` must come from [`pc_check`] and not be used afterwards. Null is
 ignored.
 */
void pc_report_free(struct PcReport *r);

/*
 Exact real-root counts.

 # Safety
 `p` must be a live handle; both out-pointers must be writable.
 */
enum PcStatus pc_count_real_roots(const struct PcPolynomial *p,
                                  size_t *distinct,
                                  size_t *with_multiplicity);

/*
 Whether an even-degree polynomial with positive leading coefficient is
 positive on the whole real line.

 # Safety
 `p` must be a live handle; `out` must be writable.
 */
enum PcStatus pc_verify_positive(const struct PcPolynomial *p, bool *out);

/*
 Coefficients of the boundary polynomial for `n` (degree `2n`, or
 `2n + 1` when `odd`), comma-separated. Exact fractions when every
 coefficient is rational, otherwise decimals with `precision` digits.

 # Safety
 `out` must be writable.
 */
enum PcStatus pc_extremal_coefficients(size_t n, bool odd, uint32_t precision, char **out);

/*
 Exact description of the even-degree threshold for degree `2n`.

 # Safety
 `out` must be writable.
 */
enum PcStatus pc_threshold_describe(size_t n, char **out);

/*
 # Safety
 `s` must come from this library and not be used afterwards. Null is
 ignored.
 */
void pc_string_free(char *s);

/*
 Message for the calling thread's most recent failure; empty after a
 success. Never null.
 */
const char *pc_last_error_message(void);

/*
 Library version, static storage.
 */
const char *pc_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* POLYCERT_H */
