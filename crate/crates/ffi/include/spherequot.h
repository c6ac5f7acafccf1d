#ifndef SPHEREQUOT_H
#define SPHEREQUOT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SqFamily {
  SQ_FAMILY_CYCLIC = 0,
  SQ_FAMILY_DIHEDRAL = 1,
  SQ_FAMILY_TETRAHEDRAL = 2,
  SQ_FAMILY_OCTAHEDRAL = 3,
  SQ_FAMILY_ICOSAHEDRAL = 4,
  SQ_FAMILY_INDEX2 = 5,
  SQ_FAMILY_INDEX3 = 6,
} SqFamily;

/*
 Result codes. Nonzero values name the module that failed.
 */
typedef enum SqStatus {
  SQ_STATUS_OK = 0,
  SQ_STATUS_NULL_POINTER = 1,
  SQ_STATUS_INVALID_ARGUMENT = 2,
  SQ_STATUS_QUATERNION = 3,
  SQ_STATUS_CATALOG = 4,
  SQ_STATUS_HIRZEBRUCH_JUNG = 5,
  SQ_STATUS_RESOLUTION = 6,
  SQ_STATUS_INVARIANTS = 7,
  SQ_STATUS_REPORT = 8,
  SQ_STATUS_NOT_APPLICABLE = 9,
  SQ_STATUS_BUFFER_TOO_SMALL = 10,
  SQ_STATUS_PANIC = 11,
} SqStatus;

/*
 Opaque invariant report.
 */
typedef struct SqReport SqReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Builds the report for one spec. `family` is an `SqFamily` value; `a`
 and `b` are `(q, p)` for the cyclic family, `(m, n)` for dihedral and
 index2, and `(m, ignored)` otherwise.

 # Safety
 `out` must be null or point to writable storage for one pointer.
 */
enum SqStatus sq_describe(int32_t family,
                          int64_t a,
                          int64_t b,
                          double tolerance,
                          struct SqReport **out);

/*
 Same as `sq_describe`, with the spec given as text such as `"dihedral:1,2"`.

 # Safety
 `spec` must be null or a NUL-terminated string; `out` as in `sq_describe`.
 */
enum SqStatus sq_describe_str(const char *spec, double tolerance, struct SqReport **out);

/*
 # Safety
 `report` must be null or a handle from `sq_describe` not yet freed.
 */
void sq_report_free(struct SqReport *report);

/*
 # Safety
 `report` must be a live handle and `out` writable.
 */
enum SqStatus sq_report_order(const struct SqReport *report, int64_t *out);

/*
 # Safety
 `report` must be a live handle and `out` writable.
 */
enum SqStatus sq_report_k_gamma(const struct SqReport *report, int64_t *out);

/*
 # Safety
 `report` must be a live handle and `out` writable.
 */
enum SqStatus sq_report_signature(const struct SqReport *report, int64_t *out);

/*
 `SQ_STATUS_NOT_APPLICABLE` for cyclic groups.

 # Safety
 `report` must be a live handle and `out` writable.
 */
enum SqStatus sq_report_b_gamma(const struct SqReport *report, int64_t *out);

/*
 # Safety
 `report` must be a live handle and `out` writable.
 */
enum SqStatus sq_report_kappa(const struct SqReport *report, int64_t *out);

/*
 # Safety
 `report` must be a live handle and `out` writable.
 */
enum SqStatus sq_report_b_prime(const struct SqReport *report, int64_t *out);

/*
 Writes 1 when every check passed, 0 otherwise.

 # Safety
 `report` must be a live handle and `out` writable.
 */
enum SqStatus sq_report_all_pass(const struct SqReport *report, int32_t *out);

/*
 # Safety
 `report` must be a live handle and `out` writable.
 */
enum SqStatus sq_report_check_count(const struct SqReport *report, size_t *out);

/*
 JSON text of the report. Release with `sq_string_free`; null on failure.

 # Safety
 `report` must be null or a live handle.
 */
char *sq_report_to_json(const struct SqReport *report);

/*
 # Safety
 `s` must be null or a string returned by this library, not yet freed.
 */
void sq_string_free(char *s);

/*
 Hirzebruch-Jung string of L(q,p). Writes the length to `len` always and
 the entries to `buf` when `cap` is large enough; otherwise returns
 `SQ_STATUS_BUFFER_TOO_SMALL`.

 # Safety
 `buf` must be null or writable for `cap` values; `len` must be writable.
 */
enum SqStatus sq_hj_string(int64_t q, int64_t p, int64_t *buf, size_t cap, size_t *len);

/*
 Message for the last failure on this thread, or null. Valid until the
 next call into the library on the same thread.
 */
const char *sq_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPHEREQUOT_H */
