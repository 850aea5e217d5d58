#ifndef CLUSTERCAT_H
#define CLUSTERCAT_H

/* Generated by cbindgen from clustercat-ffi; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible call.
 */
typedef enum CcStatus {
  CC_STATUS_OK = 0,
  CC_STATUS_INVALID_ARGUMENT = 1,
  CC_STATUS_PARSE_ERROR = 2,
  CC_STATUS_NOT_FINITE_TYPE = 3,
  CC_STATUS_NOT_SIMPLY_LACED = 4,
  CC_STATUS_VERIFY_FAILED = 5,
  CC_STATUS_BUFFER_TOO_SMALL = 6,
  CC_STATUS_INTERNAL = 7,
} CcStatus;

/**
 * Automorphism selector for Grothendieck-group quotients.
 */
typedef enum CcAuto {
  CC_AUTO_ORBIT = 0,
  CC_AUTO_SHIFT_TWO = 1,
  CC_AUTO_IDENTITY = 2,
} CcAuto;

/**
 * Opaque handle: a parsed quiver with a lazily built catalog.
 */
typedef struct CcQuiver CcQuiver;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static string.
 */
const char *cc_version(void);

/**
 * Copy the last error message for this thread into `buf`; returns the
 * message length (excluding the terminator). A zero `cap` queries the
 * required size.
 *
 * # Safety
 * `buf` must point to `cap` writable bytes, or be null when `cap` is zero.
 */
uintptr_t cc_last_error_message(char *buf, uintptr_t cap);

/**
 * Parse quiver text into a new handle. On success `*out` owns the handle
 * and must be released with `cc_quiver_free`.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string; `out` must be a valid
 * pointer to a handle slot.
 */
enum CcStatus cc_quiver_parse(const char *text, struct CcQuiver **out);

/**
 * Release a handle returned by `cc_quiver_parse`. Null is ignored.
 *
 * # Safety
 * `q` must be a handle from `cc_quiver_parse`, not yet freed.
 */
void cc_quiver_free(struct CcQuiver *q);

/**
 * Number of vertices.
 *
 * # Safety
 * `q` must be a live handle.
 */
uintptr_t cc_quiver_rank(const struct CcQuiver *q);

/**
 * Number of positive roots; requires finite type.
 *
 * # Safety
 * `q` must be a live handle; `out` must be writable.
 */
enum CcStatus cc_positive_root_count(const struct CcQuiver *q, uintptr_t *out);

/**
 * Number of cluster-category indecomposables; requires a simply-laced
 * finite-type quiver.
 *
 * # Safety
 * `q` must be a live handle; `out` must be writable.
 */
enum CcStatus cc_cluster_indecomposable_count(const struct CcQuiver *q, uintptr_t *out);

/**
 * Number of tilting sets; requires a simply-laced finite-type quiver.
 *
 * # Safety
 * `q` must be a live handle; `out` must be writable.
 */
enum CcStatus cc_tilting_set_count(const struct CcQuiver *q, uintptr_t *out);

/**
 * Invariant factors of the orbit-category Grothendieck group, written into
 * `buf`. `*written` receives the count; the required capacity is the rank.
 *
 * # Safety
 * `q` must be a live handle; `buf` must hold `cap` entries; `written` must
 * be writable.
 */
enum CcStatus cc_k0_invariant_factors(const struct CcQuiver *q,
                                      enum CcAuto auto_,
                                      int64_t *buf,
                                      uintptr_t cap,
                                      uintptr_t *written);

/**
 * Run the full invariant suite.
 *
 * # Safety
 * `q` must be a live handle.
 */
enum CcStatus cc_verify(const struct CcQuiver *q);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CLUSTERCAT_H */
