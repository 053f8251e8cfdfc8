#ifndef NCMOD_H
#define NCMOD_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
typedef enum NcmodStatus {
  NCMOD_STATUS_OK = 0,
  NCMOD_STATUS_NULL_POINTER = 1,
  NCMOD_STATUS_INVALID_UTF8 = 2,
  NCMOD_STATUS_UNKNOWN_ALGEBRA = 3,
  NCMOD_STATUS_INVALID_ALGEBRA = 4,
  NCMOD_STATUS_MALFORMED = 5,
  NCMOD_STATUS_DIMENSION_MISMATCH = 6,
  NCMOD_STATUS_SYNTAX = 7,
  NCMOD_STATUS_NON_ASSOCIATIVE = 8,
  NCMOD_STATUS_NON_UNITAL = 9,
  NCMOD_STATUS_UNKNOWN_SUITE = 10,
  NCMOD_STATUS_INVALID_ARGUMENT = 11,
  NCMOD_STATUS_VERIFICATION_FAILED = 12,
  NCMOD_STATUS_PANIC = 13,
} NcmodStatus;

/**
 * Opaque algebra handle.
 */
typedef struct NcmodAlgebra NcmodAlgebra;

/**
 * Result of [`ncmod_algebra_classify`].
 */
typedef struct NcmodClassification {
  bool commutative;
  bool associative;
  bool has_unit;
  size_t nucleus_dim;
  size_t center_dim;
} NcmodClassification;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The pointer is
 * valid until the next call into this library on the same thread.
 */
const char *ncmod_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void ncmod_string_free(char *s);

/**
 * Loads a built-in algebra (`quaternion`, `octonion`, ...).
 *
 * # Safety
 * `name` must be a nul-terminated string and `out` a valid pointer.
 */
enum NcmodStatus ncmod_algebra_builtin(const char *name, struct NcmodAlgebra **out);

/**
 * Builds an algebra from a structure-constants JSON document.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` a valid pointer.
 */
enum NcmodStatus ncmod_algebra_from_json(const char *json, struct NcmodAlgebra **out);

/**
 * Releases an algebra handle. Null is ignored.
 *
 * # Safety
 * `alg` must come from this library and not have been freed.
 */
void ncmod_algebra_free(struct NcmodAlgebra *alg);

/**
 * Dimension over the rationals; 0 for a null handle.
 *
 * # Safety
 * `alg` must be null or a live handle.
 */
size_t ncmod_algebra_dim(const struct NcmodAlgebra *alg);

/**
 * # Safety
 * `alg` must be a live handle and `out` a valid pointer.
 */
enum NcmodStatus ncmod_algebra_classify(const struct NcmodAlgebra *alg,
                                        struct NcmodClassification *out);

/**
 * Product of two elements given as coordinate strings `"c0,c1,..."`; the
 * product is written to `out` in the same form.
 *
 * # Safety
 * `alg` must be a live handle, `x` and `y` nul-terminated strings and `out`
 * a valid pointer.
 */
enum NcmodStatus ncmod_mul(const struct NcmodAlgebra *alg,
                           const char *x,
                           const char *y,
                           char **out);

/**
 * Partial derivative of `expr` in `wrt`, rendered as `scale·(prefix ⊗ suffix) + ...`.
 * `vars` is a comma-separated variable list.
 *
 * # Safety
 * All string arguments must be nul-terminated and `out` a valid pointer.
 */
enum NcmodStatus ncmod_diff(const char *vars, const char *expr, const char *wrt, char **out);

/**
 * Runs a property suite (or `"all"`) and writes the JSON report to `out`.
 * Returns [`NcmodStatus::VerificationFailed`] when any law fails; the report
 * is written in that case too.
 *
 * # Safety
 * `alg` must be a live handle, `suite` nul-terminated and `out` a valid pointer.
 */
enum NcmodStatus ncmod_verify(const struct NcmodAlgebra *alg,
                              const char *suite,
                              size_t trials,
                              uint64_t seed,
                              char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NCMOD_H */
