#ifndef HYPERPOLY_H
#define HYPERPOLY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HpStatus {
  HP_STATUS_OK = 0,
  HP_STATUS_NULL_POINTER = 1,
  HP_STATUS_INVALID_UTF8 = 2,
  HP_STATUS_PARSE = 3,
  HP_STATUS_DOMAIN = 4,
  HP_STATUS_UNSUPPORTED = 5,
  HP_STATUS_ZERO_POLYNOMIAL = 6,
  HP_STATUS_INSTANCE_MISMATCH = 7,
  HP_STATUS_INTERNAL = 8,
  HP_STATUS_PANIC = 9,
} HpStatus;

/**
 * A hyperfield.
 */
typedef struct HpField HpField;

/**
 * A polynomial together with the hyperfield it lives over.
 */
typedef struct HpPoly HpPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Owned by the
 * library and valid until the next call on this thread.
 */
const char *hp_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void hp_string_free(char *s);

/**
 * Parses `Q`, `Fp:7`, `S`, `K`, `W`, `P`, `T` or `quot:7:1,2,4`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string; `out` must be writable.
 */
enum HpStatus hp_field_parse(const char *spec, struct HpField **out);

/**
 * # Safety
 * `field` must be null or a handle from [`hp_field_parse`], not yet freed.
 */
void hp_field_free(struct HpField *field);

/**
 * Parses ascending comma-separated coefficients such as `1,-1,-1,1`.
 *
 * # Safety
 * `field` must be a live handle, `coeffs` a NUL-terminated string and
 * `out` writable.
 */
enum HpStatus hp_poly_parse(const struct HpField *field, const char *coeffs, struct HpPoly **out);

/**
 * # Safety
 * `poly` must be null or a handle from [`hp_poly_parse`], not yet freed.
 */
void hp_poly_free(struct HpPoly *poly);

/**
 * Degree, or -1 for the zero polynomial.
 *
 * # Safety
 * `poly` must be a live handle and `out` writable.
 */
enum HpStatus hp_poly_degree(const struct HpPoly *poly, int *out);

/**
 * Normalized coefficient text of `poly`; free with [`hp_string_free`].
 *
 * # Safety
 * `poly` must be a live handle and `out` writable.
 */
enum HpStatus hp_poly_to_string(const struct HpPoly *poly, char **out);

/**
 * Whether zero lies in `p(a)`.
 *
 * # Safety
 * `poly` must be a live handle, `at` a NUL-terminated string, `out` writable.
 */
enum HpStatus hp_is_root(const struct HpPoly *poly, const char *at, bool *out);

/**
 * Multiplicity of `at` as a root of `poly`.
 *
 * # Safety
 * `poly` must be a live handle, `at` a NUL-terminated string, `out` writable.
 */
enum HpStatus hp_multiplicity(const struct HpPoly *poly, const char *at, size_t *out);

/**
 * Sign changes of a polynomial over S, zeros skipped.
 *
 * # Safety
 * `poly` must be a live handle and `out` writable.
 */
enum HpStatus hp_sign_changes(const struct HpPoly *poly, size_t *out);

/**
 * Horizontal length of the Newton polygon segment with slope `-s`, where
 * `s` is a rational or `inf`.
 *
 * # Safety
 * `poly` must be a live tropical handle, `s` a NUL-terminated string,
 * `out` writable.
 */
enum HpStatus hp_nu(const struct HpPoly *poly, const char *s, size_t *out);

/**
 * Runs the command line tool on `argv` (without the program name). The
 * exit code goes to `code`; stdout and stderr are returned as strings to be
 * freed with [`hp_string_free`]. Either output pointer may be null.
 *
 * # Safety
 * `argv` must hold `argc` NUL-terminated strings; `code` must be writable.
 */
enum HpStatus hp_run_cli(size_t argc,
                         const char *const *argv,
                         int *code,
                         char **out_stdout,
                         char **out_stderr);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HYPERPOLY_H */
