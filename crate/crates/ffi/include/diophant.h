#ifndef DIOPHANT_H
#define DIOPHANT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdint.h>

/**
 * Result code of every fallible call.
 */
typedef enum {
  DIO_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  DIO_STATUS_NULL_ARGUMENT = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  DIO_STATUS_INVALID_UTF8 = 2,
  DIO_STATUS_PARSE = 3,
  DIO_STATUS_DOMAIN = 4,
  /**
   * An irrational value was required.
   */
  DIO_STATUS_RATIONAL_INPUT = 5,
  DIO_STATUS_UNSUPPORTED = 6,
  DIO_STATUS_DIVIDE_BY_ZERO = 7,
  /**
   * No successor, predecessor or search hit.
   */
  DIO_STATUS_NOT_FOUND = 8,
  /**
   * A scan bound, guard or precision budget was exhausted.
   */
  DIO_STATUS_RESOURCE_LIMIT = 9,
  DIO_STATUS_INTERNAL = 10,
  DIO_STATUS_PANIC = 11,
} DioStatus;

/**
 * A rational approximation `p/q` together with the bound it satisfies.
 */
typedef struct DioApprox DioApprox;

/**
 * An exact real number: rational or quadratic irrational.
 */
typedef struct DioReal DioReal;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failing call on this thread, or null if none.
 *
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *dio_last_error_message(void);

/**
 * Library version as a static string.
 */
const char *dio_version(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string obtained from this library, freed once.
 */
void dio_string_free(char *s);

/**
 * Parses `text` (`7/5`, `sqrt(2)`, `(1+sqrt(5))/2`, ...) into a new handle.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out_real` writable.
 */
DioStatus dio_real_parse(const char *text_, DioReal **out_real);

/**
 * Canonical text of `real`, e.g. `(0+1*sqrt(2))/1`. Free with [`dio_string_free`].
 *
 * # Safety
 * `real` must be a live handle and `out_text` writable.
 */
DioStatus dio_real_to_string(const DioReal *real, char **out_text);

/**
 * Nonzero iff `real` is rational.
 *
 * # Safety
 * `real` must be null or a live handle.
 */
int dio_real_is_rational(const DioReal *real);

/**
 * `-1`, `0` or `1` as `a` is below, equal to or above `b`.
 *
 * # Safety
 * Both handles must be live and `out_order` writable.
 */
DioStatus dio_real_compare(const DioReal *a, const DioReal *b, int *out_order);

/**
 * Releases a real handle. Null is ignored.
 *
 * # Safety
 * `real` must be null or a handle from this library, freed once.
 */
void dio_real_free(DioReal *real);

/**
 * `p/q` with `q <= big_q` and `|alpha - p/q| <= 1/(q big_q)`.
 *
 * # Safety
 * `alpha` must be a live handle and `out_approx` writable.
 */
DioStatus dio_dirichlet(const DioReal *alpha, uint64_t big_q, DioApprox **out_approx);

/**
 * `p/q` with `q > big_q` and `|alpha - p/q| < 1/q^2`.
 *
 * # Safety
 * `alpha` must be a live handle and `out_approx` writable.
 */
DioStatus dio_large_denominator(const DioReal *alpha, uint64_t big_q, DioApprox **out_approx);

/**
 * `p/q` with `q > big_q` and `|alpha - p/q| < 1/(sqrt(5) q^2)`.
 *
 * # Safety
 * `alpha` must be a live handle and `out_approx` writable.
 */
DioStatus dio_hurwitz(const DioReal *alpha, uint64_t big_q, DioApprox **out_approx);

/**
 * Asymmetric approximation with parameter `tau` (a rational string).
 *
 * # Safety
 * `alpha` must be a live handle, `tau` a NUL-terminated string and
 * `out_approx` writable.
 */
DioStatus dio_segre(const DioReal *alpha, const char *tau, uint64_t big_q, DioApprox **out_approx);

/**
 * One-sided approximation: `above` nonzero asks for `p/q > alpha`.
 *
 * # Safety
 * `alpha` must be a live handle and `out_approx` writable.
 */
DioStatus dio_one_sided(const DioReal *alpha, uint64_t big_q, int above, DioApprox **out_approx);

/**
 * Numerator `p` as a decimal string. Free with [`dio_string_free`].
 *
 * # Safety
 * `approx` must be a live handle and `out_text` writable.
 */
DioStatus dio_approx_numerator(const DioApprox *approx, char **out_text);

/**
 * Denominator `q` as a decimal string. Free with [`dio_string_free`].
 *
 * # Safety
 * `approx` must be a live handle and `out_text` writable.
 */
DioStatus dio_approx_denominator(const DioApprox *approx, char **out_text);

/**
 * The bound kind, e.g. `DIRICHLET(5)`. Free with [`dio_string_free`].
 *
 * # Safety
 * `approx` must be a live handle and `out_text` writable.
 */
DioStatus dio_approx_kind(const DioApprox *approx, char **out_text);

/**
 * Nonzero iff the bound was re-checked exactly after construction.
 *
 * # Safety
 * `approx` must be null or a live handle.
 */
int dio_approx_verified(const DioApprox *approx);

/**
 * Releases an approximation handle. Null is ignored.
 *
 * # Safety
 * `approx` must be null or a handle from this library, freed once.
 */
void dio_approx_free(DioApprox *approx);

/**
 * `floor(n alpha)` as a decimal string. Free with [`dio_string_free`].
 *
 * # Safety
 * `alpha` must be a live handle and `out_text` writable.
 */
DioStatus dio_beatty_term(const DioReal *alpha, uint64_t n, char **out_text);

/**
 * Whether `k = floor(n alpha)` for some `n >= 0`. On a hit `out_n` receives
 * `n` as a string (free with [`dio_string_free`]), otherwise null.
 *
 * # Safety
 * `alpha` must be a live handle; both out-pointers must be writable.
 */
DioStatus dio_beatty_member(const DioReal *alpha, uint64_t k, int *out_is_member, char **out_n);

/**
 * Whether the Beatty sequences of `alpha` and `beta` partition `1..=bound`.
 *
 * # Safety
 * Both handles must be live and `out_pass` writable.
 */
DioStatus dio_partition_check(const DioReal *alpha,
                              const DioReal *beta,
                              uint64_t bound,
                              int *out_pass);

/**
 * Runs the command line tool in-process. `argv` excludes the program name.
 * The exit code follows the binary: 0 success, 1 failed check, 2 usage or
 * parse error, 3 resource limit. Both output strings are always set and must
 * be freed with [`dio_string_free`].
 *
 * # Safety
 * `argv` must point to `argc` NUL-terminated strings; out-pointers writable.
 */
DioStatus dio_cli_run(int argc,
                      const char *const *argv,
                      int *out_exit_code,
                      char **out_stdout,
                      char **out_stderr);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DIOPHANT_H */
