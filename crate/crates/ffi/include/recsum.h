/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef RECSUM_H
#define RECSUM_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

#define RECSUM_ABI_VERSION 1

#define RECSUM_FAMILY_FIBO 0

#define RECSUM_FAMILY_NEGFIBO 1

#define RECSUM_FAMILY_CHEB 2

#define RECSUM_FAMILY_FIBPOLY 3

typedef enum RecsumStatus {
  RECSUM_STATUS_OK = 0,
  RECSUM_STATUS_NULL_POINTER = 1,
  RECSUM_STATUS_INVALID_ARGUMENT = 2,
  RECSUM_STATUS_UNSUPPORTED = 3,
  RECSUM_STATUS_SINGULAR_MATRIX = 4,
  RECSUM_STATUS_NO_CONVERGENCE = 5,
  RECSUM_STATUS_FAILED = 6,
  RECSUM_STATUS_PANIC = 7,
} RecsumStatus;

/*
 Result of [`recsum_discover`].
 */
typedef struct RecsumDiscovery RecsumDiscovery;

/*
 Exact polynomial with rational coefficients.
 */
typedef struct RecsumPoly RecsumPoly;

/*
 Positive root of `r^{p+1} - r^p - r - 1` and `a = rho - 1/rho`.
 */
typedef struct RecsumRoot {
  uint32_t p;
  double rho;
  double a;
  double residual;
} RecsumRoot;

/*
 Outcome of [`recsum_verify`]. `factor` is owned by the caller.
 */
typedef struct RecsumVerification {
  uint32_t m;
  bool verified;
  char *factor;
} RecsumVerification;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

uint32_t recsum_abi_version(void);

/*
 Message for the last failure on this thread, or null. Do not free.
 */
const char *recsum_last_error(void);

/*
 # Safety
 `s` is null or was returned by this library and not yet freed.
 */
void recsum_string_free(char *s);

/*
 # Safety
 `out` is valid for writes.
 */
enum RecsumStatus recsum_find_rho(uint32_t p, struct RecsumRoot *out);

/*
 Annihilating polynomial of `a = rho - 1/rho`, from the closed form or, when
 `oracle` is true, from the exact linear systems.

 # Safety
 `out` is valid for writes.
 */
enum RecsumStatus recsum_minpoly(uint32_t p, bool oracle, struct RecsumPoly **out);

/*
 Member `n` of a polynomial family: `kind` is one of `'T'`, `'U'`, `'F'`, `'L'`.

 # Safety
 `out` is valid for writes.
 */
enum RecsumStatus recsum_family_poly(char kind, uint32_t n, struct RecsumPoly **out);

/*
 Factor `A(a)` of the `b = -1` identity for odd `n`, as a polynomial in `a`.

 # Safety
 `out` is valid for writes.
 */
enum RecsumStatus recsum_cheb_factor(uint32_t n, struct RecsumPoly **out);

/*
 Degree, or -1 for the zero polynomial or a null handle.

 # Safety
 `poly` is null or a live handle.
 */
int64_t recsum_poly_degree(const struct RecsumPoly *poly);

/*
 Coefficient of `x^i` as `"num"` or `"num/den"`; null on a null handle.

 # Safety
 `poly` is null or a live handle.
 */
char *recsum_poly_coeff(const struct RecsumPoly *poly, uintptr_t i);

/*
 Value at `x` in floating point; NaN on a null handle.

 # Safety
 `poly` is null or a live handle.
 */
double recsum_poly_eval(const struct RecsumPoly *poly, double x);

/*
 Rendering such as `"a^3 - a^2 + 3a - 2"` with the given variable name
 (`"x"` when `var` is null).

 # Safety
 `poly` is null or a live handle; `var` is null or NUL-terminated.
 */
char *recsum_poly_to_string(const struct RecsumPoly *poly, const char *var);

/*
 # Safety
 `poly` is null or a live handle, which becomes invalid.
 */
void recsum_poly_free(struct RecsumPoly *poly);

/*
 `F_n` in decimal, for `n >= -1`.

 # Safety
 `out` is valid for writes.
 */
enum RecsumStatus recsum_fibonacci(int64_t n, char **out);

/*
 `L_n` in decimal.

 # Safety
 `out` is valid for writes.
 */
enum RecsumStatus recsum_lucas(uint64_t n, char **out);

/*
 Builds and certifies one of the constructed identities `S_n = A x_m`.

 * `RECSUM_FAMILY_FIBO`, `RECSUM_FAMILY_NEGFIBO`: `a` and `p` are ignored.
 * `RECSUM_FAMILY_CHEB`: `a` is a rational string, or null for symbolic `a`.
 * `RECSUM_FAMILY_FIBPOLY`: odd `p`; `a` is ignored.

 # Safety
 `a` is null or NUL-terminated; `out` is valid for writes.
 */
enum RecsumStatus recsum_verify(uint32_t family,
                                uint32_t n,
                                const char *a,
                                uint32_t p,
                                struct RecsumVerification *out);

/*
 Exhaustive search for `S_n = A x_m`, `m <= m_max`, over
 `x_{n+2} = a x_{n+1} + b x_n` with rational `a`, `b` given as strings.

 # Safety
 `a` and `b` are NUL-terminated; `out` is valid for writes.
 */
enum RecsumStatus recsum_discover(const char *a,
                                  const char *b,
                                  uint32_t n,
                                  uint32_t m_max,
                                  struct RecsumDiscovery **out);

/*
 Number of hits; 0 for a null handle.

 # Safety
 `d` is null or a live handle.
 */
uintptr_t recsum_discovery_len(const struct RecsumDiscovery *d);

/*
 Hit `i`, in increasing `m`. `*factor` is set to null when any `A` works.

 # Safety
 `d` is a live handle; `m` and `factor` are valid for writes.
 */
enum RecsumStatus recsum_discovery_hit(const struct RecsumDiscovery *d,
                                       uintptr_t i,
                                       uint32_t *m,
                                       char **factor);

/*
 # Safety
 `d` is null or a live handle, which becomes invalid.
 */
void recsum_discovery_free(struct RecsumDiscovery *d);

/*
 Runs a command-line invocation (without the program name) and returns
 its exit code: 0 success, 1 failed verification, 2 usage error. With
 `json` set the report is the JSON document. `out_stdout` and
 `out_stderr` may be null when not wanted.

 # Safety
 `argv` holds `argc` NUL-terminated strings; the out-pointers are null or
 valid for writes.
 */
int32_t recsum_run(uintptr_t argc,
                   const char *const *argv,
                   bool json,
                   char **out_stdout,
                   char **out_stderr);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RECSUM_H */
