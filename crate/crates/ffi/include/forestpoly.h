#ifndef FORESTPOLY_H
#define FORESTPOLY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Named polynomial families for `fp_family_poly`.
 */
typedef enum FpFamily {
  /**
   * `F_n(x)` from the Chebyshev recurrence.
   */
  FP_FAMILY_FOREST = 0,
  /**
   * `(x+1)^n - 1`.
   */
  FP_FAMILY_ORIENTED_FOREST = 1,
  /**
   * `c_n(x) prod Psi_k(x+2)^2`, expanded.
   */
  FP_FAMILY_FACTORED_FOREST = 2,
  /**
   * `prod Phi_k(x+1)`, expanded.
   */
  FP_FAMILY_FACTORED_ORIENTED_FOREST = 3,
  FP_FAMILY_CHEBYSHEV = 4,
  FP_FAMILY_CYCLOTOMIC = 5,
  FP_FAMILY_PSI = 6,
} FpFamily;

/**
 * Result codes shared by every fallible entry point.
 */
typedef enum FpStatus {
  FP_STATUS_OK = 0,
  FP_STATUS_NULL_POINTER = 1,
  FP_STATUS_INVALID_UTF8 = 2,
  FP_STATUS_PARSE_ERROR = 3,
  FP_STATUS_DIVISION_ERROR = 4,
  FP_STATUS_DOMAIN_ERROR = 5,
  FP_STATUS_INDEX_ERROR = 6,
  FP_STATUS_CAP_EXCEEDED = 7,
  FP_STATUS_VERIFY_FAILED = 8,
  FP_STATUS_PANIC = 9,
} FpStatus;

/**
 * Opaque graph handle.
 */
typedef struct FpGraph FpGraph;

/**
 * Opaque polynomial handle.
 */
typedef struct FpPoly FpPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread. The pointer stays valid
 * until the next failing call on the same thread; do not free it.
 */
const char *fp_last_error(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library and not yet freed.
 */
void fp_string_free(char *s);

/**
 * Parses polynomial text such as `"x^2 + 4*x"`.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a writable pointer.
 */
enum FpStatus fp_poly_parse(const char *text, struct FpPoly **out);

/**
 * # Safety
 * `p` must be NULL or a handle from this library not yet freed.
 */
void fp_poly_free(struct FpPoly *p);

/**
 * Canonical text of `p`; free with `fp_string_free`. NULL on bad input.
 *
 * # Safety
 * `p` must be a live polynomial handle.
 */
char *fp_poly_to_string(const struct FpPoly *p);

/**
 * Degree of `p`, or -1 for the zero polynomial and for NULL.
 *
 * # Safety
 * `p` must be NULL or a live polynomial handle.
 */
int64_t fp_poly_degree(const struct FpPoly *p);

/**
 * Decimal text of the coefficient of `x^k`; free with `fp_string_free`.
 *
 * # Safety
 * `p` must be a live polynomial handle.
 */
char *fp_poly_coeff(const struct FpPoly *p, size_t k);

/**
 * Two-variable homogeneous form of degree `n` in `a` and `b`.
 *
 * # Safety
 * `p` must be a live polynomial handle.
 */
char *fp_poly_homogenize(const struct FpPoly *p, size_t n);

/**
 * 1 if `p == q`, 0 otherwise (also 0 if either is NULL).
 *
 * # Safety
 * `p`, `q` must be NULL or live polynomial handles.
 */
bool fp_poly_equal(const struct FpPoly *p, const struct FpPoly *q);

/**
 * # Safety
 * `p`, `q` must be live handles; `out` must be writable.
 */
enum FpStatus fp_poly_add(const struct FpPoly *p, const struct FpPoly *q, struct FpPoly **out);

/**
 * # Safety
 * `p`, `q` must be live handles; `out` must be writable.
 */
enum FpStatus fp_poly_mul(const struct FpPoly *p, const struct FpPoly *q, struct FpPoly **out);

/**
 * `p(q(x))`.
 *
 * # Safety
 * `p`, `q` must be live handles; `out` must be writable.
 */
enum FpStatus fp_poly_compose(const struct FpPoly *p, const struct FpPoly *q, struct FpPoly **out);

/**
 * Exact quotient `p / d` over the integers; `FP_STATUS_DIVISION_ERROR`
 * when `d` does not divide `p`, `FP_STATUS_DOMAIN_ERROR` when `d` is zero.
 *
 * # Safety
 * `p`, `d` must be live handles; `out` must be writable.
 */
enum FpStatus fp_poly_exact_div(const struct FpPoly *p,
                                const struct FpPoly *d,
                                struct FpPoly **out);

/**
 * Writes whether `d` divides `p`.
 *
 * # Safety
 * `d`, `p` must be live handles; `out` must be writable.
 */
enum FpStatus fp_poly_divides(const struct FpPoly *d, const struct FpPoly *p, bool *out);

/**
 * Builds the `n`-th member of `family` (`n >= 1`).
 *
 * # Safety
 * `out` must be writable.
 */
enum FpStatus fp_family_poly(enum FpFamily family, uint32_t n, struct FpPoly **out);

/**
 * Loads a graph from JSON text in the graph-file schema.
 *
 * # Safety
 * `json` must be a valid NUL-terminated string; `out` must be writable.
 */
enum FpStatus fp_graph_from_json(const char *json, struct FpGraph **out);

/**
 * The cycle with `n >= 3` pendant edges, pendant weight `a`, cycle weight `b`.
 *
 * # Safety
 * `a`, `b` must be live polynomial handles; `out` must be writable.
 */
enum FpStatus fp_graph_sunlet(size_t n,
                              bool oriented,
                              const struct FpPoly *a,
                              const struct FpPoly *b,
                              struct FpGraph **out);

/**
 * # Safety
 * `g` must be NULL or a handle from this library not yet freed.
 */
void fp_graph_free(struct FpGraph *g);

/**
 * Forest sum through the determinant pipeline, oriented or not according
 * to the graph.
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
enum FpStatus fp_graph_forest_sum(const struct FpGraph *g, struct FpPoly **out);

/**
 * Brute-force forest sum; `out_count` (optional) receives the number of
 * forests.
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable; `out_count`
 * must be NULL or writable.
 */
enum FpStatus fp_graph_enumerate(const struct FpGraph *g,
                                 size_t cap,
                                 struct FpPoly **out,
                                 uint64_t *out_count);

/**
 * Runs the verification suite up to `n_max` and writes the reports as a
 * JSON array (free with `fp_string_free`). Returns
 * `FP_STATUS_VERIFY_FAILED` if any report failed; the JSON is still set.
 *
 * # Safety
 * `out_json` must be writable.
 */
enum FpStatus fp_verify_suite(uint32_t n_max, char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FORESTPOLY_H */
