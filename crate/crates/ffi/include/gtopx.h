#ifndef GTOPX_H
#define GTOPX_H

/*
 * Interplanetary trajectory benchmark suite, C interface.
 *
 * Reals are IEEE-754 double, integers int32_t. The caller owns all buffers.
 * All functions are reentrant and thread-safe.
 *
 * Benchmarks (o objectives, n variables, m constraints, n_int integers):
 *    1 Cassini1            1   6  4  0
 *    2 Cassini2            1  22  0  0
 *    3 Messenger (reduced) 1  18  0  0
 *    4 Messenger (full)    1  26  0  0
 *    5 GTOC1               1   8  6  0
 *    6 Rosetta             1  22  0  0
 *    7 Sagas               1  12  2  0
 *    8 Cassini1-MINLP      1  10  4  4
 *    9 Cassini1-MO         2   6  5  0
 *   10 Cassini1-MO-MINLP   2  10  5  4
 *
 * A point is feasible when every g[k] >= 0.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes, stable across versions. */
#define GTOPX_OK                  0
#define GTOPX_UNKNOWN_BENCHMARK   1
#define GTOPX_DIMENSION_ERROR     2 /* length mismatch or null buffer */
#define GTOPX_EVALUATION_FAILURE  3
#define GTOPX_INVALID_INTEGER     4 /* fly-by slot outside 1..9 after rounding */

/*
 * Evaluates `benchmark` at x[0..n), writing f[0..o) and g[0..m).
 * g may be NULL when m == 0. On error f and g are unspecified.
 */
int32_t gtopx(int32_t benchmark, double *f, double *g, const double *x);

/* As gtopx, but returns GTOPX_DIMENSION_ERROR unless o, m, n match. */
int32_t gtopx_checked(int32_t benchmark, double *f, int32_t o, double *g, int32_t m, const double *x, int32_t n);

/* Dimensions of `benchmark`. NULL out-pointers are skipped. */
int32_t gtopx_info(int32_t benchmark, int32_t *o, int32_t *n, int32_t *m, int32_t *n_int);

#ifdef __cplusplus
}
#endif

#endif /* GTOPX_H */
