/* neartoeplitz: closed-form inverse machinery for symmetric near-Toeplitz
 * tridiagonal matrices. The matrix family is tridiag(-1, b, -1) of order
 * n >= 3 with both corner diagonal entries replaced by btilde; the interior
 * diagonal must satisfy |b| > 2.
 *
 * Every function returns an nt_status; results travel through out
 * parameters. On failure nt_last_error() describes the most recent error in
 * the calling thread. Indices are 1-based, dense buffers row-major.
 */

#ifndef NEARTOEPLITZ_H
#define NEARTOEPLITZ_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nt_status {
  NT_OK = 0,
  NT_EINVAL = 1,     /* invalid argument */
  NT_EREGIME = 2,    /* |b| <= 2 or another unsupported regime */
  NT_EINDEX = 3,     /* index out of range */
  NT_ESINGULAR = 4,  /* matrix singular at this corner value */
  NT_EOVERFLOW = 5,  /* requested value exceeds double range */
  NT_ESCOPE = 6,     /* case not covered by the closed forms */
  NT_EUNBOUNDED = 7, /* unbounded range for a Lipschitz constant */
  NT_EDIVERGED = 8,  /* fixed-point iteration diverged */
  NT_ECAP = 9,       /* order exceeds a hard implementation cap */
  NT_EINTERNAL = 10
} nt_status;

const char* nt_version(void);
const char* nt_strerror(nt_status code);
/* Thread-local detail message for the last failing call in this thread. */
const char* nt_last_error(void);

/* ---- matrix description ------------------------------------------------ */

typedef struct nt_spec nt_spec;

nt_status nt_spec_create(long n, double b, double btilde, nt_spec** out);
void nt_spec_destroy(nt_spec* spec);
long nt_spec_order(const nt_spec* spec);
double nt_spec_b(const nt_spec* spec);
double nt_spec_btilde(const nt_spec* spec);

/* ---- spectral helpers --------------------------------------------------- */

/* Roots of r^2 - b r + 1 = 0: r1 = (b + sqrt(b^2-4))/2, r2 = (b - sqrt(b^2-4))/2. */
nt_status nt_characteristic_roots(double b, double* r1, double* r2);

/* gamma_k = r1^k - r2^k. Integer and half-integer k >= 0 are accepted. */
nt_status nt_gamma_value(double k, double b, double* out);

typedef struct nt_gamma nt_gamma;

nt_status nt_gamma_create(double b, long max_index, nt_gamma** out);
void nt_gamma_destroy(nt_gamma* g);
nt_status nt_gamma_at(const nt_gamma* g, long k, double* out);

/* ---- singularity -------------------------------------------------------- */

/* The two corner values at which the matrix is singular; bt1 > bt2 for
 * b > 2. */
nt_status nt_singular_thresholds(const nt_spec* spec, double* bt1, double* bt2);
nt_status nt_is_nonsingular(const nt_spec* spec, double tol, int* out);

/* ---- inverse engine ------------------------------------------------------ */

/* Entry (i, j) of the inverse of the unmodified Toeplitz matrix
 * tridiag(-1, b, -1), order n. */
nt_status nt_toeplitz_inverse_entry(long i, long j, long n, double b, double* out);

nt_status nt_inverse_entry(const nt_spec* spec, long i, long j, double* out);
nt_status nt_trace_inverse(const nt_spec* spec, double* out);
/* out must hold n doubles. */
nt_status nt_rowsums(const nt_spec* spec, double* out);
nt_status nt_infinity_norm(const nt_spec* spec, double* out);

/* Row indices attaining the extreme inverse rowsums (b > 2 only).
 * argmax/argmin must hold n longs; counts receive how many were written. */
nt_status nt_rowsum_extrema(const nt_spec* spec, long* argmax, long* max_count,
                            long* argmin, long* min_count, double* max_value,
                            double* min_value);

/* ---- dense buffers ------------------------------------------------------- */

typedef struct nt_dense nt_dense;

void nt_dense_destroy(nt_dense* m);
long nt_dense_order(const nt_dense* m);
nt_status nt_dense_entry(const nt_dense* m, long i, long j, double* out);
/* Borrowed row-major storage, order*order doubles; valid until destroy. */
const double* nt_dense_data(const nt_dense* m);
nt_status nt_dense_summary(const nt_dense* m, double* trace,
                           double* rowsums /* order doubles, may be NULL */,
                           double* inf_norm);

/* Closed-form inverse of the full matrix. */
nt_status nt_inverse_dense(const nt_spec* spec, nt_dense** out);
/* The matrix itself, densely stored. */
nt_status nt_oracle_matrix(const nt_spec* spec, nt_dense** out);
/* Reference inverse by partial-pivot elimination (order capped). */
nt_status nt_oracle_inverse(const nt_spec* spec, nt_dense** out);

/* ---- norm and rowsum bounds ---------------------------------------------- */

typedef enum nt_bound_case {
  NT_BOUND_POS_GT = 0,  /* b > 2,  btilde > b - 1 */
  NT_BOUND_POS_EQ = 1,  /* b > 2,  btilde = b - 1 */
  NT_BOUND_POS_MID = 2, /* b > 2,  1 <= btilde < b - 1 */
  NT_BOUND_POS_SUB = 3, /* b > 2,  btilde < 1 */
  NT_BOUND_NEG_LT = 4,  /* b < -2, btilde < b + 1 */
  NT_BOUND_NEG_EQ = 5,  /* b < -2, btilde = b + 1 */
  NT_BOUND_NEG_MID = 6, /* b < -2, b + 1 < btilde <= -1 */
  NT_BOUND_NEG_SUP = 7  /* b < -2, btilde > -1 */
} nt_bound_case;

const char* nt_bound_case_name(nt_bound_case c);
const char* nt_bound_case_interval(nt_bound_case c);

/* Closed-form upper bound on the infinity norm of the inverse. */
nt_status nt_norm_bound(const nt_spec* spec, double* bound, nt_bound_case* case_id);

/* Two-sided enclosure of every inverse rowsum (b > 2 only). */
nt_status nt_rowsum_bounds(const nt_spec* spec, double* lower, double* upper,
                           nt_bound_case* case_id);

/* Predicted entrywise signs (+1 / -1) of the inverse; out holds n*n ints. */
nt_status nt_sign_pattern(const nt_spec* spec, int* out);

/* ---- boundary value problems ---------------------------------------------- */

typedef enum nt_rhs_kind {
  NT_RHS_FISHER = 0,        /* f(u) = k u (1 - u) */
  NT_RHS_GELFAND_BRATU = 1  /* f(u) = k exp(u) */
} nt_rhs_kind;

/* Solve the near-Toeplitz system for one right-hand side, O(n). */
nt_status nt_tridiagonal_solve(const nt_spec* spec, const double* rhs, double* x);

/* Elementwise k u (1 - u). */
nt_status nt_fisher_rhs(const double* u, long n, double k, double* out);

nt_status nt_lipschitz_constant(nt_rhs_kind kind, double k, double lo, double hi,
                                double* out);

typedef struct nt_fixed_point_report {
  long iterations;
  int converged;
  int range_warning;
  double numerical_rate;
  double expected_rate;
  double lipschitz;
  long ratio_count; /* ratios produced, regardless of buffer capacity */
} nt_fixed_point_report;

/* Predicted contraction factor h^2 L_c ||inverse|| for one sweep. */
nt_status nt_expected_rate(const nt_spec* spec, double length, double k,
                           nt_rhs_kind kind, double c_hat, double* out);

/* Picard iteration for the discretized problem. u0 may be NULL (0.5 start),
 * solution may be NULL, ratios may be NULL or hold ratios_cap doubles. */
nt_status nt_fixed_point_solve(const nt_spec* spec, double length, double k,
                               nt_rhs_kind kind, double c_hat, const double* u0,
                               double tol, long max_iter, double* solution,
                               double* ratios, long ratios_cap,
                               nt_fixed_point_report* report);

#ifdef __cplusplus
}
#endif

#endif /* NEARTOEPLITZ_H */
