#pragma once

#include <vector>

#include "core/matrix_spec.hpp"

namespace ntz {

// Corner values at which the matrix is singular. Both follow
// b - gamma_{n+1}/(gamma_n +- gamma_1) with signed gamma; for b > 2 they
// satisfy 0 <= b2 < b1 < 1, with b2 = 0 exactly at n = 3.
struct SingularThresholds {
  double b1;
  double b2;
};

SingularThresholds singular_thresholds(const MatrixSpec& spec);

// False iff b_tilde lies within tol of a singular threshold.
bool is_nonsingular(const MatrixSpec& spec, double tol = 1e-9);

// Scaled Sherman-Morrison pieces of the inverse. delta is the normalized
// capacitance determinant; it vanishes at the singular thresholds, where the
// factors derived from it stop being finite.
struct InverseFactors {
  double beta;   // b_tilde - b
  double m11;    // 1 + beta * gamma_n / gamma_{n+1}
  double m12;    // beta * gamma_1 / gamma_{n+1}
  double delta;  // m11^2 - m12^2
  double C;      // gamma_{n+1} / (gamma_1 ((gamma_{n+1}+beta gamma_n)^2 - (beta gamma_1)^2))
  double K;      // beta / ((gamma_{n+1}+beta gamma_n)^2 - (beta gamma_1)^2)
  double K1;     // trace factor (E^2 + beta^2 gamma_1^2) / (E^2 - beta^2 gamma_1^2)
  double K2;     // trace factor beta E / (E^2 - beta^2 gamma_1^2)
};

InverseFactors inverse_factors(const MatrixSpec& spec);

// Entry (i, j), 1-based, of the inverse of the pure Toeplitz matrix
// tridiag(-1, b, -1) of order n. Evaluated through interleaved rho products,
// so it stays in range at any order.
double toeplitz_inverse_entry(long i, long j, long n, double b);

// Entry (i, j), 1-based, of the inverse for the full spec.
double inverse_entry(const MatrixSpec& spec, long i, long j);

// Full inverse, row-major n*n. Symmetric and centrosymmetric.
std::vector<double> inverse_dense(const MatrixSpec& spec);

double trace_inverse(const MatrixSpec& spec);

// Signed sum of row i (1-based) of the inverse.
double rowsum(const MatrixSpec& spec, long i);

// All rowsums in O(n).
std::vector<double> rowsums(const MatrixSpec& spec);

// Rows attaining the maximal and minimal rowsum; plateaus are grouped by
// value. Established for b > 2 only.
struct RowsumExtrema {
  std::vector<long> argmax;
  std::vector<long> argmin;
  double max = 0.0;
  double min = 0.0;
};

RowsumExtrema rowsum_extrema(const MatrixSpec& spec);

// Exact infinity norm of the inverse via absolute-value row sums in factored
// form; O(n) and overflow-safe at large orders.
double infinity_norm_exact(const MatrixSpec& spec);

}  // namespace ntz
