#pragma once

#include <vector>

#include "core/matrix_spec.hpp"

namespace ntz {

// Row-major square matrix used by the brute-force reference path.
struct DenseMatrix {
  long n = 0;
  std::vector<double> data;

  DenseMatrix() = default;
  explicit DenseMatrix(long order, double fill = 0.0)
      : n(order), data(static_cast<size_t>(order) * static_cast<size_t>(order), fill) {}

  double& at(long i, long j) { return data[static_cast<size_t>(i) * n + j]; }
  double at(long i, long j) const { return data[static_cast<size_t>(i) * n + j]; }

  static DenseMatrix identity(long order);
};

// Assembles the tridiagonal matrix for a spec: interior diagonal b, corner
// entries b_tilde, off-diagonals -1.
DenseMatrix build_matrix(const MatrixSpec& spec);

// Full inverse by Gauss-Jordan elimination with partial pivoting. The routine
// shares no code with the closed forms, so agreement with them is evidence.
// Throws Errc::singular_matrix when a pivot magnitude drops to 1e-13, and
// Errc::scale_cap beyond order 2048.
DenseMatrix oracle_inverse(const DenseMatrix& m);

struct OracleSummary {
  double trace = 0.0;
  std::vector<double> rowsums;  // signed row sums
  double inf_norm = 0.0;        // max absolute row sum
};

// Trace, signed rowsums, and infinity norm of the given (inverse) matrix.
OracleSummary oracle_summary(const DenseMatrix& m);

}  // namespace ntz
