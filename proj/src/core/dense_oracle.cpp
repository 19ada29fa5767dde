#include "core/dense_oracle.hpp"

#include <cmath>
#include <utility>

namespace ntz {

namespace {

constexpr double kPivotFloor = 1e-13;
constexpr long kOrderCap = 2048;

}  // namespace

DenseMatrix DenseMatrix::identity(long order) {
  DenseMatrix m(order);
  for (long i = 0; i < order; ++i) m.at(i, i) = 1.0;
  return m;
}

DenseMatrix build_matrix(const MatrixSpec& spec) {
  if (spec.n < 3) fail(Errc::invalid_argument, "order n must be at least 3");
  if (!std::isfinite(spec.b) || !std::isfinite(spec.b_tilde))
    fail(Errc::invalid_argument, "matrix coefficients must be finite");
  DenseMatrix m(spec.n);
  for (long i = 0; i < spec.n; ++i) {
    m.at(i, i) = spec.b;
    if (i + 1 < spec.n) {
      m.at(i, i + 1) = -1.0;
      m.at(i + 1, i) = -1.0;
    }
  }
  m.at(0, 0) = spec.b_tilde;
  m.at(spec.n - 1, spec.n - 1) = spec.b_tilde;
  return m;
}

DenseMatrix oracle_inverse(const DenseMatrix& m) {
  const long n = m.n;
  if (n < 1) fail(Errc::invalid_argument, "matrix order must be positive");
  if (n > kOrderCap) fail(Errc::scale_cap, "dense reference inversion is capped at order 2048");

  DenseMatrix a = m;
  DenseMatrix inv = DenseMatrix::identity(n);

  for (long col = 0; col < n; ++col) {
    long pivot_row = col;
    double pivot_mag = std::fabs(a.at(col, col));
    for (long r = col + 1; r < n; ++r) {
      const double mag = std::fabs(a.at(r, col));
      if (mag > pivot_mag) {
        pivot_mag = mag;
        pivot_row = r;
      }
    }
    if (!(pivot_mag > kPivotFloor))
      fail(Errc::singular_matrix, "pivot breakdown during elimination");
    if (pivot_row != col) {
      for (long j = 0; j < n; ++j) {
        std::swap(a.at(col, j), a.at(pivot_row, j));
        std::swap(inv.at(col, j), inv.at(pivot_row, j));
      }
    }
    const double scale = 1.0 / a.at(col, col);
    for (long j = 0; j < n; ++j) {
      a.at(col, j) *= scale;
      inv.at(col, j) *= scale;
    }
    for (long r = 0; r < n; ++r) {
      if (r == col) continue;
      const double factor = a.at(r, col);
      if (factor == 0.0) continue;
      for (long j = 0; j < n; ++j) {
        a.at(r, j) -= factor * a.at(col, j);
        inv.at(r, j) -= factor * inv.at(col, j);
      }
    }
  }
  return inv;
}

OracleSummary oracle_summary(const DenseMatrix& m) {
  OracleSummary s;
  s.rowsums.resize(static_cast<size_t>(m.n));
  for (long i = 0; i < m.n; ++i) {
    s.trace += m.at(i, i);
    double signed_sum = 0.0;
    double abs_sum = 0.0;
    for (long j = 0; j < m.n; ++j) {
      signed_sum += m.at(i, j);
      abs_sum += std::fabs(m.at(i, j));
    }
    s.rowsums[static_cast<size_t>(i)] = signed_sum;
    if (abs_sum > s.inf_norm) s.inf_norm = abs_sum;
  }
  return s;
}

}  // namespace ntz
