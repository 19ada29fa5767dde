#pragma once

#include <vector>

#include "core/matrix_spec.hpp"

namespace ntz {

enum class RhsKind {
  fisher,         // f(u) = k u (1 - u)
  gelfand_bratu,  // f(u) = k exp(u)
};

// Discretized two-point boundary value problem on a uniform grid of n
// interior points over an interval of the given length. The system matrix
// is c_hat times the near-Toeplitz operator described by spec; the source
// term enters scaled by h^2 / c_hat.
struct BvpProblem {
  MatrixSpec spec;
  double length = 1.0;
  double k = 1.0;
  RhsKind rhs_kind = RhsKind::fisher;
  double c_hat = 1.0;
};

struct FixedPointReport {
  long iterations = 0;              // first sweep whose step fell below tol
  bool converged = false;
  std::vector<double> ratios;       // successive step-size quotients
  double numerical_rate = 0.0;      // max of ratios
  double expected_rate = 0.0;       // h^2 L_c times the norm bound
  double lipschitz = 0.0;           // L_c used for the prediction
  bool range_warning = false;       // iterates left the range L_c was taken on
  std::vector<double> solution;
};

// Direct O(n) solve of the near-Toeplitz system for one right-hand side.
std::vector<double> tridiagonal_solve(const MatrixSpec& spec,
                                      const std::vector<double>& rhs);

// Elementwise logistic source term k u (1 - u).
std::vector<double> fisher_rhs(const std::vector<double>& u, double k);

// Lipschitz constant of the source term over [lo, hi].
double lipschitz_constant(RhsKind kind, double k, double lo, double hi);

// Predicted contraction factor of one fixed-point sweep: h^2 L_c scaled by
// the closed-form norm bound, with the Lipschitz constant taken on [0, 1].
double expected_rate(const BvpProblem& problem);

// Picard iteration u <- (c_hat T)^{-1} h^2 f(u), run until the steps
// stagnate at rounding level so the observed rate covers the whole decay.
FixedPointReport fixed_point_solve(const BvpProblem& problem,
                                   std::vector<double> u0 = {},
                                   double tol = 1e-8, long max_iter = 500);

}  // namespace ntz
