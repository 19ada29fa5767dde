#pragma once

#include <vector>

#include "core/errors.hpp"

namespace ntz {

// Roots of -r^2 + b*r - 1, real and distinct exactly when |b| > 2.
// Invariants: r1 * r2 == 1 and r1 + r2 == b to within a few ulp.
struct Roots {
  double r1;  // (b + sqrt(b^2-4)) / 2
  double r2;  // (b - sqrt(b^2-4)) / 2
};

Roots characteristic_roots(double b);

// gamma_k = r1^k - r2^k. Integer and half-integer k >= 0 are accepted;
// half-integer values are evaluated with the |b| root pair. For b < -2 and
// integer k, gamma_k(b) = (-1)^(k+1) gamma_k(|b|). Throws Errc::overflow
// instead of returning a non-finite value.
double gamma_value(double k, double b);

// Immutable table of gamma_k for k = 0..max_index at a fixed b.
class GammaEvaluator {
public:
  GammaEvaluator(double b, long max_index);

  double b() const noexcept { return b_; }
  long max_index() const noexcept { return max_index_; }

  // Signed gamma_k; throws Errc::index_out_of_range beyond max_index and
  // Errc::overflow where the value exceeds double range.
  double at(long k) const;

private:
  double b_;
  long max_index_;
  std::vector<double> magnitudes_;  // |gamma_k| for the |b| root pair
};

// rho[k] = gamma_k / gamma_{k+1} for k = 1..count via the continued-fraction
// recurrence rho_1 = 1/b, rho_k = 1/(b - rho_{k-1}); rho[0] = 0 stands for
// gamma_0/gamma_1. Valid for any |b| > 2, signed.
std::vector<double> rho_sequence(long count, double b);

// gamma_j / gamma_k by telescoping rho products; j, k >= 1.
double gamma_ratio(long j, long k, double b);

// sum_{k=1..p} gamma_k = (gamma_{p+1} - gamma_p - gamma_1) / (b - 2).
double gamma_sum(long p, double b);

// sum_{k=1..p} k*gamma_k = (p*gamma_{p+1} - (p+1)*gamma_p) / (b - 2).
double gamma_weighted_sum(long p, double b);

// sum_{i=1..n} (gamma_i^2 + gamma_{n+1-i}^2) in closed form; b > 2 only.
double sum_gamma_squares(long n, double b);

}  // namespace ntz
