#include "core/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace ntz {

namespace {

// Magnitude-domain gamma: r1^k - r2^k for the |b| > 2 root pair, k >= 0
// integer or half-integer. Positive and increasing in k.
double gamma_magnitude(double k, double b_abs) {
  const Roots r = characteristic_roots(b_abs);
  return std::pow(r.r1, k) - std::pow(r.r2, k);
}

void check_finite(double value, double k) {
  if (!std::isfinite(value))
    fail(Errc::overflow,
         "gamma value at index " + std::to_string(k) + " exceeds double range");
}

bool is_integer(double k) { return k == std::floor(k); }

}  // namespace

Roots characteristic_roots(double b) {
  if (!std::isfinite(b)) fail(Errc::invalid_argument, "b must be finite");
  if (!(std::fabs(b) > 2.0))
    fail(Errc::unsupported_regime, "roots are real and distinct only for |b| > 2");
  const double disc = std::sqrt(b * b - 4.0);
  // Evaluate the larger-magnitude root additively and recover the other as
  // its reciprocal, avoiding the cancellation in (b -+ disc)/2.
  if (b > 0.0) {
    const double r1 = 0.5 * (b + disc);
    return {r1, 1.0 / r1};
  }
  const double r2 = 0.5 * (b - disc);
  return {1.0 / r2, r2};
}

double gamma_value(double k, double b) {
  if (!(k >= 0.0) || !std::isfinite(k) || 2.0 * k != std::floor(2.0 * k))
    fail(Errc::invalid_argument, "gamma index must be a nonnegative integer or half-integer");
  if (!std::isfinite(b)) fail(Errc::invalid_argument, "b must be finite");
  if (!(std::fabs(b) > 2.0))
    fail(Errc::unsupported_regime, "gamma sequence requires |b| > 2");

  const double magnitude = gamma_magnitude(k, std::fabs(b));
  check_finite(magnitude, k);
  if (b > 2.0 || !is_integer(k)) return magnitude;
  // Reflection for integer indices at negative b.
  const long ki = static_cast<long>(k);
  return (ki % 2 == 0) ? -magnitude : magnitude;
}

GammaEvaluator::GammaEvaluator(double b, long max_index) : b_(b), max_index_(max_index) {
  if (max_index < 0) fail(Errc::invalid_argument, "max_index must be nonnegative");
  if (!std::isfinite(b) || !(std::fabs(b) > 2.0))
    fail(Errc::unsupported_regime, "gamma sequence requires |b| > 2");
  const Roots r = characteristic_roots(std::fabs(b));
  magnitudes_.resize(static_cast<size_t>(max_index) + 1);
  for (long k = 0; k <= max_index; ++k)
    magnitudes_[static_cast<size_t>(k)] =
        std::pow(r.r1, static_cast<double>(k)) - std::pow(r.r2, static_cast<double>(k));
}

double GammaEvaluator::at(long k) const {
  if (k < 0 || k > max_index_)
    fail(Errc::index_out_of_range, "gamma index outside the tabulated range");
  const double magnitude = magnitudes_[static_cast<size_t>(k)];
  check_finite(magnitude, static_cast<double>(k));
  if (b_ > 2.0) return magnitude;
  return (k % 2 == 0) ? -magnitude : magnitude;
}

std::vector<double> rho_sequence(long count, double b) {
  if (count < 0) fail(Errc::invalid_argument, "rho count must be nonnegative");
  if (!std::isfinite(b) || !(std::fabs(b) > 2.0))
    fail(Errc::unsupported_regime, "rho sequence requires |b| > 2");
  std::vector<double> rho(static_cast<size_t>(count) + 1);
  rho[0] = 0.0;
  if (count >= 1) rho[1] = 1.0 / b;
  for (long k = 2; k <= count; ++k)
    rho[static_cast<size_t>(k)] = 1.0 / (b - rho[static_cast<size_t>(k - 1)]);
  return rho;
}

double gamma_ratio(long j, long k, double b) {
  if (j < 1 || k < 1) fail(Errc::invalid_argument, "gamma ratio indices must be >= 1");
  if (j == k) return 1.0;
  const long hi = std::max(j, k);
  const std::vector<double> rho = rho_sequence(hi - 1, b);
  double product = 1.0;
  if (j < k) {
    for (long m = j; m < k; ++m) product *= rho[static_cast<size_t>(m)];
  } else {
    for (long m = k; m < j; ++m) product /= rho[static_cast<size_t>(m)];
  }
  check_finite(product, static_cast<double>(j));
  return product;
}

double gamma_sum(long p, double b) {
  if (p < 1) fail(Errc::invalid_argument, "summation length must be >= 1");
  const double value =
      (gamma_value(p + 1, b) - gamma_value(p, b) - gamma_value(1, b)) / (b - 2.0);
  check_finite(value, static_cast<double>(p));
  return value;
}

double gamma_weighted_sum(long p, double b) {
  if (p < 1) fail(Errc::invalid_argument, "summation length must be >= 1");
  const double dp = static_cast<double>(p);
  const double value =
      (dp * gamma_value(p + 1, b) - (dp + 1.0) * gamma_value(p, b)) / (b - 2.0);
  check_finite(value, dp);
  return value;
}

double sum_gamma_squares(long n, double b) {
  if (n < 1) fail(Errc::invalid_argument, "summation length must be >= 1");
  if (!(b > 2.0)) fail(Errc::case_out_of_scope, "closed form established for b > 2 only");
  const double g1 = std::sqrt(b * b - 4.0);
  const double g_np1 = gamma_value(n + 1, b);
  const double g_half = gamma_value(0.5 * (n + 1), b);
  const double value =
      b / g1 * g_np1 * (g_half * g_half + 2.0) - g_np1 * g_np1 - 4.0 * (n + 1);
  check_finite(value, static_cast<double>(n));
  return value;
}

}  // namespace ntz
