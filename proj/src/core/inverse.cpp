#include "core/inverse.hpp"

#include <algorithm>
#include <cmath>

#include "core/spectral.hpp"

namespace ntz {

namespace {

// Everything downstream works on the |b| > 2 domain and maps back by the
// diagonal similarity that links (b, bt) to (-b, -bt).
struct Ctx {
  long n;
  double bp, btp;          // positive-domain coefficients
  double beta;             // btp - bp
  double g1;               // sqrt(bp^2 - 4)
  std::vector<double> rho; // rho[0..n] for bp
  double q;                // gamma_1 / gamma_{n+1} = prod of rho[1..n]
  double E;                // (gamma_{n+1} + beta gamma_n) / gamma_{n+1}
  double D;                // capacitance determinant, scaled by gamma_{n+1}^2
  bool negative;           // original b < -2
};

Ctx make_ctx(const MatrixSpec& spec) {
  validate(spec);
  Ctx c;
  c.n = spec.n;
  c.negative = spec.b < 0.0;
  c.bp = c.negative ? -spec.b : spec.b;
  c.btp = c.negative ? -spec.b_tilde : spec.b_tilde;
  c.beta = c.btp - c.bp;
  c.g1 = std::sqrt(c.bp * c.bp - 4.0);
  c.rho = rho_sequence(spec.n, c.bp);
  c.q = 1.0;
  for (long m = 1; m <= spec.n; ++m) c.q *= c.rho[static_cast<size_t>(m)];
  c.E = 1.0 + c.beta * c.rho[static_cast<size_t>(spec.n)];
  c.D = c.E * c.E - c.beta * c.beta * c.q * c.q;
  return c;
}

void require_nonsingular(const MatrixSpec& spec) {
  if (!is_nonsingular(spec))
    fail(Errc::singular_matrix, "corner value lies on a singular threshold");
}

long checked_index(long i, long n, const char* which) {
  if (i < 1 || i > n)
    fail(Errc::index_out_of_range, std::string(which) + " index must lie in [1, n]");
  return i;
}

// Interleaved evaluation of
//   prod_{m=n+1-i..n} rho_m / prod_{m=1..j-1} rho_m,   i >= j,
// which equals gamma_j gamma_{n+1-i} / (gamma_1 gamma_{n+1}). Pairing one
// numerator factor with one denominator factor keeps partial products within
// a bounded range at any order.
double toeplitz_bracket(const std::vector<double>& rho, long n, long i, long j) {
  double value = 1.0;
  long t = 0;
  for (; t < j - 1; ++t)
    value *= rho[static_cast<size_t>(n + 1 - i + t)] / rho[static_cast<size_t>(1 + t)];
  for (; t < i; ++t) value *= rho[static_cast<size_t>(n + 1 - i + t)];
  return value;
}

double reflection_sign(long i, long j) { return ((i - j) % 2 == 0) ? -1.0 : 1.0; }

}  // namespace

SingularThresholds singular_thresholds(const MatrixSpec& spec) {
  validate(spec);
  const std::vector<double> rho = rho_sequence(spec.n, spec.b);
  double q = 1.0;
  for (long m = 1; m <= spec.n; ++m) q *= rho[static_cast<size_t>(m)];
  const double rn = rho[static_cast<size_t>(spec.n)];
  return {spec.b - 1.0 / (rn + q), spec.b - 1.0 / (rn - q)};
}

bool is_nonsingular(const MatrixSpec& spec, double tol) {
  if (!(tol >= 0.0)) fail(Errc::invalid_argument, "tolerance must be nonnegative");
  const SingularThresholds t = singular_thresholds(spec);
  const double dist =
      std::min(std::fabs(spec.b_tilde - t.b1), std::fabs(spec.b_tilde - t.b2));
  return dist > tol;
}

InverseFactors inverse_factors(const MatrixSpec& spec) {
  validate(spec);
  const double beta = spec.b_tilde - spec.b;
  const double g1 = std::sqrt(spec.b * spec.b - 4.0);
  const std::vector<double> rho = rho_sequence(spec.n, spec.b);
  double q = 1.0;
  for (long m = 1; m <= spec.n; ++m) q *= rho[static_cast<size_t>(m)];

  InverseFactors f;
  f.beta = beta;
  f.m11 = 1.0 + beta * rho[static_cast<size_t>(spec.n)];
  f.m12 = beta * q;
  f.delta = f.m11 * f.m11 - f.m12 * f.m12;
  f.C = q / (g1 * g1 * f.delta);
  f.K = beta * q * q / (g1 * g1 * f.delta);
  f.K1 = (f.m11 * f.m11 + f.m12 * f.m12) / f.delta;
  f.K2 = beta * f.m11 * q / (g1 * f.delta);
  return f;
}

double toeplitz_inverse_entry(long i, long j, long n, double b) {
  if (n < 3) fail(Errc::invalid_argument, "order n must be at least 3");
  checked_index(i, n, "row");
  checked_index(j, n, "column");
  if (!std::isfinite(b) || !(std::fabs(b) > 2.0))
    fail(Errc::unsupported_regime, "Toeplitz inverse requires |b| > 2");
  if (i < j) std::swap(i, j);
  const std::vector<double> rho = rho_sequence(n, std::fabs(b));
  const double magnitude = toeplitz_bracket(rho, n, i, j);
  return b > 0.0 ? magnitude : reflection_sign(i, j) * magnitude;
}

double inverse_entry(const MatrixSpec& spec, long i, long j) {
  require_nonsingular(spec);
  checked_index(i, spec.n, "row");
  checked_index(j, spec.n, "column");
  if (i < j) std::swap(i, j);
  const Ctx c = make_ctx(spec);
  const double left = 1.0 + c.beta * c.rho[static_cast<size_t>(c.n - i)];
  const double right = 1.0 + c.beta * c.rho[static_cast<size_t>(j - 1)];
  const double value = left * right * toeplitz_bracket(c.rho, c.n, i, j) / c.D;
  return c.negative ? reflection_sign(i, j) * value : value;
}

std::vector<double> inverse_dense(const MatrixSpec& spec) {
  require_nonsingular(spec);
  const Ctx c = make_ctx(spec);
  const long n = c.n;
  std::vector<double> m(static_cast<size_t>(n) * static_cast<size_t>(n));
  auto cell = [&](long i, long j) -> double& {
    return m[static_cast<size_t>(i - 1) * n + (j - 1)];
  };

  // Corner factors 1 + beta*rho_{k-1}, shared by both entry coordinates.
  std::vector<double> f(static_cast<size_t>(n) + 1);
  for (long k = 1; k <= n; ++k)
    f[static_cast<size_t>(k)] = 1.0 + c.beta * c.rho[static_cast<size_t>(k - 1)];

  // Walk the diagonal with the bounded bracket recurrence, then decay each
  // row toward column 1; every step multiplies by one rho < 1.
  double diag_bracket = c.rho[static_cast<size_t>(n)];
  for (long i = 1; i <= n; ++i) {
    double bracket = diag_bracket;
    for (long j = i; j >= 1; --j) {
      const double value =
          f[static_cast<size_t>(n + 1 - i)] * f[static_cast<size_t>(j)] * bracket / c.D;
      cell(i, j) = value;
      cell(j, i) = value;
      if (j > 1) bracket *= c.rho[static_cast<size_t>(j - 1)];
    }
    if (i < n)
      diag_bracket *= c.rho[static_cast<size_t>(n - i)] / c.rho[static_cast<size_t>(i)];
  }

  if (c.negative) {
    for (long i = 1; i <= n; ++i)
      for (long j = 1; j <= n; ++j) cell(i, j) *= reflection_sign(i, j);
  }
  return m;
}

double trace_inverse(const MatrixSpec& spec) {
  require_nonsingular(spec);
  const Ctx c = make_ctx(spec);
  const double d2 = c.bp * c.bp - 4.0;
  const double r2 = characteristic_roots(c.bp).r2;
  const double s = std::pow(r2, 2.0 * static_cast<double>(c.n + 1));
  const double gfac = (1.0 + s) / (1.0 - s);  // (gamma_half^2 + 2) / gamma_{n+1}
  const double np1 = static_cast<double>(c.n + 1);
  const double k1 = (c.E * c.E + c.beta * c.beta * c.q * c.q) / c.D;
  const double trace =
      k1 * (np1 / c.g1 * gfac - c.bp / d2) -
      c.beta * c.E *
          (c.bp / c.g1 * gfac - 1.0 - 4.0 * np1 * c.q * c.q / (c.g1 * c.g1)) / c.D;
  return c.negative ? -trace : trace;
}

std::vector<double> rowsums(const MatrixSpec& spec) {
  require_nonsingular(spec);
  const long n = spec.n;
  const double b = spec.b;
  const double beta = spec.b_tilde - b;

  // Signed-domain ratios: the rowsum formula holds verbatim for both signs
  // of b when every gamma carries its own sign.
  const std::vector<double> rho = rho_sequence(n, b);
  double q = 1.0;
  for (long m = 1; m <= n; ++m) q *= rho[static_cast<size_t>(m)];
  const double den = 1.0 + beta * (rho[static_cast<size_t>(n)] + q);
  const double c0 = 1.0 / (b - 2.0);
  const double c1 = (b - spec.b_tilde - 1.0) / ((b - 2.0) * den);

  // suffix[i] = gamma_i / gamma_{n+1}
  std::vector<double> suffix(static_cast<size_t>(n) + 2);
  suffix[static_cast<size_t>(n) + 1] = 1.0;
  for (long i = n; i >= 1; --i)
    suffix[static_cast<size_t>(i)] = rho[static_cast<size_t>(i)] * suffix[static_cast<size_t>(i) + 1];

  std::vector<double> r(static_cast<size_t>(n));
  for (long i = 1; i <= n; ++i)
    r[static_cast<size_t>(i - 1)] =
        c0 + c1 * (suffix[static_cast<size_t>(i)] + suffix[static_cast<size_t>(n + 1 - i)]);
  return r;
}

double rowsum(const MatrixSpec& spec, long i) {
  checked_index(i, spec.n, "row");
  return rowsums(spec)[static_cast<size_t>(i - 1)];
}

RowsumExtrema rowsum_extrema(const MatrixSpec& spec) {
  validate(spec);
  if (!(spec.b > 2.0))
    fail(Errc::case_out_of_scope, "rowsum extrema are established for b > 2 only");
  const std::vector<double> values = rowsums(spec);

  RowsumExtrema e;
  e.max = *std::max_element(values.begin(), values.end());
  e.min = *std::min_element(values.begin(), values.end());
  const double tol_max = 1e-12 * std::max(1.0, std::fabs(e.max));
  const double tol_min = 1e-12 * std::max(1.0, std::fabs(e.min));
  for (long i = 1; i <= spec.n; ++i) {
    const double v = values[static_cast<size_t>(i - 1)];
    if (e.max - v <= tol_max) e.argmax.push_back(i);
    if (v - e.min <= tol_min) e.argmin.push_back(i);
  }
  return e;
}

double infinity_norm_exact(const MatrixSpec& spec) {
  require_nonsingular(spec);
  const Ctx c = make_ctx(spec);
  const long n = c.n;

  // u[i] accumulates prefix sums of |gamma_j + beta gamma_{j-1}| scaled by
  // gamma_i, so that each row's absolute sum factors through bounded ratios.
  std::vector<double> u(static_cast<size_t>(n) + 1);
  u[0] = 0.0;
  if (n >= 1) u[1] = 1.0;
  for (long i = 2; i <= n; ++i) {
    const double r = c.rho[static_cast<size_t>(i - 1)];
    u[static_cast<size_t>(i)] =
        u[static_cast<size_t>(i - 1)] * r + std::fabs(1.0 + c.beta * r);
  }

  double best = 0.0;
  double pi = c.g1 * c.rho[static_cast<size_t>(n)];  // gamma_1 gamma_n / gamma_{n+1}
  const double scale = c.g1 * std::fabs(c.D);
  for (long i = 1; i <= n; ++i) {
    const double f1 =
        1.0 + (n - i >= 1 ? c.beta * c.rho[static_cast<size_t>(n - i)] : 0.0);
    const double f2 = 1.0 + (i - 1 >= 1 ? c.beta * c.rho[static_cast<size_t>(i - 1)] : 0.0);
    double value = std::fabs(f1) * pi * u[static_cast<size_t>(i)];
    if (n - i >= 1)
      value += std::fabs(f2) * pi * c.rho[static_cast<size_t>(n - i)] * u[static_cast<size_t>(n - i)];
    value /= scale;
    if (value > best) best = value;
    if (i < n) pi *= c.rho[static_cast<size_t>(n - i)] / c.rho[static_cast<size_t>(i)];
  }
  return best;
}

}  // namespace ntz
