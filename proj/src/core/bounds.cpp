#include "core/bounds.hpp"

#include <cmath>

#include "core/inverse.hpp"
#include "core/spectral.hpp"

namespace ntz {

namespace {

// gamma_{(n+1)/2} / gamma_{n+1} = 1 / (r1^{(n+1)/2} + r2^{(n+1)/2}).
// Underflows to zero for large n, which is the correct limit.
double half_ratio(long n, double b_pos) {
  const Roots r = characteristic_roots(b_pos);
  const double h = 0.5 * static_cast<double>(n + 1);
  return 1.0 / (std::pow(r.r1, h) + std::pow(r.r2, h));
}

double bound_gt(long n, double bp, double btp) {
  return (1.0 - 2.0 * (1.0 + btp - bp) * (bp - 1.0) / btp * half_ratio(n, bp)) /
         (bp - 2.0);
}

double bound_eq(double bp) { return 1.0 / (bp - 2.0); }

double bound_mid(double bp, double btp) { return (bp + 1.0) / (btp * bp - 2.0); }

// Bound for corner values below the dominance window. Written in the ratio
// variables rho_k = gamma_k / gamma_{k+1} and q = gamma_1 / gamma_{n+1} so
// no intermediate grows with n.
double bound_sub(long n, double bp, double btp) {
  const double beta = btp - bp;
  const std::vector<double> rho = rho_sequence(n, bp);
  double q = 1.0;
  for (long m = 1; m <= n; ++m) q *= rho[static_cast<size_t>(m)];
  const double rn = rho[static_cast<size_t>(n)];
  const double rn1 = rho[static_cast<size_t>(n - 1)];
  const double e = 1.0 + beta * rn;
  const double d = e * e - beta * beta * q * q;
  const double term1 = (1.0 - 2.0 * half_ratio(n, bp)) / (bp - 2.0);
  const double term2 =
      std::fabs(beta / d) * (rn + q) * (1.0 - rn - q) / (bp - 2.0);
  const double term3 = beta * beta / std::fabs(d) * rn1 * rn / (bp - 2.0);
  return term1 + term2 + term3;
}

}  // namespace

const char* to_string(BoundCase c) {
  switch (c) {
    case BoundCase::pos_gt: return "pos_gt";
    case BoundCase::pos_eq: return "pos_eq";
    case BoundCase::pos_mid: return "pos_mid";
    case BoundCase::pos_sub: return "pos_sub";
    case BoundCase::neg_lt: return "neg_lt";
    case BoundCase::neg_eq: return "neg_eq";
    case BoundCase::neg_mid: return "neg_mid";
    case BoundCase::neg_sup: return "neg_sup";
  }
  return "unknown";
}

BoundReport inf_norm_upper_bound(const MatrixSpec& spec) {
  validate(spec);
  if (!is_nonsingular(spec))
    fail(Errc::singular_matrix, "corner value lies on a singular threshold");

  const bool neg = spec.b < 0.0;
  const double bp = neg ? -spec.b : spec.b;
  const double btp = neg ? -spec.b_tilde : spec.b_tilde;

  BoundReport r;
  if (btp > bp - 1.0) {
    r.case_id = neg ? BoundCase::neg_lt : BoundCase::pos_gt;
    r.bound = bound_gt(spec.n, bp, btp);
    r.interval = neg ? "b < -2, btilde < b + 1" : "b > 2, btilde > b - 1";
  } else if (btp == bp - 1.0) {
    r.case_id = neg ? BoundCase::neg_eq : BoundCase::pos_eq;
    r.bound = bound_eq(bp);
    r.interval = neg ? "b < -2, btilde = b + 1" : "b > 2, btilde = b - 1";
  } else if (btp >= 1.0) {
    r.case_id = neg ? BoundCase::neg_mid : BoundCase::pos_mid;
    r.bound = bound_mid(bp, btp);
    r.interval =
        neg ? "b < -2, b + 1 < btilde <= -1" : "b > 2, 1 <= btilde < b - 1";
  } else {
    r.case_id = neg ? BoundCase::neg_sup : BoundCase::pos_sub;
    r.bound = bound_sub(spec.n, bp, btp);
    r.interval = neg ? "b < -2, btilde > -1" : "b > 2, btilde < 1";
  }
  return r;
}

RowsumBounds rowsum_bounds(const MatrixSpec& spec) {
  validate(spec);
  if (!(spec.b > 2.0))
    fail(Errc::case_out_of_scope, "rowsum enclosures are established for b > 2 only");

  const long n = spec.n;
  const double b = spec.b;
  const double bt = spec.b_tilde;
  const double ratio = half_ratio(n, b);
  const double r2 = characteristic_roots(b).r2;

  RowsumBounds out;
  if (bt > b - 1.0) {
    out.case_id = BoundCase::pos_gt;
    out.lower = 1.0 / (bt - 1.0);
    out.upper =
        (1.0 - 2.0 * (1.0 + bt - b) * (b - 1.0) / bt * ratio) / (b - 2.0);
  } else if (bt == b - 1.0) {
    out.case_id = BoundCase::pos_eq;
    out.lower = 1.0 / (b - 2.0);
    out.upper = out.lower;
  } else if (bt > 2.0 / b) {
    out.case_id = BoundCase::pos_mid;
    out.lower =
        (1.0 + 2.0 * (b - bt - 1.0) * (b - 1.0) / bt * ratio) / (b - 2.0);
    out.upper = (b + 1.0) / (bt * b - 2.0);
  } else if (bt < r2) {
    out.case_id = BoundCase::pos_sub;
    const double r1 = characteristic_roots(b).r1;
    out.lower = (r1 - 1.0) / ((b - 2.0) * (bt - r2));
    out.upper =
        (1.0 + 2.0 * (b - bt - 1.0) * (b - 1.0) / (bt - 1.0) * ratio) / (b - 2.0);
  } else {
    fail(Errc::case_out_of_scope,
         "corner value falls between the covered rowsum intervals");
  }
  return out;
}

std::vector<int> predicted_sign_pattern(const MatrixSpec& spec) {
  validate(spec);
  const bool positive = spec.b > 2.0 && spec.b_tilde >= 1.0;
  const bool checker = spec.b < -2.0 && spec.b_tilde <= -1.0;
  if (!positive && !checker)
    fail(Errc::case_out_of_scope,
         "sign pattern is established only for btilde >= 1 (b > 2) or btilde <= -1 (b < -2)");

  const long n = spec.n;
  std::vector<int> signs(static_cast<size_t>(n) * static_cast<size_t>(n), 1);
  if (checker) {
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j)
        signs[static_cast<size_t>(i) * n + j] = ((i - j) % 2 == 0) ? -1 : 1;
  }
  return signs;
}

}  // namespace ntz
