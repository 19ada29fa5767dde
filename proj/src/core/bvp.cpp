#include "core/bvp.hpp"

#include <cfloat>
#include <cmath>

#include "core/bounds.hpp"

namespace ntz {

namespace {

constexpr double kPivotFloor = 1e-13;

void validate_problem(const BvpProblem& p) {
  validate(p.spec);
  if (!std::isfinite(p.length) || !(p.length > 0.0))
    fail(Errc::invalid_argument, "interval length must be positive");
  if (!std::isfinite(p.k)) fail(Errc::invalid_argument, "source coefficient must be finite");
  if (!std::isfinite(p.c_hat) || p.c_hat == 0.0)
    fail(Errc::invalid_argument, "system scale factor must be finite and nonzero");
}

double inf_norm(const std::vector<double>& v) {
  double best = 0.0;
  for (double x : v) best = std::fmax(best, std::fabs(x));
  return best;
}

std::vector<double> apply_rhs(RhsKind kind, const std::vector<double>& u,
                              double factor) {
  std::vector<double> out(u.size());
  if (kind == RhsKind::fisher) {
    for (size_t i = 0; i < u.size(); ++i) out[i] = factor * u[i] * (1.0 - u[i]);
  } else {
    for (size_t i = 0; i < u.size(); ++i) out[i] = factor * std::exp(u[i]);
  }
  return out;
}

}  // namespace

std::vector<double> tridiagonal_solve(const MatrixSpec& spec,
                                      const std::vector<double>& rhs) {
  validate(spec);
  const long n = spec.n;
  if (rhs.size() != static_cast<size_t>(n))
    fail(Errc::invalid_argument, "right-hand side length must equal the order");

  // Elimination for tridiag(-1, diag, -1); both corner diagonal entries are
  // b_tilde, interior ones are b.
  auto diag = [&](long i) { return (i == 0 || i == n - 1) ? spec.b_tilde : spec.b; };

  std::vector<double> c(static_cast<size_t>(n));
  std::vector<double> d(static_cast<size_t>(n));
  double m = diag(0);
  if (std::fabs(m) < kPivotFloor)
    fail(Errc::singular_matrix, "pivot breakdown in tridiagonal elimination");
  c[0] = -1.0 / m;
  d[0] = rhs[0] / m;
  for (long i = 1; i < n; ++i) {
    m = diag(i) + c[static_cast<size_t>(i - 1)];
    if (std::fabs(m) < kPivotFloor)
      fail(Errc::singular_matrix, "pivot breakdown in tridiagonal elimination");
    c[static_cast<size_t>(i)] = -1.0 / m;
    d[static_cast<size_t>(i)] = (rhs[static_cast<size_t>(i)] + d[static_cast<size_t>(i - 1)]) / m;
  }

  std::vector<double> x(static_cast<size_t>(n));
  x[static_cast<size_t>(n - 1)] = d[static_cast<size_t>(n - 1)];
  for (long i = n - 2; i >= 0; --i)
    x[static_cast<size_t>(i)] =
        d[static_cast<size_t>(i)] - c[static_cast<size_t>(i)] * x[static_cast<size_t>(i + 1)];
  return x;
}

std::vector<double> fisher_rhs(const std::vector<double>& u, double k) {
  return apply_rhs(RhsKind::fisher, u, k);
}

double lipschitz_constant(RhsKind kind, double k, double lo, double hi) {
  if (!std::isfinite(k)) fail(Errc::invalid_argument, "source coefficient must be finite");
  if (!(lo <= hi)) fail(Errc::invalid_argument, "range must satisfy lo <= hi");
  if (kind == RhsKind::fisher) {
    if (!std::isfinite(lo) || !std::isfinite(hi))
      fail(Errc::unbounded_range, "logistic source needs a bounded range");
    return std::fabs(k) * std::fmax(std::fabs(1.0 - 2.0 * lo), std::fabs(1.0 - 2.0 * hi));
  }
  if (!std::isfinite(hi))
    fail(Errc::unbounded_range, "exponential source needs a bounded upper end");
  return std::fabs(k) * std::exp(hi);
}

double expected_rate(const BvpProblem& problem) {
  validate_problem(problem);
  const double h = problem.length / static_cast<double>(problem.spec.n);
  const double lc = lipschitz_constant(problem.rhs_kind, problem.k, 0.0, 1.0);
  const double bound = inf_norm_upper_bound(problem.spec).bound;
  return h * h * lc * bound / std::fabs(problem.c_hat);
}

FixedPointReport fixed_point_solve(const BvpProblem& problem,
                                   std::vector<double> u0, double tol,
                                   long max_iter) {
  validate_problem(problem);
  if (!(tol > 0.0)) fail(Errc::invalid_argument, "tolerance must be positive");
  if (max_iter < 1) fail(Errc::invalid_argument, "iteration cap must be positive");
  const long n = problem.spec.n;
  if (u0.empty()) u0.assign(static_cast<size_t>(n), 0.5);
  if (u0.size() != static_cast<size_t>(n))
    fail(Errc::invalid_argument, "starting vector length must equal the order");

  const double h = problem.length / static_cast<double>(n);
  const double factor = h * h * problem.k / problem.c_hat;

  FixedPointReport report;
  report.lipschitz = lipschitz_constant(problem.rhs_kind, problem.k, 0.0, 1.0);
  report.expected_rate = expected_rate(problem);

  std::vector<double> u = std::move(u0);
  double prev = 0.0;
  bool prev_set = false;
  long m = 0;
  int stagnant = 0;
  int expanding = 0;
  while (m < max_iter) {
    std::vector<double> un =
        tridiagonal_solve(problem.spec, apply_rhs(problem.rhs_kind, u, factor));

    double step = 0.0;
    for (long i = 0; i < n; ++i)
      step = std::fmax(step, std::fabs(un[static_cast<size_t>(i)] - u[static_cast<size_t>(i)]));
    const double floor = std::fmax(1e-16, 512.0 * DBL_EPSILON * inf_norm(un));

    if (prev_set && std::fmin(prev, step) > floor && prev > 0.0) {
      const double ratio = step / prev;
      report.ratios.push_back(ratio);
      report.numerical_rate = std::fmax(report.numerical_rate, ratio);
      if (ratio > 1.0) {
        if (++expanding >= 3)
          fail(Errc::diverged, "step sizes grew for three consecutive sweeps");
      } else {
        expanding = 0;
      }
    }

    ++m;
    if (!report.converged && step <= tol) {
      report.iterations = m;
      report.converged = true;
    }

    if (problem.rhs_kind == RhsKind::fisher && !report.range_warning) {
      for (double v : un)
        if (v < 0.0 || v > 1.0) {
          report.range_warning = true;
          break;
        }
    }

    u = std::move(un);
    if (step <= floor) {
      if (++stagnant >= 3) break;
    } else {
      stagnant = 0;
    }
    prev = step;
    prev_set = true;
  }

  if (!report.converged) report.iterations = m;
  report.solution = std::move(u);
  return report;
}

}  // namespace ntz
