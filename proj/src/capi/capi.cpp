#include "neartoeplitz/neartoeplitz.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#include "core/bounds.hpp"
#include "core/bvp.hpp"
#include "core/dense_oracle.hpp"
#include "core/errors.hpp"
#include "core/inverse.hpp"
#include "core/spectral.hpp"

namespace {

thread_local std::string g_last_error;

nt_status map_code(ntz::Errc code) {
  switch (code) {
    case ntz::Errc::invalid_argument: return NT_EINVAL;
    case ntz::Errc::unsupported_regime: return NT_EREGIME;
    case ntz::Errc::index_out_of_range: return NT_EINDEX;
    case ntz::Errc::singular_matrix: return NT_ESINGULAR;
    case ntz::Errc::overflow: return NT_EOVERFLOW;
    case ntz::Errc::case_out_of_scope: return NT_ESCOPE;
    case ntz::Errc::unbounded_range: return NT_EUNBOUNDED;
    case ntz::Errc::diverged: return NT_EDIVERGED;
    case ntz::Errc::scale_cap: return NT_ECAP;
  }
  return NT_EINTERNAL;
}

template <typename F>
nt_status guarded(F&& body) noexcept {
  try {
    body();
    g_last_error.clear();
    return NT_OK;
  } catch (const ntz::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return NT_EINTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return NT_EINTERNAL;
  }
}

void require(bool ok, const char* message) {
  if (!ok) ntz::fail(ntz::Errc::invalid_argument, message);
}

ntz::BoundCase from_c(nt_bound_case c) {
  return static_cast<ntz::BoundCase>(static_cast<int>(c));
}

nt_bound_case to_c(ntz::BoundCase c) {
  return static_cast<nt_bound_case>(static_cast<int>(c));
}

}  // namespace

struct nt_spec {
  ntz::MatrixSpec spec;
};

struct nt_gamma {
  ntz::GammaEvaluator eval;
};

struct nt_dense {
  long order;
  std::vector<double> data;
};

extern "C" {

const char* nt_version(void) { return "1.0.0"; }

const char* nt_strerror(nt_status code) {
  switch (code) {
    case NT_OK: return "success";
    case NT_EINVAL: return "invalid argument";
    case NT_EREGIME: return "unsupported regime";
    case NT_EINDEX: return "index out of range";
    case NT_ESINGULAR: return "singular matrix";
    case NT_EOVERFLOW: return "overflow";
    case NT_ESCOPE: return "case out of scope";
    case NT_EUNBOUNDED: return "unbounded range";
    case NT_EDIVERGED: return "diverged";
    case NT_ECAP: return "order cap exceeded";
    case NT_EINTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* nt_last_error(void) { return g_last_error.c_str(); }

nt_status nt_spec_create(long n, double b, double btilde, nt_spec** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    ntz::MatrixSpec spec{n, b, btilde};
    ntz::validate(spec);
    *out = new nt_spec{spec};
  });
}

void nt_spec_destroy(nt_spec* spec) { delete spec; }

long nt_spec_order(const nt_spec* spec) { return spec ? spec->spec.n : 0; }

double nt_spec_b(const nt_spec* spec) { return spec ? spec->spec.b : 0.0; }

double nt_spec_btilde(const nt_spec* spec) {
  return spec ? spec->spec.b_tilde : 0.0;
}

nt_status nt_characteristic_roots(double b, double* r1, double* r2) {
  return guarded([&] {
    require(r1 != nullptr && r2 != nullptr, "null output pointer");
    const ntz::Roots r = ntz::characteristic_roots(b);
    *r1 = r.r1;
    *r2 = r.r2;
  });
}

nt_status nt_gamma_value(double k, double b, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = ntz::gamma_value(k, b);
  });
}

nt_status nt_gamma_create(double b, long max_index, nt_gamma** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new nt_gamma{ntz::GammaEvaluator(b, max_index)};
  });
}

void nt_gamma_destroy(nt_gamma* g) { delete g; }

nt_status nt_gamma_at(const nt_gamma* g, long k, double* out) {
  return guarded([&] {
    require(g != nullptr, "null evaluator");
    require(out != nullptr, "null output pointer");
    *out = g->eval.at(k);
  });
}

nt_status nt_singular_thresholds(const nt_spec* spec, double* bt1, double* bt2) {
  return guarded([&] {
    require(spec != nullptr, "null matrix description");
    require(bt1 != nullptr && bt2 != nullptr, "null output pointer");
    const ntz::SingularThresholds t = ntz::singular_thresholds(spec->spec);
    *bt1 = t.b1;
    *bt2 = t.b2;
  });
}

nt_status nt_is_nonsingular(const nt_spec* spec, double tol, int* out) {
  return guarded([&] {
    require(spec != nullptr, "null matrix description");
    require(out != nullptr, "null output pointer");
    *out = ntz::is_nonsingular(spec->spec, tol) ? 1 : 0;
  });
}

nt_status nt_toeplitz_inverse_entry(long i, long j, long n, double b, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = ntz::toeplitz_inverse_entry(i, j, n, b);
  });
}

nt_status nt_inverse_entry(const nt_spec* spec, long i, long j, double* out) {
  return guarded([&] {
    require(spec != nullptr, "null matrix description");
    require(out != nullptr, "null output pointer");
    *out = ntz::inverse_entry(spec->spec, i, j);
  });
}

nt_status nt_trace_inverse(const nt_spec* spec, double* out) {
  return guarded([&] {
    require(spec != nullptr, "null matrix description");
    require(out != nullptr, "null output pointer");
    *out = ntz::trace_inverse(spec->spec);
  });
}

nt_status nt_rowsums(const nt_spec* spec, double* out) {
  return guarded([&] {
    require(spec != nullptr, "null matrix description");
    require(out != nullptr, "null output pointer");
    const std::vector<double> r = ntz::rowsums(spec->spec);
    std::memcpy(out, r.data(), r.size() * sizeof(double));
  });
}

nt_status nt_infinity_norm(const nt_spec* spec, double* out) {
  return guarded([&] {
    require(spec != nullptr, "null matrix description");
    require(out != nullptr, "null output pointer");
    *out = ntz::infinity_norm_exact(spec->spec);
  });
}

nt_status nt_rowsum_extrema(const nt_spec* spec, long* argmax, long* max_count,
                            long* argmin, long* min_count, double* max_value,
                            double* min_value) {
  return guarded([&] {
    require(spec != nullptr, "null matrix description");
    require(argmax != nullptr && max_count != nullptr, "null output pointer");
    require(argmin != nullptr && min_count != nullptr, "null output pointer");
    require(max_value != nullptr && min_value != nullptr, "null output pointer");
    const ntz::RowsumExtrema e = ntz::rowsum_extrema(spec->spec);
    *max_count = static_cast<long>(e.argmax.size());
    *min_count = static_cast<long>(e.argmin.size());
    std::memcpy(argmax, e.argmax.data(), e.argmax.size() * sizeof(long));
    std::memcpy(argmin, e.argmin.data(), e.argmin.size() * sizeof(long));
    *max_value = e.max;
    *min_value = e.min;
  });
}

void nt_dense_destroy(nt_dense* m) { delete m; }

long nt_dense_order(const nt_dense* m) { return m ? m->order : 0; }

nt_status nt_dense_entry(const nt_dense* m, long i, long j, double* out) {
  return guarded([&] {
    require(m != nullptr, "null dense buffer");
    require(out != nullptr, "null output pointer");
    if (i < 1 || i > m->order || j < 1 || j > m->order)
      ntz::fail(ntz::Errc::index_out_of_range, "entry index must lie in [1, n]");
    *out = m->data[static_cast<size_t>(i - 1) * m->order + (j - 1)];
  });
}

const double* nt_dense_data(const nt_dense* m) {
  return m ? m->data.data() : nullptr;
}

nt_status nt_dense_summary(const nt_dense* m, double* trace, double* rowsums,
                           double* inf_norm) {
  return guarded([&] {
    require(m != nullptr, "null dense buffer");
    require(trace != nullptr && inf_norm != nullptr, "null output pointer");
    ntz::DenseMatrix dm(m->order);
    dm.data = m->data;
    const ntz::OracleSummary s = ntz::oracle_summary(dm);
    *trace = s.trace;
    if (rowsums != nullptr)
      std::memcpy(rowsums, s.rowsums.data(), s.rowsums.size() * sizeof(double));
    *inf_norm = s.inf_norm;
  });
}

nt_status nt_inverse_dense(const nt_spec* spec, nt_dense** out) {
  return guarded([&] {
    require(spec != nullptr, "null matrix description");
    require(out != nullptr, "null output pointer");
    *out = new nt_dense{spec->spec.n, ntz::inverse_dense(spec->spec)};
  });
}

nt_status nt_oracle_matrix(const nt_spec* spec, nt_dense** out) {
  return guarded([&] {
    require(spec != nullptr, "null matrix description");
    require(out != nullptr, "null output pointer");
    ntz::DenseMatrix m = ntz::build_matrix(spec->spec);
    *out = new nt_dense{spec->spec.n, std::move(m.data)};
  });
}

nt_status nt_oracle_inverse(const nt_spec* spec, nt_dense** out) {
  return guarded([&] {
    require(spec != nullptr, "null matrix description");
    require(out != nullptr, "null output pointer");
    ntz::DenseMatrix inv = ntz::oracle_inverse(ntz::build_matrix(spec->spec));
    *out = new nt_dense{spec->spec.n, std::move(inv.data)};
  });
}

const char* nt_bound_case_name(nt_bound_case c) {
  return ntz::to_string(from_c(c));
}

const char* nt_bound_case_interval(nt_bound_case c) {
  switch (c) {
    case NT_BOUND_POS_GT: return "b > 2, btilde > b - 1";
    case NT_BOUND_POS_EQ: return "b > 2, btilde = b - 1";
    case NT_BOUND_POS_MID: return "b > 2, 1 <= btilde < b - 1";
    case NT_BOUND_POS_SUB: return "b > 2, btilde < 1";
    case NT_BOUND_NEG_LT: return "b < -2, btilde < b + 1";
    case NT_BOUND_NEG_EQ: return "b < -2, btilde = b + 1";
    case NT_BOUND_NEG_MID: return "b < -2, b + 1 < btilde <= -1";
    case NT_BOUND_NEG_SUP: return "b < -2, btilde > -1";
  }
  return "unknown";
}

nt_status nt_norm_bound(const nt_spec* spec, double* bound, nt_bound_case* case_id) {
  return guarded([&] {
    require(spec != nullptr, "null matrix description");
    require(bound != nullptr, "null output pointer");
    const ntz::BoundReport r = ntz::inf_norm_upper_bound(spec->spec);
    *bound = r.bound;
    if (case_id != nullptr) *case_id = to_c(r.case_id);
  });
}

nt_status nt_rowsum_bounds(const nt_spec* spec, double* lower, double* upper,
                           nt_bound_case* case_id) {
  return guarded([&] {
    require(spec != nullptr, "null matrix description");
    require(lower != nullptr && upper != nullptr, "null output pointer");
    const ntz::RowsumBounds r = ntz::rowsum_bounds(spec->spec);
    *lower = r.lower;
    *upper = r.upper;
    if (case_id != nullptr) *case_id = to_c(r.case_id);
  });
}

nt_status nt_sign_pattern(const nt_spec* spec, int* out) {
  return guarded([&] {
    require(spec != nullptr, "null matrix description");
    require(out != nullptr, "null output pointer");
    const std::vector<int> s = ntz::predicted_sign_pattern(spec->spec);
    std::memcpy(out, s.data(), s.size() * sizeof(int));
  });
}

nt_status nt_tridiagonal_solve(const nt_spec* spec, const double* rhs, double* x) {
  return guarded([&] {
    require(spec != nullptr, "null matrix description");
    require(rhs != nullptr && x != nullptr, "null buffer");
    const std::vector<double> in(rhs, rhs + spec->spec.n);
    const std::vector<double> sol = ntz::tridiagonal_solve(spec->spec, in);
    std::memcpy(x, sol.data(), sol.size() * sizeof(double));
  });
}

nt_status nt_fisher_rhs(const double* u, long n, double k, double* out) {
  return guarded([&] {
    require(u != nullptr && out != nullptr, "null buffer");
    require(n >= 1, "length must be positive");
    const std::vector<double> in(u, u + n);
    const std::vector<double> r = ntz::fisher_rhs(in, k);
    std::memcpy(out, r.data(), r.size() * sizeof(double));
  });
}

nt_status nt_lipschitz_constant(nt_rhs_kind kind, double k, double lo, double hi,
                                double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    const ntz::RhsKind rk = kind == NT_RHS_FISHER ? ntz::RhsKind::fisher
                                                  : ntz::RhsKind::gelfand_bratu;
    *out = ntz::lipschitz_constant(rk, k, lo, hi);
  });
}

nt_status nt_expected_rate(const nt_spec* spec, double length, double k,
                           nt_rhs_kind kind, double c_hat, double* out) {
  return guarded([&] {
    require(spec != nullptr, "null matrix description");
    require(out != nullptr, "null output pointer");
    const ntz::RhsKind rk = kind == NT_RHS_FISHER ? ntz::RhsKind::fisher
                                                  : ntz::RhsKind::gelfand_bratu;
    *out = ntz::expected_rate({spec->spec, length, k, rk, c_hat});
  });
}

nt_status nt_fixed_point_solve(const nt_spec* spec, double length, double k,
                               nt_rhs_kind kind, double c_hat, const double* u0,
                               double tol, long max_iter, double* solution,
                               double* ratios, long ratios_cap,
                               nt_fixed_point_report* report) {
  return guarded([&] {
    require(spec != nullptr, "null matrix description");
    require(report != nullptr, "null report pointer");
    const ntz::RhsKind rk = kind == NT_RHS_FISHER ? ntz::RhsKind::fisher
                                                  : ntz::RhsKind::gelfand_bratu;
    std::vector<double> start;
    if (u0 != nullptr) start.assign(u0, u0 + spec->spec.n);
    const ntz::FixedPointReport r = ntz::fixed_point_solve(
        {spec->spec, length, k, rk, c_hat}, std::move(start), tol, max_iter);
    report->iterations = r.iterations;
    report->converged = r.converged ? 1 : 0;
    report->range_warning = r.range_warning ? 1 : 0;
    report->numerical_rate = r.numerical_rate;
    report->expected_rate = r.expected_rate;
    report->lipschitz = r.lipschitz;
    report->ratio_count = static_cast<long>(r.ratios.size());
    if (solution != nullptr)
      std::memcpy(solution, r.solution.data(), r.solution.size() * sizeof(double));
    if (ratios != nullptr && ratios_cap > 0) {
      const size_t count =
          std::min(static_cast<size_t>(ratios_cap), r.ratios.size());
      std::memcpy(ratios, r.ratios.data(), count * sizeof(double));
    }
  });
}

}  // extern "C"
