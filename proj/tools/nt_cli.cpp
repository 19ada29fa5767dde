// Command line front end for the neartoeplitz shared library. Emits CSV
// (RFC-4180-style quoting, one fixed header per command) or newline
// delimited JSON, one object per row.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <algorithm>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "neartoeplitz/neartoeplitz.h"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitSingular = 3;

[[noreturn]] void die(int code, const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(code);
}

int exit_code_for(nt_status status) {
  return status == NT_ESINGULAR ? kExitSingular : kExitValidation;
}

void check(nt_status status, const std::string& context) {
  if (status == NT_OK) return;
  std::string detail = nt_last_error();
  die(exit_code_for(status),
      context + ": " + nt_strerror(status) + (detail.empty() ? "" : " (" + detail + ")"));
}

std::string dtos(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// One output cell; numbers stay typed so JSON rows carry real numbers.
struct Cell {
  enum class Kind { real, integer, text } kind;
  double d = 0.0;
  long i = 0;
  std::string s;

  Cell(double v) : kind(Kind::real), d(v) {}
  Cell(long v) : kind(Kind::integer), i(v) {}
  Cell(int v) : kind(Kind::integer), i(v) {}
  Cell(std::string v) : kind(Kind::text), s(std::move(v)) {}
  Cell(const char* v) : kind(Kind::text), s(v) {}
};

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
  std::string quoted = "\"";
  for (char c : raw) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

class Emitter {
 public:
  Emitter(std::ostream& os, bool json, const std::string& schema,
          std::vector<std::string> columns)
      : os_(os), json_(json), columns_(std::move(columns)) {
    if (!json_) {
      os_ << "#schema " << schema << "\n";
      for (size_t c = 0; c < columns_.size(); ++c)
        os_ << (c ? "," : "") << csv_field(columns_[c]);
      os_ << "\n";
    }
  }

  void row(const std::vector<Cell>& cells) {
    if (json_) {
      nlohmann::ordered_json obj;
      for (size_t c = 0; c < cells.size(); ++c) {
        const Cell& cell = cells[c];
        switch (cell.kind) {
          case Cell::Kind::real:
            if (std::isfinite(cell.d)) obj[columns_[c]] = cell.d;
            else obj[columns_[c]] = dtos(cell.d);
            break;
          case Cell::Kind::integer: obj[columns_[c]] = cell.i; break;
          case Cell::Kind::text: obj[columns_[c]] = cell.s; break;
        }
      }
      os_ << obj.dump() << "\n";
      return;
    }
    for (size_t c = 0; c < cells.size(); ++c) {
      const Cell& cell = cells[c];
      std::string text;
      switch (cell.kind) {
        case Cell::Kind::real: text = dtos(cell.d); break;
        case Cell::Kind::integer: text = std::to_string(cell.i); break;
        case Cell::Kind::text: text = cell.s; break;
      }
      os_ << (c ? "," : "") << csv_field(text);
    }
    os_ << "\n";
  }

 private:
  std::ostream& os_;
  bool json_;
  std::vector<std::string> columns_;
};

double env_tolerance(const char* name, double fallback) {
  const char* text = std::getenv(name);
  if (text == nullptr || *text == '\0') return fallback;
  char* end = nullptr;
  const double value = std::strtod(text, &end);
  if (end == text || *end != '\0' || !std::isfinite(value) || value < 0.0)
    die(kExitValidation, std::string(name) + " must be a nonnegative number");
  return value;
}

struct NRange {
  long lo = 0, hi = 0, step = 1;
};

NRange parse_n_range(const std::string& text) {
  NRange r;
  const size_t dots = text.find("..");
  if (dots == std::string::npos) {
    try {
      r.lo = r.hi = std::stol(text);
    } catch (...) {
      die(kExitValidation, "--n must be an integer or lo..hi[..step]");
    }
    return r;
  }
  const std::string rest = text.substr(dots + 2);
  const size_t dots2 = rest.find("..");
  try {
    r.lo = std::stol(text.substr(0, dots));
    if (dots2 == std::string::npos) {
      r.hi = std::stol(rest);
    } else {
      r.hi = std::stol(rest.substr(0, dots2));
      r.step = std::stol(rest.substr(dots2 + 2));
    }
  } catch (...) {
    die(kExitValidation, "--n must be an integer or lo..hi[..step]");
  }
  if (r.step < 1 || r.hi < r.lo)
    die(kExitValidation, "--n range must satisfy lo <= hi with step >= 1");
  return r;
}

// Uniform draw in [0, 1) with an explicit bit mapping so streams are
// reproducible across standard library implementations.
double uniform01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

struct CaseInterval {
  double lo, hi;
};

CaseInterval case_interval(const std::string& name, double b) {
  if (name == "pos_ge1") {
    if (!(b > 2.0)) die(kExitValidation, "--btilde-grid case:pos_ge1 needs b > 2");
    return {1.0, b + 2.0};
  }
  if (name == "pos_lt1") {
    if (!(b > 2.0)) die(kExitValidation, "--btilde-grid case:pos_lt1 needs b > 2");
    return {-b, 1.0};
  }
  if (name == "neg_le_m1") {
    if (!(b < -2.0)) die(kExitValidation, "--btilde-grid case:neg_le_m1 needs b < -2");
    return {b - 2.0, -1.0};
  }
  if (name == "neg_gt_m1") {
    if (!(b < -2.0)) die(kExitValidation, "--btilde-grid case:neg_gt_m1 needs b < -2");
    return {-1.0, -b + 3.0};
  }
  die(kExitValidation, "unknown case name '" + name +
                           "' (expected pos_ge1, pos_lt1, neg_le_m1, neg_gt_m1)");
}

struct SpecHandle {
  nt_spec* ptr = nullptr;
  SpecHandle(long n, double b, double btilde, const char* context) {
    check(nt_spec_create(n, b, btilde, &ptr), context);
  }
  ~SpecHandle() { nt_spec_destroy(ptr); }
  SpecHandle(const SpecHandle&) = delete;
  SpecHandle& operator=(const SpecHandle&) = delete;
};

struct DenseHandle {
  nt_dense* ptr = nullptr;
  ~DenseHandle() { nt_dense_destroy(ptr); }
};

struct Options {
  std::string n_text;
  double b = 0.0;
  double btilde = 0.0;
  bool btilde_set = false;
  std::string grid;
  std::vector<std::string> entries;
  bool verify = false;
  std::string format = "csv";
  std::string output;
  std::uint64_t seed = 12345;
  double length = 1.0;
  std::vector<double> ks;
  bool fisher_k = false;
  bool bratu = false;
  double c_hat = 1.0;
  double tol = -1.0;
  long max_iter = 500;
};

std::ofstream g_file;

std::ostream& open_output(const Options& opt) {
  if (opt.output.empty()) return std::cout;
  g_file.open(opt.output, std::ios::binary);
  if (!g_file) die(kExitValidation, "cannot open output file '" + opt.output + "'");
  return g_file;
}

void require_nonsingular_or_exit(const SpecHandle& spec, double tol) {
  int ok = 0;
  check(nt_is_nonsingular(spec.ptr, tol, &ok), "--btilde");
  if (!ok)
    die(kExitSingular, "btilde lies within " + dtos(tol) +
                           " of a singular threshold for this (n, b)");
}

long single_n(const Options& opt) {
  const NRange r = parse_n_range(opt.n_text);
  if (r.lo != r.hi) die(kExitValidation, "--n must be a single order for this command");
  return r.lo;
}

int run_inverse(const Options& opt) {
  const long n = single_n(opt);
  SpecHandle spec(n, opt.b, opt.btilde, "--n/--b/--btilde");
  require_nonsingular_or_exit(spec, env_tolerance("SINGULARITY_TOL", 1e-9));
  std::ostream& os = open_output(opt);
  Emitter out(os, opt.format == "json", "ntz.inverse.v1", {"i", "j", "value"});

  if (!opt.entries.empty()) {
    for (const std::string& text : opt.entries) {
      long i = 0, j = 0;
      if (std::sscanf(text.c_str(), "%ld,%ld", &i, &j) != 2)
        die(kExitValidation, "--entry expects i,j (got '" + text + "')");
      double value = 0.0;
      check(nt_inverse_entry(spec.ptr, i, j, &value), "--entry " + text);
      out.row({i, j, value});
    }
    return 0;
  }

  if (n > 2048)
    die(kExitValidation, "--n exceeds 2048; request specific entries with --entry");
  DenseHandle inv;
  check(nt_inverse_dense(spec.ptr, &inv.ptr), "inverse");
  const double* data = nt_dense_data(inv.ptr);
  for (long i = 1; i <= n; ++i)
    for (long j = 1; j <= n; ++j)
      out.row({i, j, data[(i - 1) * n + (j - 1)]});
  return 0;
}

int run_trace(const Options& opt) {
  const long n = single_n(opt);
  SpecHandle spec(n, opt.b, opt.btilde, "--n/--b/--btilde");
  require_nonsingular_or_exit(spec, env_tolerance("SINGULARITY_TOL", 1e-9));
  double trace = 0.0;
  check(nt_trace_inverse(spec.ptr, &trace), "trace");

  std::vector<std::string> cols = {"n", "b", "btilde", "trace"};
  if (opt.verify) {
    cols.push_back("oracle_trace");
    cols.push_back("delta");
  }
  std::ostream& os = open_output(opt);
  Emitter out(os, opt.format == "json", "ntz.trace.v1", cols);
  if (opt.verify) {
    DenseHandle oracle;
    check(nt_oracle_inverse(spec.ptr, &oracle.ptr), "--verify");
    double otrace = 0.0, onorm = 0.0;
    check(nt_dense_summary(oracle.ptr, &otrace, nullptr, &onorm), "--verify");
    out.row({n, opt.b, opt.btilde, trace, otrace, std::fabs(trace - otrace)});
  } else {
    out.row({n, opt.b, opt.btilde, trace});
  }
  return 0;
}

int run_rowsums(const Options& opt) {
  const long n = single_n(opt);
  SpecHandle spec(n, opt.b, opt.btilde, "--n/--b/--btilde");
  require_nonsingular_or_exit(spec, env_tolerance("SINGULARITY_TOL", 1e-9));
  std::vector<double> sums(static_cast<size_t>(n));
  check(nt_rowsums(spec.ptr, sums.data()), "rowsums");

  std::vector<std::string> cols = {"i", "rowsum"};
  if (opt.verify) {
    cols.push_back("oracle_rowsum");
    cols.push_back("delta");
  }
  std::ostream& os = open_output(opt);
  Emitter out(os, opt.format == "json", "ntz.rowsums.v1", cols);
  if (opt.verify) {
    DenseHandle oracle;
    check(nt_oracle_inverse(spec.ptr, &oracle.ptr), "--verify");
    std::vector<double> osums(static_cast<size_t>(n));
    double otrace = 0.0, onorm = 0.0;
    check(nt_dense_summary(oracle.ptr, &otrace, osums.data(), &onorm), "--verify");
    for (long i = 1; i <= n; ++i) {
      const double v = sums[static_cast<size_t>(i - 1)];
      const double o = osums[static_cast<size_t>(i - 1)];
      out.row({i, v, o, std::fabs(v - o)});
    }
  } else {
    for (long i = 1; i <= n; ++i) out.row({i, sums[static_cast<size_t>(i - 1)]});
  }
  return 0;
}

int run_bounds(const Options& opt) {
  const long n = single_n(opt);
  SpecHandle spec(n, opt.b, opt.btilde, "--n/--b/--btilde");
  double bound = 0.0;
  nt_bound_case case_id = NT_BOUND_POS_GT;
  check(nt_norm_bound(spec.ptr, &bound, &case_id), "bounds");
  std::ostream& os = open_output(opt);
  Emitter out(os, opt.format == "json", "ntz.bounds.v1",
              {"n", "b", "btilde", "case", "bound", "interval"});
  out.row({n, opt.b, opt.btilde, nt_bound_case_name(case_id), bound,
           nt_bound_case_interval(case_id)});
  return 0;
}

int run_compare(const Options& opt) {
  const NRange range = parse_n_range(opt.n_text);
  if (!opt.btilde_set && opt.grid.empty())
    die(kExitValidation, "compare needs --btilde or --btilde-grid");

  std::string case_name;
  if (!opt.grid.empty()) {
    if (opt.grid.rfind("case:", 0) != 0)
      die(kExitValidation, "--btilde-grid expects case:<name>");
    case_name = opt.grid.substr(5);
    case_interval(case_name, opt.b);  // validates the name against b
  }

  const double sing_tol = env_tolerance("SINGULARITY_TOL", 1e-9);
  const double exclusion = std::max(sing_tol, 1e-3);
  std::mt19937_64 eng(opt.seed);

  std::ostream& os = open_output(opt);
  Emitter out(os, opt.format == "json", "ntz.compare.v1",
              {"n", "b", "btilde", "exact_norm", "bound", "gap", "log10_gap"});

  for (long n = range.lo; n <= range.hi; n += range.step) {
    double btilde = opt.btilde;
    if (!case_name.empty()) {
      const CaseInterval iv = case_interval(case_name, opt.b);
      SpecHandle probe(n, opt.b, 0.0, "--n/--b");
      double t1 = 0.0, t2 = 0.0;
      check(nt_singular_thresholds(probe.ptr, &t1, &t2), "thresholds");
      int attempts = 0;
      do {
        btilde = iv.lo + uniform01(eng) * (iv.hi - iv.lo);
        if (++attempts > 100)
          die(kExitValidation, "could not sample btilde away from singular thresholds");
      } while (std::fabs(btilde - t1) < exclusion || std::fabs(btilde - t2) < exclusion);
    }

    SpecHandle spec(n, opt.b, btilde, "--n/--b/--btilde");
    require_nonsingular_or_exit(spec, sing_tol);
    double exact = 0.0, bound = 0.0;
    nt_bound_case case_id = NT_BOUND_POS_GT;
    check(nt_infinity_norm(spec.ptr, &exact), "exact norm");
    check(nt_norm_bound(spec.ptr, &bound, &case_id), "bound");
    const double gap = bound - exact;
    const double lg = gap > 0.0 ? std::log10(gap)
                                : -std::numeric_limits<double>::infinity();
    out.row({n, opt.b, btilde, exact, bound, gap, lg});
  }
  return 0;
}

int run_fisher(const Options& opt) {
  const long n = single_n(opt);
  if (opt.ks.empty()) die(kExitValidation, "--k needs at least one coefficient");
  if (opt.fisher_k && opt.bratu)
    die(kExitValidation, "--fisher-k and --bratu are mutually exclusive");
  SpecHandle spec(n, opt.b, opt.btilde, "--n/--b/--btilde");
  require_nonsingular_or_exit(spec, env_tolerance("SINGULARITY_TOL", 1e-9));
  const double tol = opt.tol > 0.0 ? opt.tol : env_tolerance("SOLVE_TOL", 1e-8);
  const nt_rhs_kind kind = opt.bratu ? NT_RHS_GELFAND_BRATU : NT_RHS_FISHER;

  std::ostream& os = open_output(opt);
  Emitter out(os, opt.format == "json", "ntz.fisher.v1",
              {"k", "iterations", "numerical_rate", "expected_rate"});
  for (double k : opt.ks) {
    nt_fixed_point_report report{};
    check(nt_fixed_point_solve(spec.ptr, opt.length, k, kind, opt.c_hat, nullptr,
                               tol, opt.max_iter, nullptr, nullptr, 0, &report),
          "--k " + dtos(k));
    out.row({k, report.iterations, report.numerical_rate, report.expected_rate});
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"near-Toeplitz tridiagonal inverse toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool btilde_required) {
    sub->add_option("--n", opt.n_text, "matrix order (or lo..hi[..step] for compare)")
        ->required();
    sub->add_option("--b", opt.b, "interior diagonal value, |b| > 2")->required();
    auto* bt = sub->add_option("--btilde", opt.btilde, "corner diagonal value");
    if (btilde_required) bt->required();
    else bt->each([&](const std::string&) { opt.btilde_set = true; });
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--output", opt.output, "output path (default stdout)");
    return bt;
  };

  CLI::App* inverse = app.add_subcommand("inverse", "inverse entries, closed form");
  add_common(inverse, true);
  inverse->add_option("--entry", opt.entries, "entry as i,j (repeatable)");

  CLI::App* trace = app.add_subcommand("trace", "trace of the inverse");
  add_common(trace, true);
  trace->add_flag("--verify", opt.verify, "append dense-elimination deltas");

  CLI::App* rowsums = app.add_subcommand("rowsums", "signed rowsums of the inverse");
  add_common(rowsums, true);
  rowsums->add_flag("--verify", opt.verify, "append dense-elimination deltas");

  CLI::App* bounds = app.add_subcommand("bounds", "closed-form norm bound report");
  add_common(bounds, true);

  CLI::App* compare = app.add_subcommand("compare", "bound vs exact norm sweep");
  add_common(compare, false);
  compare->add_option("--btilde-grid", opt.grid,
                      "case:<pos_ge1|pos_lt1|neg_le_m1|neg_gt_m1> seeded draw");
  compare->add_option("--seed", opt.seed, "seed for the btilde draws")
      ->capture_default_str();

  CLI::App* fisher = app.add_subcommand("fisher", "fixed-point rate experiments");
  add_common(fisher, true);
  fisher->add_option("--L", opt.length, "interval length")->capture_default_str();
  fisher->add_option("--k", opt.ks, "source coefficients")
      ->required()
      ->delimiter(',');
  fisher->add_flag("--fisher-k", opt.fisher_k,
                   "logistic source k u (1 - u) across the --k ladder (default)");
  fisher->add_flag("--bratu", opt.bratu, "exponential source k exp(u) instead");
  fisher->add_option("--tol", opt.tol, "step tolerance (default SOLVE_TOL or 1e-8)");
  fisher->add_option("--max-iter", opt.max_iter, "sweep cap")->capture_default_str();
  fisher->add_option("--c-hat", opt.c_hat, "system scale factor")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  if (inverse->parsed()) return run_inverse(opt);
  if (trace->parsed()) return run_trace(opt);
  if (rowsums->parsed()) return run_rowsums(opt);
  if (bounds->parsed()) return run_bounds(opt);
  if (compare->parsed()) return run_compare(opt);
  if (fisher->parsed()) return run_fisher(opt);
  return kExitValidation;
}
