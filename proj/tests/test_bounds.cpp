#include <cmath>
#include <vector>

#include "core/bounds.hpp"
#include "core/inverse.hpp"
#include "core/spectral.hpp"
#include "doctest.h"

using namespace ntz;

TEST_CASE("bound case selection covers both signs of b") {
  CHECK(inf_norm_upper_bound({20, 4.0, 4.0}).case_id == BoundCase::pos_gt);
  CHECK(inf_norm_upper_bound({12, 2.5, 1.5}).case_id == BoundCase::pos_eq);
  CHECK(inf_norm_upper_bound({12, 4.0, 1.7}).case_id == BoundCase::pos_mid);
  CHECK(inf_norm_upper_bound({12, 4.0, 0.5}).case_id == BoundCase::pos_sub);
  CHECK(inf_norm_upper_bound({50, -4.0, -4.0}).case_id == BoundCase::neg_lt);
  CHECK(inf_norm_upper_bound({12, -4.0, -3.0}).case_id == BoundCase::neg_eq);
  CHECK(inf_norm_upper_bound({12, -4.0, -1.7}).case_id == BoundCase::neg_mid);
  CHECK(inf_norm_upper_bound({12, -4.0, 0.5}).case_id == BoundCase::neg_sup);
}

TEST_CASE("bound values at frozen points") {
  const BoundReport wide = inf_norm_upper_bound({20, 4.0, 4.0});
  CHECK(wide.bound == doctest::Approx(0.49999925).epsilon(1e-6));
  CHECK(wide.bound < 0.5);

  const BoundReport flat = inf_norm_upper_bound({12, 2.5, 1.5});
  CHECK(flat.bound == 2.0);

  const BoundReport mirror = inf_norm_upper_bound({50, -4.0, -4.0});
  CHECK(mirror.bound == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("negative-side bounds equal their positive-domain counterparts") {
  for (long n : {5L, 12L, 27L}) {
    for (double bp : {2.5, 4.0, 10.0}) {
      for (double btp : {bp - 0.3, bp - 1.0, 1.3, 0.4, -2.0}) {
        const MatrixSpec pos{n, bp, btp};
        const MatrixSpec neg{n, -bp, -btp};
        if (!is_nonsingular(pos, 0.05)) continue;
        const BoundReport a = inf_norm_upper_bound(pos);
        const BoundReport c = inf_norm_upper_bound(neg);
        CHECK(c.bound == doctest::Approx(a.bound).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("bound dominates the exact norm on a sweep") {
  for (double b : {2.1, 2.5, 3.0, 4.0, 10.0, -2.1, -3.0, -10.0}) {
    for (long n : {3L, 7L, 19L, 41L}) {
      for (double t = -3.9; t <= 4.0; t += 0.41) {
        const MatrixSpec spec{n, b, t};
        if (!is_nonsingular(spec, 0.05)) continue;
        const double exact = infinity_norm_exact(spec);
        const double bound = inf_norm_upper_bound(spec).bound;
        CHECK(bound - exact >= -1e-9 * std::fmax(1.0, exact));
      }
    }
  }
}

TEST_CASE("interval text is attached to the report") {
  CHECK(inf_norm_upper_bound({12, 2.5, 1.5}).interval == "b > 2, btilde = b - 1");
  CHECK(inf_norm_upper_bound({12, -4.0, 0.5}).interval == "b < -2, btilde > -1");
  CHECK(std::string(to_string(BoundCase::pos_mid)) == "pos_mid");
}

TEST_CASE("bound refuses singular corner values") {
  const SingularThresholds t = singular_thresholds({9, 3.0, 0.0});
  try {
    inf_norm_upper_bound({9, 3.0, t.b1});
    FAIL("expected singular_matrix");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::singular_matrix);
  }
}

TEST_CASE("rowsum bounds at frozen points") {
  const RowsumBounds flat = rowsum_bounds({5, 2.5, 1.5});
  CHECK(flat.case_id == BoundCase::pos_eq);
  CHECK(flat.lower == 2.0);
  CHECK(flat.upper == 2.0);

  const RowsumBounds above = rowsum_bounds({5, 4.0, 5.0});
  CHECK(above.case_id == BoundCase::pos_gt);
  CHECK(above.lower == doctest::Approx(0.25).epsilon(1e-15));

  const RowsumBounds mid = rowsum_bounds({5, 4.0, 1.0});
  CHECK(mid.case_id == BoundCase::pos_mid);
  CHECK(mid.upper == doctest::Approx(2.5).epsilon(1e-15));
}

TEST_CASE("rowsum bounds sandwich the true rowsums") {
  for (double b : {2.5, 4.0, 10.0}) {
    for (long n : {5L, 12L, 31L}) {
      const double r2 = characteristic_roots(b).r2;
      for (double t : {b + 0.7, b - 1.0, (2.0 / b + b - 1.0) / 2.0, r2 - 0.4, r2 - 2.0}) {
        const MatrixSpec spec{n, b, t};
        if (!is_nonsingular(spec, 0.05)) continue;
        const RowsumBounds rb = rowsum_bounds(spec);
        const std::vector<double> rs = rowsums(spec);
        const double scale = std::fmax(1.0, std::fabs(rb.upper));
        for (double v : rs) {
          CHECK(v >= rb.lower - 1e-11 * scale);
          CHECK(v <= rb.upper + 1e-11 * scale);
        }
      }
    }
  }
}

TEST_CASE("rowsum bounds reject the uncovered corner intervals") {
  // between r2 and 2/b no case applies
  try {
    rowsum_bounds({5, 2.5, 0.65});
    FAIL("expected case_out_of_scope");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::case_out_of_scope);
  }
  try {
    rowsum_bounds({5, -3.0, 1.0});
    FAIL("expected case_out_of_scope");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::case_out_of_scope);
  }
}

TEST_CASE("sign pattern predictions") {
  const std::vector<int> plus = predicted_sign_pattern({4, 3.0, 2.0});
  for (int s : plus) CHECK(s == 1);

  const std::vector<int> checker = predicted_sign_pattern({4, -3.0, -2.0});
  for (long i = 0; i < 4; ++i)
    for (long j = 0; j < 4; ++j)
      CHECK(checker[static_cast<size_t>(i * 4 + j)] == ((i - j) % 2 == 0 ? -1 : 1));

  const std::vector<int> point = predicted_sign_pattern({3, 2.5, 2.5});
  for (int s : point) CHECK(s == 1);

  try {
    predicted_sign_pattern({4, 3.0, 0.5});
    FAIL("expected case_out_of_scope");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::case_out_of_scope);
  }
}

TEST_CASE("sign patterns match the actual inverse in the tight regimes") {
  for (double b : {2.5, 4.0, -2.5, -4.0}) {
    const long n = 11;
    const double t = b > 0 ? 1.0 : -1.0;
    const MatrixSpec spec{n, b, t};
    const std::vector<int> predicted = predicted_sign_pattern(spec);
    const std::vector<double> inv = inverse_dense(spec);
    for (size_t idx = 0; idx < inv.size(); ++idx) {
      CHECK(inv[idx] != 0.0);
      CHECK((inv[idx] > 0.0 ? 1 : -1) == predicted[idx]);
    }
  }
}
