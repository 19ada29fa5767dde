#pragma once

#include <string>
#include <vector>

#include "core/matrix_spec.hpp"

namespace ntz {

// Case labels for the closed-form infinity-norm bounds and the rowsum
// sandwich. pos_* cases cover b > 2, neg_* cases cover b < -2; the second
// component encodes where the corner value sits relative to b -+ 1.
enum class BoundCase {
  pos_gt,   // b > 2,  b_tilde > b - 1
  pos_eq,   // b > 2,  b_tilde = b - 1
  pos_mid,  // b > 2,  1 <= b_tilde < b - 1
  pos_sub,  // b > 2,  b_tilde < 1
  neg_lt,   // b < -2, b_tilde < b + 1
  neg_eq,   // b < -2, b_tilde = b + 1
  neg_mid,  // b < -2, b + 1 < b_tilde <= -1
  neg_sup,  // b < -2, b_tilde > -1
};

const char* to_string(BoundCase c);

struct BoundReport {
  BoundCase case_id;
  double bound;          // upper bound on the inverse's infinity norm
  std::string interval;  // human-readable description of the case region
};

// Closed-form upper bound on the infinity norm of the inverse. Total over
// |b| > 2; the case is chosen from (b, b_tilde) alone.
BoundReport inf_norm_upper_bound(const MatrixSpec& spec);

struct RowsumBounds {
  double lower;
  double upper;
  BoundCase case_id;  // one of the pos_* labels
};

// Two-sided enclosure of every inverse rowsum, established for b > 2.
// The corner intervals not covered by any case raise case_out_of_scope.
RowsumBounds rowsum_bounds(const MatrixSpec& spec);

// Predicted entrywise sign of the inverse, row-major, values +1 / -1.
// Defined for b > 2 with b_tilde >= 1 (all positive) and for b < -2 with
// b_tilde <= -1 (checkerboard with negative diagonal).
std::vector<int> predicted_sign_pattern(const MatrixSpec& spec);

}  // namespace ntz
