#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dgc/common.hpp"
#include "dgc/intpoly.hpp"

namespace dgc {

struct InstanceRecord {
  int index = 0;
  IntPoly f;
  int degree = 0;
  Int b;
  Int count;
  int aux_m = -1;       // auxiliary-polynomial degree when one was computed
  Int bezout_bound;     // deg(f) * aux_m
  bool bezout_ok = false;
  double ratio = 0.0;   // display value; argmax selection is exact
  double shape = 0.0;   // affine bound shape at c = 1 (display value)
  bool ok = true;
  std::string note;
};

struct ExperimentReport {
  std::string experiment;
  int schema = 1;
  std::uint64_t seed = 0;  // corpus seed when the caller supplies one
  std::vector<Int> bounds;
  std::vector<InstanceRecord> records;
  int argmax = -1;         // first record attaining the maximal ratio
  double max_ratio = 0.0;
  Rat fitted_c = 0;        // surface experiment: exact max of count/(d^14 b)
  bool all_ok = true;
  bool regression_checked = false;
  bool regression_pass = true;
  std::string regression_note;
};

// Frozen re-run expectations.  argmax < 0 skips the argmax check, empty
// counts skips the per-record comparison, fitted_c = 0 skips the constant.
struct RegressionExpectation {
  int argmax = -1;
  int argmax_degree = 0;
  Int argmax_b;
  Int argmax_count;
  std::vector<Int> counts;
  Rat fitted_c = 0;
};

// Projective plane curves: per (f, b) the exact point count, an auxiliary
// polynomial certificate, and the Bezout check; the report's argmax is the
// first record maximizing count/(d^4 b^(2/d)), compared exactly.
ExperimentReport experiment_curve_bound(const std::vector<IntPoly>& corpus,
                                        const std::vector<Int>& bounds);

// Affine plane curves: per (f, b) the exact box count and the bound shape
// b^(1/d) min(d^2 log|f_d| + d^3 log b + d^4, d^4 bad(f)) / |f_d|^(1/d^2)
//   + d log b + d^4
// at c = 1; the argmax of count/(d^3 b^(1/d)(log b + d)) is certified with
// rational interval arithmetic.
ExperimentReport experiment_affine_curve_bound(const std::vector<IntPoly>& corpus,
                                               const std::vector<Int>& bounds);

// One affine surface in three variables, degree >= 5, absolutely irreducible
// top part: box counts per b and the exact fitted constant max count/(d^14 b).
ExperimentReport experiment_surface_linear(const IntPoly& f,
                                           const std::vector<Int>& bounds);

// Compares the report against frozen values and fills the regression fields.
bool check_regression(ExperimentReport& report,
                      const RegressionExpectation& expect);

}  // namespace dgc
