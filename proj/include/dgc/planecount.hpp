#pragma once

#include <vector>

#include "dgc/intpoly.hpp"

namespace dgc {

// Counts of canonical projective points of height <= t on the plane curve
// F(x0, x1, x2) = 0, one count per threshold; thresholds must be ascending
// and positive.  A single scan at the largest threshold answers all of them.
//
// The scan fixes (x0, x2) and solves for integer x1 by exact root isolation,
// after a mod-m table sieve discards slices with no root modulo small primes.
// Large-height scans stay exact: slices overflowing the 128-bit budget fall
// back to arbitrary precision.
std::vector<Int> plane_curve_counts(const IntPoly& F, const std::vector<long long>& thresholds);

}  // namespace dgc
