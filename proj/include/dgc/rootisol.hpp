#pragma once

#include <vector>

#include "dgc/common.hpp"

namespace dgc {

// All integer roots of a nonzero univariate integer polynomial inside
// [lo, hi], ascending, without multiplicity.  coeffs[k] is the coefficient
// of y^k.  Exact: no floating point is involved; roots are bracketed by a
// derivative-chain cell subdivision and confirmed by evaluation.
std::vector<long long> integer_roots_in(const std::vector<Int>& coeffs, long long lo,
                                        long long hi);

// Same, for callers that already hold 128-bit coefficients and guarantee
// (degree+1) * degree! * max|coeff| * max(|lo|,|hi|)^degree < 2^126.
std::vector<long long> integer_roots_in_i128(const std::vector<__int128>& coeffs, long long lo,
                                             long long hi);

}  // namespace dgc
