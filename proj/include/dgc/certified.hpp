#pragma once

#include "dgc/common.hpp"

namespace dgc {

// Rational enclosure lo <= value <= hi used for certified comparisons of
// transcendental expressions.
struct RatInterval {
  Rat lo;
  Rat hi;
};

RatInterval interval_add(const RatInterval& a, const RatInterval& b);
RatInterval interval_scale(const Rat& c, const RatInterval& a);  // c >= 0
// Both operands must be nonnegative intervals.
RatInterval interval_mul(const RatInterval& a, const RatInterval& b);

// Natural logarithm of x >= 1 via 2 atanh((m-1)/(m+1)) after writing
// x = 2^k m with m in [1, 2); `terms` series terms per atanh evaluation.
RatInterval log_interval(const Int& x, int terms);

// k-th root of x >= 1, bisected to 2^-bits width below the integer part.
RatInterval root_interval(const Int& x, int k, int bits);

}  // namespace dgc
