#include "dgc/certified.hpp"

namespace dgc {

namespace {

// 2 atanh(t) = 2 (t + t^3/3 + t^5/5 + ...) for 0 <= t < 1, with the tail
// after `terms` summands bounded by 2 t^(2J+1) / ((2J+1)(1 - t^2)).
RatInterval two_atanh(const Rat& t, int terms) {
  if (t < 0 || t >= 1) throw Error("atanh argument out of range");
  Rat t2 = t * t;
  Rat power = t;
  Rat sum = 0;
  for (int j = 0; j < terms; ++j) {
    sum += power / Rat(2 * j + 1);
    power *= t2;
  }
  Rat tail = power / (Rat(2 * terms + 1) * (Rat(1) - t2));
  return RatInterval{2 * sum, 2 * (sum + tail)};
}

}  // namespace

RatInterval interval_add(const RatInterval& a, const RatInterval& b) {
  return RatInterval{a.lo + b.lo, a.hi + b.hi};
}

RatInterval interval_scale(const Rat& c, const RatInterval& a) {
  if (c < 0) throw Error("negative interval scale");
  return RatInterval{c * a.lo, c * a.hi};
}

RatInterval interval_mul(const RatInterval& a, const RatInterval& b) {
  if (a.lo < 0 || b.lo < 0) throw Error("interval product needs nonnegative operands");
  return RatInterval{a.lo * b.lo, a.hi * b.hi};
}

RatInterval log_interval(const Int& x, int terms) {
  if (x < 1) throw Error("logarithm of a value below 1");
  if (x == 1) return RatInterval{0, 0};
  unsigned k = boost::multiprecision::msb(x);  // 2^k <= x < 2^(k+1)
  Rat m = Rat(x) / Rat(Int(1) << k);
  RatInterval ln2 = two_atanh(Rat(1, 3), terms);
  RatInterval lnm = two_atanh((m - 1) / (m + 1), terms);
  return interval_add(interval_scale(Rat(k), ln2), lnm);
}

RatInterval root_interval(const Int& x, int k, int bits) {
  if (x < 1 || k < 1) throw Error("root_interval needs x >= 1, k >= 1");
  Int r = 1;
  while (pow(r + 1, unsigned(k)) <= x) ++r;  // x^(1/k) is desk-scale here
  if (pow(r, unsigned(k)) == x) return RatInterval{Rat(r), Rat(r)};
  Rat lo = Rat(r), hi = Rat(r + 1);
  for (int i = 0; i < bits; ++i) {
    Rat mid = (lo + hi) / 2;
    Rat p = mid;
    for (int j = 1; j < k; ++j) p *= mid;
    (p <= Rat(x) ? lo : hi) = mid;
  }
  return RatInterval{lo, hi};
}

}  // namespace dgc
