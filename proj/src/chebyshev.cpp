#include "dgc/chebyshev.hpp"

#include <cmath>
#include <vector>

#include "dgc/common.hpp"

namespace dgc {

namespace {

std::vector<bool> sieve_composite(long long x) {
  std::vector<bool> comp((std::size_t)x + 1, false);
  for (long long i = 2; i * i <= x; ++i)
    if (!comp[(std::size_t)i])
      for (long long j = i * i; j <= x; j += i) comp[(std::size_t)j] = true;
  return comp;
}

}  // namespace

ChebyshevReport chebyshev_check(long long x) {
  if (x < 1) throw Error("x must be positive");
  if ((unsigned long long)x > work_limit()) throw WorkLimitError("sieve bound out of budget");
  auto comp = sieve_composite(x);
  ChebyshevReport r;
  r.x = x;
  for (long long t = 2; t <= x; ++t)
    if (!comp[(std::size_t)t]) r.theta += std::log((double)t);
  r.pass = r.theta <= 2.0 * (double)x;
  r.max_ratio = r.theta / (double)x;
  r.argmax = x;
  return r;
}

ChebyshevReport chebyshev_check_all(long long x, double margin) {
  if (x < 1) throw Error("x must be positive");
  if ((unsigned long long)x > work_limit()) throw WorkLimitError("sieve bound out of budget");
  auto comp = sieve_composite(x);
  ChebyshevReport r;
  r.x = x;
  r.pass = true;
  double theta = 0.0;
  for (long long t = 1; t <= x; ++t) {
    if (t >= 2 && !comp[(std::size_t)t]) theta += std::log((double)t);
    if (theta + margin * (double)t > 2.0 * (double)t) r.pass = false;
    double ratio = theta / (double)t;
    if (ratio > r.max_ratio) {
      r.max_ratio = ratio;
      r.argmax = t;
    }
  }
  r.theta = theta;
  return r;
}

}  // namespace dgc
