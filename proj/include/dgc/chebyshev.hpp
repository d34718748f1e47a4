#pragma once

#include <cstdint>

namespace dgc {

struct ChebyshevReport {
  long long x = 0;
  double theta = 0.0;     // sum of log p over primes p <= x
  bool pass = false;      // theta(x) <= 2x
  double max_ratio = 0.0; // max over 1 <= t <= x of theta(t)/t (for the sweep)
  long long argmax = 1;
};

// theta(x) <= 2x for the single value x.
ChebyshevReport chebyshev_check(long long x);

// One sieve pass checking theta(t) + margin * t <= 2t for every integer
// t <= x; reports the worst ratio theta(t)/t.
ChebyshevReport chebyshev_check_all(long long x, double margin);

}  // namespace dgc
