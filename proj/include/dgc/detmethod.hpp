#pragma once

// Local combinatorics of a hypersurface singularity (graded dimensions of the
// tangent-cone quotient, weight sequences, their partial sums) and the p-adic
// divisibility certificate for determinants of monomials evaluated at points
// sharing a reduction.

#include <cstdint>
#include <vector>

#include "dgc/intpoly.hpp"
#include "dgc/points.hpp"

namespace dgc {

// Exact g(k) for a point of multiplicity mu on a hypersurface of dimension n:
// g(0) = 1, g(k) = C(n+k, n) for k < mu, C(n+k, n) - C(n+k-mu, n) for k >= mu.
Int stalk_hilbert(int n, int mu, int k);

struct StalkProfile {
  int n = 1;
  int mu = 1;

  Int g(int k) const { return stalk_hilbert(n, mu, k); }
  // n_1 <= n_2 <= ...: each m >= 0 occurs g(m) times; weight(i) is 1-based
  long long weight(long long i) const;
  // A(s) = n_1 + ... + n_s
  long long partial_sum(long long s) const;
};

struct WeightSumReport {
  int n, mu;
  long long s;
  long long a_s;
  double main_term;  // (n!/mu)^{1/n} * n/(n+1) * s^{1+1/n}
  double defect;     // main_term - a_s
};

WeightSumReport weight_partial_sum(int n, int mu, long long s);

struct DeterminantInstance {
  std::int64_t p = 2;
  IntPoly f;                       // homogeneous hypersurface, nvars = n + 2
  std::vector<ProjPoint> points;   // primitive, on f = 0, one common reduction
  std::vector<IntPoly> monomials;  // s homogeneous forms
  Int det_value;                   // filled by verification
  long long predicted_exponent = 0;
};

struct PadicCheckResult {
  bool pass = false;
  Int det_value;
  bool det_zero = false;
  long long vp = 0;  // meaningless when det_zero
  long long a_s = 0;
  int mu = 0;
};

// Multiplicity of the reduction of f at the F_p-point pbar (projective,
// not all coordinates divisible by p): translate pbar to the origin of the
// first affine chart with nonzero coordinate, take the order of vanishing.
int point_multiplicity_mod_p(const IntPoly& f, std::int64_t p,
                             const std::vector<Int>& pbar);

// Checks v_p(det F_i(xi_j)) >= A(s) with A from the stalk profile at the
// common reduction point.  Delta = 0 passes.  Errors when the points do not
// share a reduction or some point misses f = 0.  Fills inst.det_value and
// inst.predicted_exponent.
PadicCheckResult verify_padic_divisibility(DeterminantInstance& inst);

struct ReductionStats {
  std::int64_t p = 2;
  Int n_p = 0;  // F_p-points counted with multiplicity
  bool geometrically_integral = false;
};

// Full scan of P^2(F_p) for a plane projective curve; multiplicity summed at
// each point.  The integrality flag certifies via the differential-system
// corank (a corank of 1 is conclusive in any characteristic; otherwise the
// curve is reported non-integral, exact for p above the criterion's validity
// bound (2 deg_x - 1) deg_y of the dehomogenized reduction).
ReductionStats reduction_stats(const IntPoly& f, std::int64_t p);

}  // namespace dgc
