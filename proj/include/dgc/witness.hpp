#pragma once

#include <vector>

#include "dgc/intpoly.hpp"

namespace dgc {

// Degree-d curve (hypersurface for n > 2) vanishing on an integer grid:
// x_1^d + ... + x_{n-1}^d + x_n^(d-1) plus a correction supported on the
// exponent box [0, floor((d-1)/n)]^n whose coefficients solve the
// Kronecker power of a Vandermonde system on the shifted grid
// [floor((d-1)/2n) - floor((d-1)/n), floor((d-1)/2n)]^n.
struct WitnessCurve {
  int d;
  int n;
  IntPoly f;  // primitive integer multiple of the rational solution
  Int grid_radius;  // floor((d-1)/2n): f vanishes whenever all |r_i| <= this
  Int B;            // lower-bound box: max(1, floor((d-1)/2) - floor((d-1)/4))
  Int claimed_count;
  std::vector<Rat> rational_solution;  // correction coefficients, row-major
};

// d = 1 gives the planar line x_1; d >= 2 solves the square system exactly,
// re-verifies vanishing on the whole shifted grid, and for n = 2 certifies
// absolute irreducibility through the edge criterion on (d,0)-(0,d-1).
WitnessCurve build_witness(int d, int n);

struct ProjectiveWitnessReport {
  int d;
  Int B;
  Int count;       // projective points of height <= B on the closure
  Int grid_floor;  // (floor((d-1)/2)+1)^2 + 1
  bool scaling_pass;  // (5 count)^d >= d^(2d) B^2, i.e. count >= d^2 B^(2/d) / 5
  bool grid_pass;     // count >= grid_floor; required only for d >= 3
  bool pass;
};

ProjectiveWitnessReport verify_projective_lower_bound(const WitnessCurve& w);

struct AffineWitnessReport {
  int d;
  Int B;
  Int count;        // affine points in the box [-B, B]^2
  double required;  // d^2 B^(1/d) log(B) / (4 log d), display only
  bool pass;        // certified: 4 count log d >= d^2 B^(1/d) log B
};

AffineWitnessReport verify_affine_lower_bound(const WitnessCurve& w);

}  // namespace dgc
