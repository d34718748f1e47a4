#pragma once

// Interpolation step of the point-counting argument: the minimal degree M at
// which the forms vanishing on every enumerated point of f = 0 up to height B
// strictly exceed the multiples of f, an explicit non-multiple g from the
// nullspace, and the Bezout consequence s <= deg(f) * M.

#include <vector>

#include "dgc/enumerate.hpp"
#include "dgc/intpoly.hpp"

namespace dgc {

struct AuxCertificate {
  IntPoly f;
  Int B;
  CountMode mode = CountMode::projective;
  int M = 0;
  IntPoly g;
  long long s_points = 0;
  Int bezout_bound;          // deg(f) * M
  double theory_bound = 0;   // three-term degree bound at c = 1, b_f = 1
  std::vector<AffinePoint> affine_points;
  std::vector<ProjPoint> proj_points;
};

// Plane curves only: affine mode takes bivariate f, projective mode a
// nonzero form in three variables.  f must be primitive and is rejected
// unless the (dehomogenized) curve passes the absolute-irreducibility rank
// test.  The search ascends M = 0, 1, 2, ...; at each M the success test is
// dimensional (nullity of the point-evaluation matrix > number of degree
// <= M - deg f monomial multipliers), certified by exact elimination with a
// mod-p rank prescreen for early failures.  g is the qualifying nullspace
// basis vector (integer, content 1) with the grlex-least leading monomial,
// re-verified by exact division and pointwise evaluation.
AuxCertificate aux_polynomial(const IntPoly& f, const Int& B, CountMode mode,
                              int max_degree = 200);

// s_points <= deg(f) * M for plane-curve certificates.
bool bezout_check(const AuxCertificate& cert);

// c*B^((n+1)/(n d^(1/n))) d^(4-1/n) b_f / norm_fd^((1/n)/d^(1+1/n))
//   + c d^(1-1/n) log B + c d^(4-1/n)
double walsh_degree_formula(int n, int d, double B, double norm_fd, double b_f,
                            double c);

}  // namespace dgc
