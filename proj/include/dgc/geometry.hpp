#pragma once

#include <vector>

#include "dgc/intpoly.hpp"
#include "dgc/linalg.hpp"
#include "dgc/points.hpp"

namespace dgc {

// Independent integer linear equations a x = 0: s = rows(a) equations in
// r = cols(a) variables with r > s.
struct LinearSystem {
  MatI a;
};

// Largest |entry| of the system, at least 1.
Int system_entry_bound(const LinearSystem& sys);

// First integer vector that satisfies equations 2..s exactly and violates
// equation 1, ordered by (max-norm, nonzero count, coordinate values in the
// order 0, 1, -1, 2, -2, ... compared from the last variable backwards).
// One always exists with |x_i| <= sqrt((s-1)! r) B^(s-1); exhausting that
// box is an internal error.
std::vector<Int> small_violating_solution(const LinearSystem& sys);

// All maximal minors of the k x (n+1) coordinate matrix of the points,
// column subsets in ascending lexicographic order, normalized to gcd 1 with
// the first nonzero minor positive.  Rejects dependent points.
std::vector<Int> pluecker(const std::vector<ProjPoint>& points);

// Linear projection of P^n away from the span of `centers` onto the linear
// subspace cut out by `forms`.  Invariants: forms[i](centers[j]) = 0 for
// i != j and forms[i](centers[i]) != 0; |coefficient| <= b2 throughout.
// inflation = (n-m) ((n+1) b1 b2)^(n-m-1) caps the height growth of images.
struct ProjectionSetup {
  int n = 3;
  int m = 1;
  std::vector<ProjPoint> centers;
  std::vector<std::vector<Int>> forms;
  Int b1;
  Int b2;
  Int inflation;
};

struct ProjectedPoint {
  ProjPoint image;
  Int height_in;
  Int height_out;
  Int cap;  // inflation * height_in; height_out <= cap always holds
};

// Image of P under the projection, canononicalized.  P inside the center
// span is an error; exceeding the height cap is an internal error.
ProjectedPoint project_point(const ProjectionSetup& setup, const ProjPoint& P);

struct ProjectionResult {
  ProjectionSetup setup;
  IntPoly image;    // plane curve in the 3 coordinates of {x_j = 0}
  int dropped_var;  // j
  int degree;       // = declared d on success
  Int center_height;
  long long tried = 0;
};

// Searches P^3 for a center of projection for the degree-d curve cut out by
// the two generators: candidates ascend by (height, lex); a candidate is
// accepted when it lies off the curve and the projected image, computed by
// resultant elimination along the pencil of lines through the candidate, is
// an absolutely irreducible plane curve of degree exactly d (degree
// preservation certifies the projection is birational).  height_cap = 0
// means the guaranteed cap 4 d^2.  Exhaustion reports the rejection
// diagnostics; reducible input can never satisfy the image test.
ProjectionResult find_projection_center(const std::vector<IntPoly>& gens, int d,
                                        const Int& height_cap = 0);

struct NormalizationResult {
  std::vector<Int> shift;  // a_0..a_n, entries in [0, d]
  IntPoly image;           // f(x_0 + a_0 x_last, ..., x_n + a_n x_last, x_last)
  Int lead;                // x_last^d coefficient of image
  Int norm_in;
  Int norm_out;
};

// Unimodular shift making the x_last^d coefficient large: the first shift
// vector in row-major order over [0, d]^(n+1) with
// 3^((n+1)d) |f(a, 1)| >= max |coefficient of f| is taken.  Also checks the
// growth bound norm_out <= C(n+d+1, n+1) d^(n+1) norm_in.
NormalizationResult normalize_leading_coeff(const IntPoly& f, int d);

struct AffineReduction {
  IntPoly plane_curve;  // 2 variables
  std::vector<Int> direction;
  int dropped_var;
  int degree;  // = declared d
  Int inflation;
  Int bound;
  Int count_space;
  Int count_plane;
  Int collision_allowance;  // d^2
  bool relation_holds;      // count_space <= count_plane + d^2
};

// Projects the degree-d space curve cut out by the two generators in A^3
// along a direction v with (0 : v) off the projective closure, scaling the
// plane by v_j to keep integer points integral.  The returned report
// verifies count_space(B) <= count_plane(inflation B) + d^2 by exhaustive
// counting.  A generator that is exactly a coordinate takes the planar fast
// path with inflation 1.  Directions ascend by (height, lex) up to
// height_cap (0 = the guaranteed cap 4 d^2); exhaustion is an error.
AffineReduction affine_reduce_curve(const std::vector<IntPoly>& gens, int d, const Int& B,
                                    const Int& height_cap = 0);

}  // namespace dgc
