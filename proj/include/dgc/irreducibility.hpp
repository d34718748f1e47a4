#pragma once

// Absolute-irreducibility tests for bivariate polynomials, over the rationals
// and over prime fields, via the rank of the partial-differential linear
// system ("does g/f dy - h/f dx close up"), plus the Newton-polytope edge
// shortcut.  The number of absolutely irreducible factors of a squarefree f
// equals the corank of that system when the characteristic is 0 or exceeds
// (2 deg_x f - 1) deg_y f, a bound dominated by 27 deg(f)^4.

#include <utility>
#include <vector>

#include "dgc/fppoly.hpp"
#include "dgc/intpoly.hpp"
#include "dgc/linalg.hpp"

namespace dgc {

struct NewtonPolytope {
  // extreme points of the convex hull of the exponent support, in
  // counterclockwise order starting from the lexicographically least
  std::vector<std::array<int, 2>> vertices;
  // index pairs into vertices; consecutive hull edges
  std::vector<std::pair<int, int>> edges;
};

NewtonPolytope newton_polytope(const IntPoly& f);

// Differential-system matrix for squarefree bivariate f with deg_x f = m >= 1,
// deg_y f = n >= 1.  Columns: the m(n+1) coefficients of g (deg_x <= m-1,
// deg_y <= n) followed by the (m+1)n coefficients of h (deg_x <= m,
// deg_y <= n-1), each block ordered by (x-degree, y-degree).  Rows: monomials
// x^i y^j, 0 <= i <= 2m-1, 0 <= j <= 2n-1, of f*dg/dy - g*df/dy - f*dh/dx + h*df/dx.
// The prime-field variant is entrywise the reduction of the integer one
// whenever f mod p keeps both partial degrees.
MatI ruppert_matrix(const IntPoly& f);
Mat<std::int64_t> ruppert_matrix(const FpPoly& f);

// Number of absolutely irreducible factors, via corank.  Preconditions as in
// absolutely_irreducible below.
int count_absolute_factors(const IntPoly& f);
int count_absolute_factors(const FpPoly& f);

// True iff f is irreducible over the algebraic closure.  Requires f nonzero,
// nonconstant, squarefree (gcd(f, f_x, f_y) constant; throws otherwise), and
// for the prime-field overload p > 27 deg(f)^4.
bool absolutely_irreducible(const IntPoly& f);
bool absolutely_irreducible(const FpPoly& f);

// Lenient variant used when scanning reductions of an integer polynomial:
// zero, constant, and non-squarefree inputs yield false instead of an error.
// Still requires p > 27 (total_degree)^4 for the threshold passed in.
bool reduction_absolutely_irreducible(const IntPoly& f, std::int64_t p);

// Lenient predicate for a nonzero homogeneous form in three variables:
// degree-1 forms pass, a coordinate divisor or a non-squarefree or reducible
// dehomogenization fails.
bool absolutely_irreducible_form(const IntPoly& f);

// Sufficient criterion: f contains c_d x^d and c_{d'} y^{d'} with
// gcd(d, d') = 1 and every other exponent (i, i') satisfies
// i d' + i' d < d d'.  False only means "inconclusive".
bool gao_edge_criterion(const IntPoly& f);

struct BadnessReport {
  IntPoly f;
  int d = 0;                           // total degree
  Int threshold;                       // 27 d^4
  long long scan_limit = 0;            // trial-division bound for candidates
  std::vector<long long> candidate_primes;
  std::vector<long long> bad_primes;   // confirmed: > threshold, reduction not abs. irr.
  bool cofactor_unfactored = false;    // candidate minor kept a factor > scan_limit
  bool abs_irreducible = false;        // over the rationals
  double log_badness = 0.0;            // sum over bad primes of log(p)/p
  double badness = 0.0;                // exp of the above; 0 when not abs. irr.
};

// Candidate primes divide a nonzero maximal minor of the integer
// differential-system matrix, or the coefficient gcd of the extreme
// x-degree or y-degree part (degree-drop guard).  Any p > 27 d^4 whose
// reduction is not absolutely irreducible lands in the candidate set;
// confirmation reruns the rank test mod p.  Candidates are collected by
// trial division up to scan_limit.
BadnessReport bad_primes(const IntPoly& f, long long scan_limit = 100000);

// exp(sum log p / p) over the confirmed bad primes; 0 when f is not
// absolutely irreducible over the rationals.
double badness_value(const BadnessReport& report);

}  // namespace dgc
