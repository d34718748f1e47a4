#pragma once

#include <vector>

#include "dgc/intpoly.hpp"

namespace dgc {

// gcd over Z[x_0,...]; primitive content handling makes the result exact.
// The result's leading coefficient (grlex) is positive; gcd(0,0) = 0.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// Squarefree over Q: gcd(f, all partials) is constant.  f must be nonzero.
bool is_squarefree(const IntPoly& f);

// Primitive squarefree part over Q: the product of the distinct irreducible
// factors of f, primitive with positive leading coefficient.
IntPoly squarefree_part(const IntPoly& f);

// Exact division test over Q.  When g | f the integer quotient of the
// primitive parts is produced; quotient satisfies f*k = g*quotient*m for
// constants only when requested via the primitive flag semantics below:
// divide(g, f) tests divisibility of f by g in Q[x]; quotient (if asked) is
// the exact quotient of primitive(f) by primitive(g) up to sign, scaled so
// that primitive(g)*quotient = +-primitive(f).
bool poly_divides(const IntPoly& g, const IntPoly& f, IntPoly* quotient = nullptr);

// Coefficients of f viewed as a univariate polynomial in `var`; index k holds
// the coefficient of var^k, a polynomial with the same nvars and degree 0 in
// var.  Size = degree_in(var) + 1 (empty for f = 0).
std::vector<IntPoly> coeffs_in_var(const IntPoly& f, int var);
IntPoly from_coeffs_in_var(const std::vector<IntPoly>& cs, int var, int nvars);

// Determinant of a square matrix of polynomials by Laplace expansion with
// column-subset memoization; fine for the small matrices used here.
IntPoly poly_det(const std::vector<std::vector<IntPoly>>& m);

// Resultant of f and g with respect to `var` via the Sylvester matrix.
// Result has degree 0 in var.  Zero when either input is zero.
IntPoly resultant_in_var(const IntPoly& f, const IntPoly& g, int var);

}  // namespace dgc
