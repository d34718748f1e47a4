#pragma once

#include <map>
#include <vector>

#include "dgc/intpoly.hpp"
#include "dgc/modp.hpp"

namespace dgc {

// Sparse polynomial over F_p with canonical residues in [0, p).  Same term
// conventions as IntPoly: no zero coefficients stored, grlex-descending keys.
struct FpPoly {
  int nvars = 1;
  std::int64_t p = 2;
  std::map<Exps, std::int64_t, GrlexDesc> terms;

  bool is_zero() const { return terms.empty(); }
  int total_degree() const { return terms.empty() ? -1 : exps_total(terms.begin()->first); }
  int degree_in(int var) const;
  bool is_constant() const {
    return terms.empty() || (terms.size() == 1 && exps_total(terms.begin()->first) == 0);
  }
};

FpPoly reduce_mod_p(const IntPoly& f, std::int64_t p);
IntPoly lift_fp(const FpPoly& f);  // residues as-is

FpPoly fp_zero(int nvars, std::int64_t p);
FpPoly fp_constant(int nvars, std::int64_t p, std::int64_t c);
void fp_add_term(FpPoly& f, const Exps& e, std::int64_t c);

FpPoly fp_add(const FpPoly& a, const FpPoly& b);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b);
FpPoly fp_scale(const FpPoly& a, std::int64_t c);
FpPoly fp_derivative(const FpPoly& f, int var);
std::int64_t fp_eval(const FpPoly& f, const std::vector<std::int64_t>& pt);
FpPoly fp_eval_partial(const FpPoly& f, int var, std::int64_t value);
// f(x_var + c) in place of x_var
FpPoly fp_shift_var(const FpPoly& f, int var, std::int64_t c);

// gcd over F_p[x_0,...], monic in the grlex leading coefficient.
FpPoly fp_gcd(const FpPoly& a, const FpPoly& b);
bool fp_is_squarefree(const FpPoly& f);

}  // namespace dgc
