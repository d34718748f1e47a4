#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dgc/common.hpp"

namespace dgc {

// Exponent vector; its length equals the variable count of the owning
// polynomial.
using Exps = std::vector<int>;

int exps_total(const Exps& e);

// Graded lexicographic order with x0 > x1 > ..., descending.  Map iteration
// therefore starts at the leading term, which is also printing order.
struct GrlexDesc {
  bool operator()(const Exps& a, const Exps& b) const;
};

// Sparse polynomial over Z.  Invariants: no stored coefficient is zero and
// every key has length nvars.  The zero polynomial is the empty map; its
// total_degree() reports -1, standing in for degree -infinity.
class IntPoly {
 public:
  using TermMap = std::map<Exps, Int, GrlexDesc>;

  IntPoly() : nvars_(1) {}
  explicit IntPoly(int nvars);

  static IntPoly zero(int nvars) { return IntPoly(nvars); }
  static IntPoly constant(int nvars, const Int& c);
  static IntPoly variable(int nvars, int var);
  static IntPoly monomial(const Exps& e, const Int& c);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  int total_degree() const;
  int degree_in(int var) const;

  Int coeff(const Exps& e) const;
  void add_term(const Exps& e, const Int& c);

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }
  IntPoly& operator*=(const Int& c);
  friend IntPoly operator*(IntPoly a, const Int& c) { return a *= c; }
  friend IntPoly operator*(const Int& c, IntPoly a) { return a *= c; }
  bool operator==(const IntPoly& o) const;
  IntPoly pow(int k) const;

  Int eval(const std::vector<Int>& pt) const;
  IntPoly eval_partial(int var, const Int& value) const;
  IntPoly derivative(int var) const;

  // f(images[0], ..., images[nvars-1]); the images share a variable count,
  // which becomes the variable count of the result.
  IntPoly compose(const std::vector<IntPoly>& images) const;

  bool is_homogeneous() const;
  IntPoly homogenize() const;           // appends one variable
  IntPoly dehomogenize(int var) const;  // sets var = 1 and drops it
  IntPoly drop_var(int var) const;      // var must not occur in any term
  IntPoly insert_var(int pos) const;    // fresh unused variable at pos

 private:
  int nvars_;
  TermMap terms_;
};

// max |coefficient|; 0 for the zero polynomial.
Int coeff_norm(const IntPoly& f);

// f = content * primitive with content > 0; the sign stays on the primitive
// part.  Rejects the zero polynomial.
std::pair<Int, IntPoly> content_and_primitive(const IntPoly& f);

// Terms of total degree exactly k.
IntPoly degree_part(const IntPoly& f, int k);

// Text grammar: integer literals, variable names, + - * ^, parentheses;
// implicit multiplication is a syntax error; whitespace ignored.
IntPoly poly_parse(const std::string& text, const std::vector<std::string>& vars);
std::string poly_print(const IntPoly& f, const std::vector<std::string>& vars);

}  // namespace dgc
