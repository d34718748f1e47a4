#include "dgc/polygcd.hpp"

#include <unordered_map>

namespace dgc {

namespace {

// leading coefficient in the grlex order
const Int& lead_coeff(const IntPoly& f) {
  static const Int zero = 0;
  return f.is_zero() ? zero : f.terms().begin()->second;
}

IntPoly positive_primitive(const IntPoly& f) {
  if (f.is_zero()) return f;
  auto [c, p] = content_and_primitive(f);
  if (lead_coeff(p) < 0) return -p;
  return p;
}

// coefficient of var^k as a polynomial of degree 0 in var
IntPoly coeff_of_power(const IntPoly& f, int var, int k) {
  IntPoly r(f.nvars());
  Exps e2;
  for (const auto& [e, c] : f.terms()) {
    if (e[var] != k) continue;
    e2 = e;
    e2[var] = 0;
    r.add_term(e2, c);
  }
  return r;
}

IntPoly times_var_power(const IntPoly& f, int var, int k) {
  IntPoly r(f.nvars());
  Exps e2;
  for (const auto& [e, c] : f.terms()) {
    e2 = e;
    e2[var] += k;
    r.add_term(e2, c);
  }
  return r;
}

// pseudo-remainder of f by g with respect to var; exact over Z
IntPoly prem(IntPoly r, const IntPoly& g, int var) {
  int dg = g.degree_in(var);
  IntPoly lcg = coeff_of_power(g, var, dg);
  while (!r.is_zero()) {
    int dr = r.degree_in(var);
    if (dr < dg) break;
    IntPoly lcr = coeff_of_power(r, var, dr);
    r = lcg * r - times_var_power(lcr * g, var, dr - dg);
  }
  return r;
}

// content of f as a univariate polynomial in var (gcd of its coefficients)
IntPoly content_in_var(const IntPoly& f, int var) {
  IntPoly c(f.nvars());
  for (int k = 0; k <= f.degree_in(var); ++k) {
    IntPoly ck = coeff_of_power(f, var, k);
    if (ck.is_zero()) continue;
    c = poly_gcd(c, ck);
    if (c.is_constant() && lead_coeff(c) == 1) break;
  }
  return c;
}

IntPoly divide_exact(const IntPoly& f, const IntPoly& g) {
  IntPoly q;
  if (!poly_divides(g, f, &q)) throw Error("internal: expected exact division");
  // fix the sign lost to primitivity: primitive(g) * q = +-primitive(f)
  auto fp = positive_primitive(f);
  auto [cg, gp] = g.is_zero() ? std::pair<Int, IntPoly>{1, g} : content_and_primitive(g);
  if (!(gp * q == fp) && !((gp * q) == -fp)) throw Error("internal: division inconsistency");
  return q;
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return positive_primitive(b);
  if (b.is_zero()) return positive_primitive(a);
  if (a.nvars() != b.nvars()) throw Error("variable count mismatch");

  int var = -1;  // highest variable occurring in either
  for (int i = a.nvars() - 1; i >= 0; --i)
    if (a.degree_in(i) > 0 || b.degree_in(i) > 0) {
      var = i;
      break;
    }
  if (var < 0) {  // both constant
    Int g = gcd(lead_coeff(a), lead_coeff(b));
    if (g < 0) g = -g;
    return IntPoly::constant(a.nvars(), g);
  }

  IntPoly ca = content_in_var(a, var), cb = content_in_var(b, var);
  IntPoly f = divide_exact(a, ca), g = divide_exact(b, cb);
  if (f.degree_in(var) < g.degree_in(var)) std::swap(f, g);

  while (true) {
    if (g.is_zero()) break;
    if (g.degree_in(var) == 0) {
      // coprime in var: the gcd is carried entirely by the contents
      f = IntPoly::constant(a.nvars(), 1);
      g = IntPoly::zero(a.nvars());
      break;
    }
    IntPoly r = prem(f, g, var);
    f = g;
    g = r.is_zero() ? r : divide_exact(r, content_in_var(r, var));
  }
  IntPoly result = poly_gcd(ca, cb) * positive_primitive(f);
  return lead_coeff(result) < 0 ? -result : result;
}

bool is_squarefree(const IntPoly& f) {
  if (f.is_zero()) throw Error("squarefree test on zero polynomial");
  IntPoly g = f;
  for (int i = 0; i < f.nvars(); ++i) g = poly_gcd(g, f.derivative(i));
  return g.total_degree() == 0;
}

IntPoly squarefree_part(const IntPoly& f) {
  if (f.is_zero()) throw Error("squarefree part of zero polynomial");
  IntPoly g = f;
  for (int i = 0; i < f.nvars(); ++i) g = poly_gcd(g, f.derivative(i));
  IntPoly q;
  if (!poly_divides(g, f, &q)) throw Error("internal: gcd does not divide");
  return lead_coeff(q) < 0 ? -q : q;
}

bool poly_divides(const IntPoly& g, const IntPoly& f, IntPoly* quotient) {
  if (g.nvars() != f.nvars()) throw Error("variable count mismatch");
  if (g.is_zero()) {
    if (quotient) *quotient = IntPoly::zero(f.nvars());
    return f.is_zero();
  }
  if (f.is_zero()) {
    if (quotient) *quotient = IntPoly::zero(f.nvars());
    return true;
  }
  IntPoly gp = positive_primitive(g);
  IntPoly r = positive_primitive(f);
  const Int c = lead_coeff(gp);
  const Exps& ge = gp.terms().begin()->first;
  IntPoly q(f.nvars());
  Exps delta(f.nvars());
  while (!r.is_zero()) {
    const auto& [re, rc] = *r.terms().begin();
    for (int i = 0; i < f.nvars(); ++i) {
      delta[i] = re[i] - ge[i];
      if (delta[i] < 0) return false;
    }
    IntPoly t = IntPoly::monomial(delta, rc);
    q = q * c + t;
    r = r * c - t * gp;
  }
  if (quotient) {
    if (q.is_zero()) *quotient = q;
    else *quotient = content_and_primitive(q).second;
  }
  return true;
}

std::vector<IntPoly> coeffs_in_var(const IntPoly& f, int var) {
  int d = f.degree_in(var);
  if (d < 0) return {};
  std::vector<IntPoly> cs;
  cs.reserve(d + 1);
  for (int k = 0; k <= d; ++k) cs.push_back(coeff_of_power(f, var, k));
  return cs;
}

IntPoly from_coeffs_in_var(const std::vector<IntPoly>& cs, int var, int nvars) {
  IntPoly r(nvars);
  for (int k = 0; k < (int)cs.size(); ++k) {
    if (cs[k].is_zero()) continue;
    r += times_var_power(cs[k], var, k);
  }
  return r;
}

IntPoly poly_det(const std::vector<std::vector<IntPoly>>& m) {
  int n = (int)m.size();
  if (n == 0) throw Error("empty matrix");
  for (const auto& row : m)
    if ((int)row.size() != n) throw Error("matrix not square");
  int nv = m[0][0].nvars();
  std::unordered_map<unsigned, IntPoly> memo;
  // det of the submatrix on rows [n - popcount(mask), n) and columns in mask
  auto rec = [&](auto&& self, unsigned mask) -> IntPoly {
    if (mask == 0) return IntPoly::constant(nv, 1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int k = __builtin_popcount(mask);
    int row = n - k;
    IntPoly acc(nv);
    int sign = 1;
    for (int col = 0; col < n; ++col) {
      if (!(mask & (1u << col))) continue;
      if (!m[row][col].is_zero()) {
        IntPoly sub = self(self, mask & ~(1u << col));
        IntPoly t = m[row][col] * sub;
        if (sign < 0) acc -= t;
        else acc += t;
      }
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  if (n > 20) throw Error("poly_det size cap exceeded");
  return rec(rec, (1u << n) - 1);
}

IntPoly resultant_in_var(const IntPoly& f, const IntPoly& g, int var) {
  if (f.nvars() != g.nvars()) throw Error("variable count mismatch");
  int nv = f.nvars();
  if (f.is_zero() || g.is_zero()) return IntPoly::zero(nv);
  int m = f.degree_in(var), n = g.degree_in(var);
  if (m == 0 && n == 0) return IntPoly::constant(nv, 1);
  if (m == 0) return f.pow(n);
  if (n == 0) return g.pow(m);
  auto fc = coeffs_in_var(f, var), gc = coeffs_in_var(g, var);
  int size = m + n;
  std::vector<std::vector<IntPoly>> s(size, std::vector<IntPoly>(size, IntPoly::zero(nv)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s[i][i + (m - k)] = fc[k];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s[n + i][i + (n - k)] = gc[k];
  return poly_det(s);
}

}  // namespace dgc
