#include "dgc/fppoly.hpp"

#include <algorithm>

namespace dgc {

std::int64_t pow_mod(std::int64_t a, std::uint64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  a = mod_reduce(a, p);
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  a = mod_reduce(a, p);
  if (a == 0) throw Error("inverse of zero");
  std::int64_t t = 0, t2 = 1, r = p, r2 = a;
  while (r2 != 0) {
    std::int64_t q = r / r2;
    t -= q * t2;
    std::swap(t, t2);
    r -= q * r2;
    std::swap(r, r2);
  }
  if (r != 1) throw Error("inverse does not exist (modulus not prime?)");
  return mod_reduce(t, p);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  // deterministic Miller-Rabin for 64-bit with the standard witness set
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  auto mulm = [&](std::uint64_t a, std::uint64_t b) {
    return (std::uint64_t)((unsigned __int128)a * b % n);
  };
  auto powm = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulm(r, a);
      a = mulm(a, a);
      e >>= 1;
    }
    return r;
  };
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powm(a % n, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulm(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::int64_t> primes_in(std::int64_t lo, std::int64_t hi) {
  if (hi > 100000000LL) throw Error("prime sieve range too large");
  std::vector<std::int64_t> out;
  if (hi < 2) return out;
  std::vector<bool> comp(hi + 1, false);
  for (std::int64_t i = 2; i * i <= hi; ++i)
    if (!comp[i])
      for (std::int64_t j = i * i; j <= hi; j += i) comp[j] = true;
  for (std::int64_t i = std::max<std::int64_t>(2, lo); i <= hi; ++i)
    if (!comp[i]) out.push_back(i);
  return out;
}

std::int64_t mod_reduce_big(const Int& a, std::int64_t p) {
  Int r = a % p;
  std::int64_t v = (std::int64_t)r;
  return v < 0 ? v + p : v;
}

int FpPoly::degree_in(int var) const {
  int d = terms.empty() ? -1 : 0;
  for (const auto& [e, c] : terms)
    if (e[var] > d) d = e[var];
  return d;
}

FpPoly reduce_mod_p(const IntPoly& f, std::int64_t p) {
  if (p < 2 || !is_prime_u64((std::uint64_t)p)) throw Error("modulus not prime");
  FpPoly r;
  r.nvars = f.nvars();
  r.p = p;
  for (const auto& [e, c] : f.terms()) {
    std::int64_t v = mod_reduce_big(c, p);
    if (v) r.terms.emplace(e, v);
  }
  return r;
}

IntPoly lift_fp(const FpPoly& f) {
  IntPoly r(f.nvars);
  for (const auto& [e, c] : f.terms) r.add_term(e, c);
  return r;
}

FpPoly fp_zero(int nvars, std::int64_t p) {
  FpPoly r;
  r.nvars = nvars;
  r.p = p;
  return r;
}

FpPoly fp_constant(int nvars, std::int64_t p, std::int64_t c) {
  FpPoly r = fp_zero(nvars, p);
  c = mod_reduce(c, p);
  if (c) r.terms.emplace(Exps(nvars, 0), c);
  return r;
}

void fp_add_term(FpPoly& f, const Exps& e, std::int64_t c) {
  c = mod_reduce(c, f.p);
  if (c == 0) return;
  auto [it, fresh] = f.terms.emplace(e, c);
  if (!fresh) {
    it->second = add_mod(it->second, c, f.p);
    if (it->second == 0) f.terms.erase(it);
  }
}

namespace {
void check_compat(const FpPoly& a, const FpPoly& b) {
  if (a.nvars != b.nvars || a.p != b.p) throw Error("mod-p polynomial mismatch");
}
}  // namespace

FpPoly fp_add(const FpPoly& a, const FpPoly& b) {
  check_compat(a, b);
  FpPoly r = a;
  for (const auto& [e, c] : b.terms) fp_add_term(r, e, c);
  return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b) {
  check_compat(a, b);
  FpPoly r = a;
  for (const auto& [e, c] : b.terms) fp_add_term(r, e, a.p - c);
  return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b) {
  check_compat(a, b);
  FpPoly r = fp_zero(a.nvars, a.p);
  Exps e(a.nvars);
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      for (int i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
      fp_add_term(r, e, mul_mod(ca, cb, a.p));
    }
  return r;
}

FpPoly fp_scale(const FpPoly& a, std::int64_t c) {
  c = mod_reduce(c, a.p);
  FpPoly r = fp_zero(a.nvars, a.p);
  if (c == 0) return r;
  for (const auto& [e, v] : a.terms) r.terms.emplace(e, mul_mod(v, c, a.p));
  return r;
}

FpPoly fp_derivative(const FpPoly& f, int var) {
  FpPoly r = fp_zero(f.nvars, f.p);
  Exps e2;
  for (const auto& [e, c] : f.terms) {
    if (e[var] == 0) continue;
    e2 = e;
    e2[var] -= 1;
    fp_add_term(r, e2, mul_mod(c, e[var] % f.p, f.p));
  }
  return r;
}

std::int64_t fp_eval(const FpPoly& f, const std::vector<std::int64_t>& pt) {
  if ((int)pt.size() != f.nvars) throw Error("point length mismatch");
  std::int64_t s = 0;
  for (const auto& [e, c] : f.terms) {
    std::int64_t t = c;
    for (int i = 0; i < f.nvars; ++i)
      if (e[i]) t = mul_mod(t, pow_mod(pt[i], e[i], f.p), f.p);
    s = add_mod(s, t, f.p);
  }
  return s;
}

FpPoly fp_eval_partial(const FpPoly& f, int var, std::int64_t value) {
  FpPoly r = fp_zero(f.nvars, f.p);
  value = mod_reduce(value, f.p);
  Exps e2;
  for (const auto& [e, c] : f.terms) {
    e2 = e;
    e2[var] = 0;
    fp_add_term(r, e2, mul_mod(c, pow_mod(value, e[var], f.p), f.p));
  }
  return r;
}

FpPoly fp_shift_var(const FpPoly& f, int var, std::int64_t c) {
  c = mod_reduce(c, f.p);
  if (c == 0) return f;
  FpPoly r = fp_zero(f.nvars, f.p);
  // per-term binomial expansion of (x + c)^e
  Exps e2;
  for (const auto& [e, coef] : f.terms) {
    int n = e[var];
    std::int64_t binom = 1, cpow = 1;
    for (int k = n; k >= 0; --k) {
      // binom = C(n, k), cpow = c^(n-k), walking k downward
      e2 = e;
      e2[var] = k;
      fp_add_term(r, e2, mul_mod(coef, mul_mod(binom, cpow, f.p), f.p));
      if (k > 0) {
        binom = mul_mod(binom, k % f.p, f.p);
        binom = mul_mod(binom, inv_mod((n - k + 1) % f.p, f.p), f.p);
        cpow = mul_mod(cpow, c, f.p);
      }
    }
  }
  return r;
}

namespace {

std::int64_t fp_lead_coeff(const FpPoly& f) {
  return f.is_zero() ? 0 : f.terms.begin()->second;
}

FpPoly fp_coeff_of_power(const FpPoly& f, int var, int k) {
  FpPoly r = fp_zero(f.nvars, f.p);
  Exps e2;
  for (const auto& [e, c] : f.terms) {
    if (e[var] != k) continue;
    e2 = e;
    e2[var] = 0;
    r.terms.emplace(e2, c);
  }
  return r;
}

FpPoly fp_times_var_power(const FpPoly& f, int var, int k) {
  FpPoly r = fp_zero(f.nvars, f.p);
  Exps e2;
  for (const auto& [e, c] : f.terms) {
    e2 = e;
    e2[var] += k;
    r.terms.emplace(e2, c);
  }
  return r;
}

FpPoly fp_monic(const FpPoly& f) {
  std::int64_t lc = fp_lead_coeff(f);
  if (lc == 0 || lc == 1) return f;
  return fp_scale(f, inv_mod(lc, f.p));
}

// exact division of f by a divisor that divides every coefficient structure;
// single-divisor reduction as over Z but over the field no scaling is needed
bool fp_divides(const FpPoly& g, const FpPoly& f, FpPoly* quotient) {
  if (g.is_zero()) {
    if (quotient) *quotient = fp_zero(f.nvars, f.p);
    return f.is_zero();
  }
  FpPoly r = f;
  FpPoly q = fp_zero(f.nvars, f.p);
  const Exps& ge = g.terms.begin()->first;
  std::int64_t glc_inv = inv_mod(fp_lead_coeff(g), f.p);
  Exps delta(f.nvars);
  while (!r.is_zero()) {
    const auto& [re, rc] = *r.terms.begin();
    for (int i = 0; i < f.nvars; ++i) {
      delta[i] = re[i] - ge[i];
      if (delta[i] < 0) return false;
    }
    FpPoly t = fp_zero(f.nvars, f.p);
    t.terms.emplace(delta, mul_mod(rc, glc_inv, f.p));
    fp_add_term(q, delta, mul_mod(rc, glc_inv, f.p));
    r = fp_sub(r, fp_mul(t, g));
  }
  if (quotient) *quotient = q;
  return true;
}

FpPoly fp_content_in_var(const FpPoly& f, int var) {
  FpPoly c = fp_zero(f.nvars, f.p);
  for (int k = 0; k <= f.degree_in(var); ++k) {
    FpPoly ck = fp_coeff_of_power(f, var, k);
    if (ck.is_zero()) continue;
    c = fp_gcd(c, ck);
    if (c.is_constant() && !c.is_zero()) break;
  }
  return c;
}

FpPoly fp_divide_exact(const FpPoly& f, const FpPoly& g) {
  FpPoly q;
  if (!fp_divides(g, f, &q)) throw Error("internal: expected exact mod-p division");
  return q;
}

}  // namespace

FpPoly fp_gcd(const FpPoly& a, const FpPoly& b) {
  if (a.is_zero()) return fp_monic(b);
  if (b.is_zero()) return fp_monic(a);
  check_compat(a, b);

  int var = -1;
  for (int i = a.nvars - 1; i >= 0; --i)
    if (a.degree_in(i) > 0 || b.degree_in(i) > 0) {
      var = i;
      break;
    }
  if (var < 0) return fp_constant(a.nvars, a.p, 1);

  FpPoly ca = fp_content_in_var(a, var), cb = fp_content_in_var(b, var);
  FpPoly f = fp_divide_exact(a, ca), g = fp_divide_exact(b, cb);
  if (f.degree_in(var) < g.degree_in(var)) std::swap(f, g);

  while (true) {
    if (g.is_zero()) break;
    if (g.degree_in(var) == 0) {
      f = fp_constant(a.nvars, a.p, 1);
      break;
    }
    // pseudo-remainder over the coefficient ring
    FpPoly r = f;
    int dg = g.degree_in(var);
    FpPoly lcg = fp_coeff_of_power(g, var, dg);
    while (!r.is_zero() && r.degree_in(var) >= dg) {
      int dr = r.degree_in(var);
      FpPoly lcr = fp_coeff_of_power(r, var, dr);
      r = fp_sub(fp_mul(lcg, r), fp_times_var_power(fp_mul(lcr, g), var, dr - dg));
    }
    f = g;
    g = r.is_zero() ? r : fp_divide_exact(r, fp_content_in_var(r, var));
  }
  return fp_monic(fp_mul(fp_gcd(ca, cb), fp_divide_exact(f, fp_content_in_var(f, var))));
}

bool fp_is_squarefree(const FpPoly& f) {
  if (f.is_zero()) throw Error("squarefree test on zero polynomial");
  FpPoly g = f;
  for (int i = 0; i < f.nvars; ++i) g = fp_gcd(g, fp_derivative(f, i));
  return g.is_constant() && !g.is_zero();
}

}  // namespace dgc
