#include "dgc/detmethod.hpp"

#include <cmath>

#include "dgc/fppoly.hpp"
#include "dgc/irreducibility.hpp"
#include "dgc/linalg.hpp"

namespace dgc {

Int stalk_hilbert(int n, int mu, int k) {
  if (n < 1 || mu < 1 || k < 0) throw Error("stalk_hilbert requires n >= 1, mu >= 1, k >= 0");
  if (k < mu) return binomial(n + k, n);
  return binomial(n + k, n) - binomial(n + k - mu, n);
}

long long StalkProfile::weight(long long i) const {
  if (i < 1) throw Error("weights are 1-based");
  long long seen = 0;
  for (long long m = 0;; ++m) {
    Int gm = g((int)m);
    if (gm > work_limit()) throw WorkLimitError("weight index out of budget");
    seen += (long long)gm;
    if (seen >= i) return m;
  }
}

long long StalkProfile::partial_sum(long long s) const {
  if (s < 0) throw Error("partial sum needs s >= 0");
  long long total = 0, left = s;
  for (long long m = 0; left > 0; ++m) {
    Int gm = g((int)m);
    if (m > (long long)work_limit()) throw WorkLimitError("partial sum out of budget");
    long long take = (gm < left) ? (long long)gm : left;
    total += m * take;
    left -= take;
  }
  return total;
}

WeightSumReport weight_partial_sum(int n, int mu, long long s) {
  if (s < 1) throw Error("weight_partial_sum requires s >= 1");
  StalkProfile sp{n, mu};
  WeightSumReport r;
  r.n = n;
  r.mu = mu;
  r.s = s;
  r.a_s = sp.partial_sum(s);
  double fact = 1.0;
  for (int i = 2; i <= n; ++i) fact *= i;
  r.main_term = std::pow(fact / mu, 1.0 / n) * ((double)n / (n + 1)) *
                std::pow((double)s, 1.0 + 1.0 / n);
  r.defect = r.main_term - (double)r.a_s;
  return r;
}

int point_multiplicity_mod_p(const IntPoly& f, std::int64_t p, const std::vector<Int>& pbar) {
  int nv = f.nvars();
  if ((int)pbar.size() != nv) throw Error("point dimension mismatch");
  if (!f.is_homogeneous() || f.is_zero()) throw Error("nonzero homogeneous form required");
  FpPoly fp = reduce_mod_p(f, p);
  std::vector<std::int64_t> pb(nv);
  for (int i = 0; i < nv; ++i) pb[i] = mod_reduce_big(pbar[i], p);
  int chart = -1;
  for (int i = 0; i < nv; ++i)
    if (pb[i] != 0) {
      chart = i;
      break;
    }
  if (chart < 0) throw Error("reduction point has no nonzero coordinate");
  if (fp.is_zero()) throw Error("form vanishes identically mod p");
  // scale the representative so the chart coordinate is 1, dehomogenize
  // there, then translate the point to the origin
  std::int64_t inv = inv_mod(pb[chart], p);
  FpPoly local = fp_eval_partial(fp, chart, 1);
  for (int i = 0; i < nv; ++i) {
    if (i == chart) continue;
    local = fp_shift_var(local, i, mul_mod(pb[i], inv, p));
  }
  if (local.is_zero()) throw Error("form vanishes identically on the chart");
  int order = -1;
  for (const auto& [e, c] : local.terms) {
    int t = exps_total(e);
    if (order < 0 || t < order) order = t;
  }
  return order;
}

PadicCheckResult verify_padic_divisibility(DeterminantInstance& inst) {
  const std::int64_t p = inst.p;
  if (!is_prime_u64((std::uint64_t)p)) throw Error("p must be prime");
  const int nv = inst.f.nvars();
  if (nv < 3) throw Error("hypersurface needs at least 3 variables");
  if (!inst.f.is_homogeneous() || inst.f.is_zero()) throw Error("f must be a nonzero form");
  const std::size_t s = inst.points.size();
  if (s == 0 || inst.monomials.size() != s) throw Error("need |points| = |monomials| >= 1");
  for (const auto& m : inst.monomials) {
    if (m.nvars() != nv || m.is_zero() || !m.is_homogeneous())
      throw Error("monomials must be nonzero forms in the same variables");
  }

  std::vector<std::int64_t> ref;
  for (std::size_t j = 0; j < s; ++j) {
    const auto& pt = inst.points[j];
    if ((int)pt.coords.size() != nv) throw Error("point dimension mismatch");
    Int g = 0;
    for (const auto& c : pt.coords) g = gcd(g, abs(c));
    if (g != 1) throw Error("points must be primitive");
    if (inst.f.eval(pt.coords) != 0) throw Error("point not on the hypersurface");
    // canonical reduction: scale so the first nonzero coordinate is 1
    std::vector<std::int64_t> red(nv);
    for (int i = 0; i < nv; ++i) red[i] = mod_reduce_big(pt.coords[i], p);
    int lead = -1;
    for (int i = 0; i < nv && lead < 0; ++i)
      if (red[i] != 0) lead = i;
    if (lead < 0) throw Error("point reduces to zero mod p");  // unreachable: primitive
    std::int64_t inv = inv_mod(red[lead], p);
    for (int i = 0; i < nv; ++i) red[i] = mul_mod(red[i], inv, p);
    if (j == 0)
      ref = red;
    else if (red != ref)
      throw Error("points do not share a reduction mod p");
  }

  PadicCheckResult res;
  res.mu = point_multiplicity_mod_p(inst.f, p, inst.points[0].coords);

  StalkProfile sp{nv - 2, res.mu};
  res.a_s = sp.partial_sum((long long)s);
  inst.predicted_exponent = res.a_s;

  MatI M((int)s, (int)s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) M((int)i, (int)j) = inst.monomials[i].eval(inst.points[j].coords);
  res.det_value = det_exact(M);
  inst.det_value = res.det_value;

  if (res.det_value == 0) {
    res.det_zero = true;
    res.pass = true;
    return res;
  }
  Int d = abs(res.det_value);
  long long vp = 0;
  while (d % p == 0) {
    d /= p;
    ++vp;
  }
  res.vp = vp;
  res.pass = (vp >= res.a_s);
  return res;
}

ReductionStats reduction_stats(const IntPoly& f, std::int64_t p) {
  if (f.nvars() != 3) throw Error("plane projective curve required");
  if (!f.is_homogeneous() || f.is_zero()) throw Error("nonzero form required");
  if (!is_prime_u64((std::uint64_t)p)) throw Error("p must be prime");
  if ((unsigned __int128)p * (unsigned __int128)p > work_limit())
    throw WorkLimitError("prime too large for the full plane scan");

  ReductionStats st;
  st.p = p;
  FpPoly fp = reduce_mod_p(f, p);
  if (fp.is_zero()) throw Error("form vanishes identically mod p");

  // canonical representatives (1:a:b), (0:1:b), (0:0:1)
  auto visit = [&](std::int64_t x0, std::int64_t x1, std::int64_t x2) {
    if (fp_eval(fp, {x0, x1, x2}) != 0) return;
    st.n_p += point_multiplicity_mod_p(f, p, {Int(x0), Int(x1), Int(x2)});
  };
  for (std::int64_t a = 0; a < p; ++a)
    for (std::int64_t b = 0; b < p; ++b) visit(1, a, b);
  for (std::int64_t b = 0; b < p; ++b) visit(0, 1, b);
  visit(0, 0, 1);

  // integrality flag: strip variable factors, dehomogenize, run the corank
  // test; corank 1 is conclusive in any characteristic
  st.geometrically_integral = [&]() {
    if (fp.total_degree() == 1) return true;
    for (int v = 0; v < 3; ++v) {
      bool divides = true;
      for (const auto& [e, c] : fp.terms)
        if (e[v] == 0) {
          divides = false;
          break;
        }
      if (divides) return false;  // x_v times a nonconstant cofactor
    }
    // x0 does not divide fp, so dehomogenizing at x0 keeps the degree
    FpPoly h0 = fp_eval_partial(fp, 0, 1);
    FpPoly h = fp_zero(2, p);
    for (const auto& [e, c] : h0.terms) fp_add_term(h, {e[1], e[2]}, c);
    if (h.total_degree() < 1) return false;
    if (h.degree_in(0) == 0 || h.degree_in(1) == 0) return false;
    if (!fp_gcd(fp_gcd(h, fp_derivative(h, 0)), fp_derivative(h, 1)).is_constant()) return false;
    return count_absolute_factors(h) == 1;
  }();
  return st;
}

}  // namespace dgc
