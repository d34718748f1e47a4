#include "dgc/auxpoly.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "dgc/irreducibility.hpp"
#include "dgc/linalg.hpp"
#include "dgc/polygcd.hpp"

namespace dgc {

namespace {

constexpr std::int64_t kScreenPrime = 1000003;

// all exponent vectors in nv variables with total degree == M (exact) or
// <= M, sorted grlex-descending like polynomial terms
std::vector<Exps> monomial_basis(int nv, int M, bool exact_degree) {
  std::vector<Exps> out;
  Exps e(nv, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == nv - 1) {
      e[pos] = left;
      out.push_back(e);
      if (!exact_degree)
        for (e[pos] = left - 1; e[pos] >= 0; --e[pos]) out.push_back(e);
      e[pos] = 0;
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[pos] = k;
      rec(pos + 1, left - k);
    }
    e[pos] = 0;
  };
  rec(0, M);
  std::sort(out.begin(), out.end(), GrlexDesc{});
  return out;
}

// rejects non-primitive f and curves failing the rank irreducibility test
void check_preconditions(const IntPoly& f, CountMode mode) {
  if (f.is_zero() || f.is_constant()) throw Error("nonconstant curve required");
  auto [content, prim] = content_and_primitive(f);
  if (content != 1 || !(prim == f)) throw Error("f must be primitive with positive content");
  if (mode == CountMode::affine) {
    if (f.nvars() != 2) throw Error("affine mode needs a bivariate curve");
    if (f.total_degree() >= 2 && !absolutely_irreducible(f))
      throw Error("f is not absolutely irreducible");
    return;
  }
  if (f.nvars() != 3) throw Error("projective mode needs a form in three variables");
  if (!f.is_homogeneous()) throw Error("projective mode needs a homogeneous f");
  if (f.total_degree() == 1) return;
  for (int v = 0; v < 3; ++v) {
    bool divides = true;
    for (const auto& [e, c] : f.terms())
      if (e[v] == 0) {
        divides = false;
        break;
      }
    if (divides) throw Error("f has a coordinate-line component");
  }
  // x0 does not divide f, so this chart keeps the degree
  IntPoly h = f.dehomogenize(0);
  if (!absolutely_irreducible(h)) throw Error("f is not absolutely irreducible");
}

}  // namespace

AuxCertificate aux_polynomial(const IntPoly& f, const Int& B, CountMode mode, int max_degree) {
  if (B < 1) throw Error("bound must be positive");
  if (max_degree < 0) throw Error("degree cap must be nonnegative");
  check_preconditions(f, mode);

  AuxCertificate cert;
  cert.f = f;
  cert.B = B;
  cert.mode = mode;
  const int nv = f.nvars();
  const int d = f.total_degree();

  std::vector<std::vector<Int>> pts;
  if (mode == CountMode::affine) {
    CountResult cr = enumerate_affine(f, B);
    if (!cr.affine_points) throw WorkLimitError("point set exceeds the retention cap");
    cert.affine_points = *cr.affine_points;
    for (const auto& pt : cert.affine_points) pts.push_back(pt.coords);
  } else {
    CountResult cr = enumerate_projective(f, B);
    if (!cr.proj_points) throw WorkLimitError("point set exceeds the retention cap");
    cert.proj_points = *cr.proj_points;
    for (const auto& pt : cert.proj_points) pts.push_back(pt.coords);
  }
  const int s = (int)pts.size();
  cert.s_points = s;

  for (int M = 0; M <= max_degree; ++M) {
    std::vector<Exps> mono = monomial_basis(nv, M, mode == CountMode::projective);
    const int cols = (int)mono.size();
    const int mult_dim = (M >= d) ? (int)binomial(M - d + 2, 2) : 0;
    const int target = cols - mult_dim;  // success iff rank < target
    if (target <= 0) continue;

    // evaluation matrix; per-point power tables keep this quadratic
    MatI E(s, cols);
    for (int i = 0; i < s; ++i) {
      std::vector<std::vector<Int>> pw(nv);
      for (int v = 0; v < nv; ++v) {
        pw[v].assign(M + 1, 1);
        for (int k = 1; k <= M; ++k) pw[v][k] = pw[v][k - 1] * pts[i][v];
      }
      for (int j = 0; j < cols; ++j) {
        Int val = 1;
        for (int v = 0; v < nv; ++v) val *= pw[v][mono[j][v]];
        E(i, j) = val;
      }
    }

    if (s > 0) {
      Mat<std::int64_t> Ep(s, cols);
      for (int i = 0; i < s; ++i)
        for (int j = 0; j < cols; ++j) Ep(i, j) = mod_reduce_big(E(i, j), kScreenPrime);
      if (rank_mod_p(Ep, kScreenPrime) >= target) continue;  // certified failure
      if (bareiss(E).rank >= target) continue;
    }

    // success: pick a nullspace vector outside f * (lower forms)
    std::vector<VecI> basis = nullspace_of_int(E);
    IntPoly best;
    for (const auto& v : basis) {
      IntPoly cand = IntPoly::zero(nv);
      for (int j = 0; j < cols; ++j)
        if (v[j] != 0) cand.add_term(mono[j], v[j]);
      if (cand.is_zero() || poly_divides(f, cand, nullptr)) continue;
      if (best.is_zero() || GrlexDesc{}(best.terms().begin()->first, cand.terms().begin()->first))
        best = cand;
    }
    if (best.is_zero())
      throw Error("internal: dimension test succeeded but every vector is a multiple of f");
    if (best.total_degree() != M)
      throw Error("internal: selected vector has wrong degree despite minimal ascent");
    for (const auto& pt : pts)
      if (best.eval(pt) != 0) throw Error("internal: selected vector fails pointwise vanishing");

    cert.M = M;
    cert.g = best;
    cert.bezout_bound = Int(d) * M;
    cert.theory_bound =
        walsh_degree_formula(1, d, (double)B, (double)coeff_norm(degree_part(f, d)), 1.0, 1.0);
    return cert;
  }
  throw WorkLimitError("auxiliary degree cap exceeded with " + std::to_string(s) +
                       " points at stake");
}

bool bezout_check(const AuxCertificate& cert) {
  int nv = cert.f.nvars();
  bool plane = (cert.mode == CountMode::affine && nv == 2) ||
               (cert.mode == CountMode::projective && nv == 3);
  if (!plane) throw Error("not a plane-curve certificate");
  return Int(cert.s_points) <= Int(cert.f.total_degree()) * cert.M;
}

double walsh_degree_formula(int n, int d, double B, double norm_fd, double b_f, double c) {
  if (n < 1 || d < 1 || B <= 0 || norm_fd <= 0 || b_f <= 0 || c <= 0)
    throw Error("all arguments must be positive");
  double dn = (double)d, nn = (double)n;
  double t1 = c * std::pow(B, (nn + 1) / (nn * std::pow(dn, 1.0 / nn))) *
              std::pow(dn, 4.0 - 1.0 / nn) * b_f /
              std::pow(norm_fd, (1.0 / nn) / std::pow(dn, 1.0 + 1.0 / nn));
  double t2 = c * std::pow(dn, 1.0 - 1.0 / nn) * std::log(B);
  double t3 = c * std::pow(dn, 4.0 - 1.0 / nn);
  return t1 + t2 + t3;
}

}  // namespace dgc
