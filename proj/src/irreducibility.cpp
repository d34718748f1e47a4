#include "dgc/irreducibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "dgc/polygcd.hpp"

namespace dgc {

namespace {

long long cross(const std::array<int, 2>& o, const std::array<int, 2>& a,
                const std::array<int, 2>& b) {
  return (long long)(a[0] - o[0]) * (b[1] - o[1]) - (long long)(a[1] - o[1]) * (b[0] - o[0]);
}

void require_bivariate(int nvars) {
  if (nvars != 2) throw Error("bivariate polynomial required");
}

// shared index bookkeeping for both scalar types
struct RuppertShape {
  int m, n;        // deg_x f, deg_y f
  int gcols;       // m * (n + 1)
  int cols, rows;  // gcols + (m+1)*n, (2m)*(2n)

  RuppertShape(int m_, int n_) : m(m_), n(n_) {
    gcols = m * (n + 1);
    cols = gcols + (m + 1) * n;
    rows = 4 * m * n;
  }
  int row(int i, int j) const { return i * (2 * n) + j; }
  int gcol(int a, int b) const { return a * (n + 1) + b; }
  int hcol(int a, int b) const { return gcols + a * n + b; }
};

// Fills the linear system for f*g_y - g*f_y - f*h_x + h*f_x = 0.  The
// coefficient of row x^i y^j against unknown g_{a,b} is
// (2b - j - 1) f_{i-a, j-b+1}, against h_{a,b} it is (i - 2a + 1) f_{i-a+1, j-b}.
template <class MatT, class Fetch>
MatT build_ruppert(const RuppertShape& s, Fetch fetch) {
  MatT M(s.rows, s.cols);
  M.setZero();
  for (int i = 0; i < 2 * s.m; ++i)
    for (int j = 0; j < 2 * s.n; ++j) {
      int r = s.row(i, j);
      for (int a = 0; a <= s.m - 1; ++a)
        for (int b = 0; b <= s.n; ++b) {
          int u = i - a, v = j - b + 1;
          long long mult = 2LL * b - j - 1;
          if (mult != 0 && u >= 0 && v >= 0 && u <= s.m && v <= s.n)
            M(r, s.gcol(a, b)) = fetch(u, v, mult);
        }
      for (int a = 0; a <= s.m; ++a)
        for (int b = 0; b <= s.n - 1; ++b) {
          int u = i - a + 1, v = j - b;
          long long mult = (long long)i - 2 * a + 1;
          if (mult != 0 && u >= 0 && v >= 0 && u <= s.m && v <= s.n)
            M(r, s.hcol(a, b)) = fetch(u, v, mult);
        }
    }
  return M;
}

IntPoly swap_xy(const IntPoly& f) {
  return f.compose({IntPoly::variable(2, 1), IntPoly::variable(2, 0)});
}

FpPoly swap_xy(const FpPoly& f) {
  FpPoly g = fp_zero(2, f.p);
  for (const auto& [e, c] : f.terms) fp_add_term(g, {e[1], e[0]}, c);
  return g;
}

// Factor count of genuinely bivariate squarefree f with gcd(f, f_x)
// constant: corank of the differential system.  Below the matrix call the
// count is at least 1, so a mod-p rank of cols-1 already certifies corank 1.
int corank_count(const IntPoly& f) {
  MatI M = ruppert_matrix(f);
  int cols = (int)M.cols();
  Mat<std::int64_t> Mp(M.rows(), M.cols());
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) Mp(i, j) = mod_reduce_big(M(i, j), 1000003);
  if (rank_mod_p(Mp, 1000003) == cols - 1) return 1;
  return cols - bareiss(M).rank;
}

int corank_count(const FpPoly& f) {
  auto M = ruppert_matrix(f);
  return (int)M.cols() - rank_mod_p(M, f.p);
}

// One orientation step shared by both fields.  Precondition: f squarefree,
// genuinely bivariate.  A nonconstant gcd(f, f_x) means f has a factor free
// of x; if the y-orientation is also blocked, an x-free and a y-free factor
// coexist and 2 is a correct lower bound (only ==1 is consumed upstream).
template <class Poly, class GcdFx, class GcdFy>
int count_bivariate(const Poly& f, GcdFx gcd_fx_const, GcdFy gcd_fy_const) {
  if (gcd_fx_const()) return corank_count(f);
  if (gcd_fy_const()) return corank_count(swap_xy(f));
  return 2;
}

bool squarefree_gate(const IntPoly& f) {
  return poly_gcd(poly_gcd(f, f.derivative(0)), f.derivative(1)).is_constant();
}

bool squarefree_gate(const FpPoly& f) {
  return fp_gcd(fp_gcd(f, fp_derivative(f, 0)), fp_derivative(f, 1)).is_constant();
}

}  // namespace

MatI ruppert_matrix(const IntPoly& f) {
  require_bivariate(f.nvars());
  int m = f.degree_in(0), n = f.degree_in(1);
  if (m < 1 || n < 1) throw Error("both variables must occur");
  RuppertShape s(m, n);
  return build_ruppert<MatI>(
      s, [&](int u, int v, long long mult) { return Int(mult) * f.coeff({u, v}); });
}

Mat<std::int64_t> ruppert_matrix(const FpPoly& f) {
  require_bivariate(f.nvars);
  int m = f.degree_in(0), n = f.degree_in(1);
  if (m < 1 || n < 1) throw Error("both variables must occur");
  RuppertShape s(m, n);
  std::int64_t p = f.p;
  return build_ruppert<Mat<std::int64_t>>(s, [&](int u, int v, long long mult) {
    auto it = f.terms.find(Exps{u, v});
    std::int64_t c = (it == f.terms.end()) ? 0 : it->second;
    return mul_mod(mod_reduce(mult, p), c, p);
  });
}

int count_absolute_factors(const IntPoly& f) {
  require_bivariate(f.nvars());
  int d = f.total_degree();
  if (d <= 0) throw Error("nonzero nonconstant polynomial required");
  if (!squarefree_gate(f)) throw Error("input is not squarefree");
  if (d == 1) return 1;
  // squarefree univariate splits into d distinct linear factors over the closure
  if (f.degree_in(0) == 0 || f.degree_in(1) == 0) return d;
  return count_bivariate(
      f, [&] { return poly_gcd(f, f.derivative(0)).is_constant(); },
      [&] { return poly_gcd(f, f.derivative(1)).is_constant(); });
}

int count_absolute_factors(const FpPoly& f) {
  require_bivariate(f.nvars);
  int d = f.total_degree();
  if (d <= 0) throw Error("nonzero nonconstant polynomial required");
  if (!squarefree_gate(f)) throw Error("input is not squarefree");
  if (d == 1) return 1;
  if (f.degree_in(0) == 0 || f.degree_in(1) == 0) return d;
  return count_bivariate(
      f, [&] { return fp_gcd(f, fp_derivative(f, 0)).is_constant(); },
      [&] { return fp_gcd(f, fp_derivative(f, 1)).is_constant(); });
}

bool absolutely_irreducible(const IntPoly& f) { return count_absolute_factors(f) == 1; }

bool absolutely_irreducible(const FpPoly& f) {
  Int d = f.total_degree() < 0 ? Int(0) : Int(f.total_degree());
  if (Int(f.p) <= 27 * d * d * d * d)
    throw Error("characteristic too small for the rank criterion");
  return count_absolute_factors(f) == 1;
}

bool reduction_absolutely_irreducible(const IntPoly& f, std::int64_t p) {
  FpPoly fp = reduce_mod_p(f, p);
  if (fp.is_zero() || fp.is_constant()) return false;
  if (!squarefree_gate(fp)) return false;
  if (fp.total_degree() == 1) return true;
  if (fp.degree_in(0) == 0 || fp.degree_in(1) == 0) return false;
  Int db(fp.total_degree());
  if (Int(p) <= 27 * db * db * db * db)
    throw Error("characteristic too small for the rank criterion");
  return count_absolute_factors(fp) == 1;
}

bool absolutely_irreducible_form(const IntPoly& f) {
  if (f.nvars() != 3) throw Error("expected a form in three variables");
  if (!f.is_homogeneous()) throw Error("expected a homogeneous form");
  int d = f.total_degree();
  if (d < 1) throw Error("expected a nonconstant form");
  if (d == 1) return true;
  for (int v = 0; v < 3; ++v)
    if (poly_divides(IntPoly::variable(3, v), f)) return false;
  try {
    return count_absolute_factors(f.dehomogenize(0)) == 1;
  } catch (const Error&) {
    return false;
  }
}

NewtonPolytope newton_polytope(const IntPoly& f) {
  require_bivariate(f.nvars());
  if (f.is_zero()) throw Error("newton polytope of zero polynomial");
  std::vector<std::array<int, 2>> pts;
  for (const auto& [e, c] : f.terms()) pts.push_back({e[0], e[1]});
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  NewtonPolytope np;
  if (pts.size() == 1) {
    np.vertices = pts;
    return np;
  }
  // monotone chain with strict turns, so collinear interior points drop out
  std::vector<std::array<int, 2>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0)
      hull.pop_back();
    hull.push_back(p);
  }
  std::size_t lower = hull.size();
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (hull.size() > lower && cross(hull[hull.size() - 2], hull.back(), *it) <= 0)
      hull.pop_back();
    hull.push_back(*it);
  }
  hull.pop_back();  // closes back onto pts[0]
  np.vertices = hull;
  if (hull.size() == 2) {
    np.edges.push_back({0, 1});
  } else {
    for (std::size_t i = 0; i < hull.size(); ++i)
      np.edges.push_back({(int)i, (int)((i + 1) % hull.size())});
  }
  return np;
}

bool gao_edge_criterion(const IntPoly& f) {
  require_bivariate(f.nvars());
  int d = 0, dp = 0;
  for (const auto& [e, c] : f.terms()) {
    if (e[1] == 0) d = std::max(d, e[0]);
    if (e[0] == 0) dp = std::max(dp, e[1]);
  }
  if (d < 1 || dp < 1) return false;
  if (std::gcd(d, dp) != 1) return false;
  for (const auto& [e, c] : f.terms()) {
    if ((e[0] == d && e[1] == 0) || (e[0] == 0 && e[1] == dp)) continue;
    if ((long long)e[0] * dp + (long long)e[1] * d >= (long long)d * dp) return false;
  }
  return true;
}

BadnessReport bad_primes(const IntPoly& f, long long scan_limit) {
  require_bivariate(f.nvars());
  if (scan_limit < 2) throw Error("scan limit too small");
  BadnessReport rep;
  rep.f = f;
  rep.d = f.total_degree();
  if (rep.d <= 0) throw Error("nonzero nonconstant polynomial required");
  Int d(rep.d);
  rep.threshold = 27 * d * d * d * d;
  rep.scan_limit = scan_limit;
  rep.abs_irreducible = squarefree_gate(f) && count_absolute_factors(f) == 1;
  if (!rep.abs_irreducible) {
    rep.badness = 0.0;
    rep.log_badness = -std::numeric_limits<double>::infinity();
    return rep;
  }
  if (rep.d == 1) {
    rep.log_badness = 0.0;
    rep.badness = 1.0;
    return rep;
  }

  // absolute irreducibility over the rationals pins the corank at 1, so a
  // full-pivot elimination exposes a nonzero minor of order cols-1
  Int product;
  int m = f.degree_in(0), n = f.degree_in(1);
  if (m == 0 || n == 0) {
    // cannot happen: univariate of degree >= 2 is never absolutely irreducible
    throw Error("internal: univariate input past the irreducibility gate");
  }
  MatI M = ruppert_matrix(f);
  BareissResult br = bareiss(M);
  if (br.rank != (int)M.cols() - 1 || br.last_pivot == 0)
    throw Error("internal: maximal minor unavailable despite absolute irreducibility");
  product = abs(br.last_pivot);

  // coefficient gcds of the extreme-degree parts guard against partial
  // degree drop mod p, where the integer matrix stops matching the
  // reduction's own differential system
  Int gx = 0, gy = 0;
  for (const auto& [e, c] : f.terms()) {
    if (e[0] == m) gx = gcd(gx, abs(c));
    if (e[1] == n) gy = gcd(gy, abs(c));
  }
  product *= gx * gy;

  for (long long p : primes_in(2, scan_limit)) {
    if (product % p == 0) {
      rep.candidate_primes.push_back(p);
      while (product % p == 0) product /= p;
    }
  }
  rep.cofactor_unfactored = (product > 1);

  double logb = 0.0;
  for (long long p : rep.candidate_primes) {
    if (Int(p) <= rep.threshold) continue;
    if (!reduction_absolutely_irreducible(f, p)) {
      rep.bad_primes.push_back(p);
      logb += std::log((double)p) / (double)p;
    }
  }
  rep.log_badness = logb;
  rep.badness = std::exp(logb);
  return rep;
}

double badness_value(const BadnessReport& report) {
  if (!report.abs_irreducible) return 0.0;
  double logb = 0.0;
  for (long long p : report.bad_primes) logb += std::log((double)p) / (double)p;
  return std::exp(logb);
}

}  // namespace dgc
