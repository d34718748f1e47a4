#include "dgc/geometry.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>

#include "dgc/enumerate.hpp"
#include "dgc/irreducibility.hpp"
#include "dgc/polygcd.hpp"

namespace dgc {

namespace {

Int factorial_int(int k) {
  Int f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Coordinate value order 0, 1, -1, 2, -2, ...
long long value_rank(long long v) { return v > 0 ? 2 * v - 1 : -2 * v; }

int nonzeros(const std::vector<long long>& x) {
  int c = 0;
  for (long long v : x) c += (v != 0);
  return c;
}

bool search_less(const std::vector<long long>& a, const std::vector<long long>& b) {
  int na = nonzeros(a), nb = nonzeros(b);
  if (na != nb) return na < nb;
  for (int i = int(a.size()) - 1; i >= 0; --i)
    if (a[i] != b[i]) return value_rank(a[i]) < value_rank(b[i]);
  return false;
}

// All vectors with entries in [-h, h] and max-norm exactly h.
std::vector<std::vector<long long>> box_shell(int r, long long h) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> x(r, -h);
  while (true) {
    long long mx = 0;
    for (long long v : x) mx = std::max(mx, v < 0 ? -v : v);
    if (mx == h) out.push_back(x);
    int i = r - 1;
    while (i >= 0 && x[i] == h) x[i--] = -h;
    if (i < 0) break;
    ++x[i];
  }
  return out;
}

// Canonical projective representatives of max-norm exactly h in ascending
// lexicographic order: gcd 1, first nonzero coordinate positive.
void canonical_shell_rec(int dim, long long h, int i, bool leading_zeros,
                         std::vector<long long>& x, std::vector<std::vector<Int>>& out) {
  if (i == dim) {
    long long mx = 0, g = 0;
    for (long long v : x) {
      mx = std::max(mx, v < 0 ? -v : v);
      g = std::gcd(g, v < 0 ? -v : v);
    }
    if (mx != h || g != 1) return;
    out.emplace_back(x.begin(), x.end());
    return;
  }
  long long lo = leading_zeros ? 0 : -h;
  for (long long v = lo; v <= h; ++v) {
    x[i] = v;
    canonical_shell_rec(dim, h, i + 1, leading_zeros && v == 0, x, out);
  }
  x[i] = 0;
}

std::vector<std::vector<Int>> canonical_shell(int dim, long long h) {
  std::vector<std::vector<Int>> out;
  std::vector<long long> x(dim, 0);
  canonical_shell_rec(dim, h, 0, true, x, out);
  return out;
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// g(u + t q) restricted to the hyperplane {x_j = 0}: the result lives in the
// ring (w_0, ..., w_{nv-2}, t) where the w are the coordinates != j in
// order.  Works for projective lines (u + t q) with u in the plane and for
// affine lines through the plane in direction q alike.
IntPoly restrict_line(const IntPoly& g, const std::vector<Int>& q, int j) {
  int nv = g.nvars();
  IntPoly t = IntPoly::variable(nv, nv - 1);
  std::vector<IntPoly> images;
  int pos = 0;
  for (int i = 0; i < nv; ++i) {
    IntPoly im = t * q[i];
    if (i != j) im += IntPoly::variable(nv, pos++);
    images.push_back(im);
  }
  return g.compose(images);
}

// v_j^deg(f) * f(u / v_j): multiplies each coefficient by v_j^(deg - |e|).
IntPoly scale_clear(const IntPoly& f, const Int& vj) {
  if (vj == 1 || f.is_zero()) return f;
  int deg = f.total_degree();
  IntPoly out(f.nvars());
  for (const auto& [e, c] : f.terms())
    out.add_term(e, c * Int(pow(vj, unsigned(deg - exps_total(e)))));
  return out;
}

// Integral plane curve test: degree-1 curves always pass; otherwise no
// coordinate factor (projective case) and a single absolute factor.
bool plane_curve_integral(const IntPoly& g, bool projective) {
  int d = g.total_degree();
  if (d < 1) return false;
  if (d == 1) return true;
  if (projective) {
    for (int k = 0; k < g.nvars(); ++k)
      if (poly_divides(IntPoly::variable(g.nvars(), k), g, nullptr)) return false;
    return count_absolute_factors(g.dehomogenize(0)) == 1;
  }
  return count_absolute_factors(g) == 1;
}

bool is_signed_coordinate(const IntPoly& g, int var) {
  if (g.terms().size() != 1 || g.total_degree() != 1) return false;
  const auto& [e, c] = *g.terms().begin();
  return e[var] == 1 && (c == 1 || c == -1);
}

Int ceil_sqrt(const Int& x) {
  Int s = sqrt(x);
  return s * s < x ? s + 1 : s;
}

}  // namespace

Int system_entry_bound(const LinearSystem& sys) {
  Int b = 1;
  for (Eigen::Index i = 0; i < sys.a.rows(); ++i)
    for (Eigen::Index j = 0; j < sys.a.cols(); ++j) b = std::max(b, Int(abs(sys.a(i, j))));
  return b;
}

std::vector<Int> small_violating_solution(const LinearSystem& sys) {
  int s = int(sys.a.rows()), r = int(sys.a.cols());
  if (s < 1 || r <= s) throw Error("linear system needs more variables than equations");
  if (rank_exact(sys.a) != s) throw Error("linear system rows are dependent");
  Int b = system_entry_bound(sys);
  Int radius = sqrt(Int(factorial_int(s - 1) * r * pow(b, unsigned(2 * (s - 1)))));
  long long h_max = radius.convert_to<long long>();
  std::uint64_t examined = 0;
  for (long long h = 1; h <= h_max; ++h) {
    auto shell = box_shell(r, h);
    examined += shell.size();
    if (examined > work_limit()) throw WorkLimitError("small-solution search over budget");
    std::sort(shell.begin(), shell.end(), search_less);
    for (const auto& x : shell) {
      Int first = 0;
      for (int k = 0; k < r; ++k) first += sys.a(0, k) * x[k];
      if (first == 0) continue;
      bool rest = true;
      for (int i = 1; i < s && rest; ++i) {
        Int acc = 0;
        for (int k = 0; k < r; ++k) acc += sys.a(i, k) * x[k];
        rest = acc == 0;
      }
      if (rest) return std::vector<Int>(x.begin(), x.end());
    }
  }
  throw Error("internal: guaranteed search box exhausted without a violating solution");
}

std::vector<Int> pluecker(const std::vector<ProjPoint>& points) {
  if (points.empty()) throw Error("no spanning points given");
  int k = int(points.size());
  int w = int(points[0].coords.size());
  for (const auto& p : points)
    if (int(p.coords.size()) != w) throw Error("spanning points of mixed dimension");
  if (k > w) throw Error("dependent points: more points than coordinates");
  MatI m(k, w);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < w; ++j) m(i, j) = points[i].coords[j];
  if (rank_exact(m) != k) throw Error("dependent points");

  std::vector<Int> out;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  while (true) {
    MatI sub(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub(i, j) = m(i, c[j]);
    out.push_back(det_exact(sub));
    int i = k - 1;
    while (i >= 0 && c[i] == w - k + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int t = i + 1; t < k; ++t) c[t] = c[t - 1] + 1;
  }

  Int g = 0;
  for (const Int& v : out) g = gcd(g, v);
  Int sign = 0;
  for (const Int& v : out)
    if (v != 0) {
      sign = v < 0 ? -1 : 1;
      break;
    }
  for (Int& v : out) v = v * sign / g;
  return out;
}

ProjectedPoint project_point(const ProjectionSetup& setup, const ProjPoint& P) {
  std::size_t k = setup.centers.size();
  if (setup.forms.size() != k || k == 0) throw Error("projection setup incomplete");
  std::size_t w = P.coords.size();
  std::vector<Rat> img(w);
  for (std::size_t t = 0; t < w; ++t) img[t] = P.coords[t];
  for (std::size_t i = 0; i < k; ++i) {
    if (setup.forms[i].size() != w || setup.centers[i].coords.size() != w)
      throw Error("projection setup dimension mismatch");
    Int lp = dot(setup.forms[i], P.coords);
    Int lpi = dot(setup.forms[i], setup.centers[i].coords);
    if (lpi == 0) throw Error("projection setup violates L_i(P_i) != 0");
    Rat c = Rat(lp) / Rat(lpi);
    for (std::size_t t = 0; t < w; ++t) img[t] -= c * Rat(setup.centers[i].coords[t]);
  }
  Int den = 1;
  for (const Rat& v : img) den = lcm(den, Int(denominator(v)));
  std::vector<Int> raw(w);
  bool all_zero = true;
  for (std::size_t t = 0; t < w; ++t) {
    raw[t] = Int(numerator(img[t])) * (den / Int(denominator(img[t])));
    all_zero = all_zero && raw[t] == 0;
  }
  if (all_zero) throw Error("point lies in the span of the projection centers");
  ProjPoint image = make_proj(std::move(raw));
  Int h_in = height(P), h_out = height(image);
  Int cap = setup.inflation * h_in;
  if (h_out > cap) throw Error("internal: projection height audit failed");
  return ProjectedPoint{std::move(image), h_in, h_out, cap};
}

ProjectionResult find_projection_center(const std::vector<IntPoly>& gens, int d,
                                        const Int& height_cap) {
  if (gens.size() != 2) throw Error("expected exactly two generators");
  for (const IntPoly& g : gens) {
    if (g.nvars() != 4) throw Error("generators must have four variables");
    if (g.is_zero() || !g.is_homogeneous() || g.total_degree() < 1)
      throw Error("generators must be nonzero homogeneous of positive degree");
  }
  if (d < 1) throw Error("curve degree must be positive");
  Int cap = height_cap > 0 ? height_cap : Int(4) * d * d;
  if (cap > 1000000) throw WorkLimitError("center height cap too large to scan");

  long long tried = 0, on_curve = 0, degenerate = 0, mismatched = 0, reducible = 0;
  int seen_degree = -1;
  std::uint64_t examined = 0;
  // An elimination is about 10^4 primitive steps, so charge candidates that
  // reach it at that rate; a hopeless scan (say, generators cutting out extra
  // components, so every image is off-degree) then trips the budget in
  // minutes instead of exhausting the cap over hours.
  constexpr std::uint64_t elimination_cost = 10000;
  auto scan_summary = [&] {
    return "tried " + std::to_string(tried) + " candidates (" +
           std::to_string(on_curve) + " on the curve, " +
           std::to_string(degenerate) + " degenerate eliminations, " +
           std::to_string(mismatched) + " image degree mismatches with best degree " +
           std::to_string(seen_degree) + ", " + std::to_string(reducible) +
           " reducible images); expected an integral curve of degree " + std::to_string(d);
  };
  for (long long h = 1; h <= cap.convert_to<long long>(); ++h) {
    auto shell = canonical_shell(4, h);
    examined += shell.size();
    for (const auto& q : shell) {
      ++tried;
      if (gens[0].eval(q) == 0 && gens[1].eval(q) == 0) {
        ++on_curve;
        continue;
      }
      examined += elimination_cost;
      if (examined > work_limit())
        throw WorkLimitError("center search over budget: " + scan_summary());
      MatI row(1, 4);
      for (int t = 0; t < 4; ++t) row(0, t) = q[t];
      std::vector<Int> form = small_violating_solution(LinearSystem{std::move(row)});
      int j = -1, nz = 0;
      for (int t = 0; t < 4; ++t)
        if (form[t] != 0) {
          if (j < 0) j = t;
          ++nz;
        }
      if (nz != 1 || abs(form[j]) != 1)
        throw Error("internal: expected a coordinate form from the one-equation search");
      IntPoly r = resultant_in_var(restrict_line(gens[0], q, j), restrict_line(gens[1], q, j), 3);
      if (r.is_zero()) {
        ++degenerate;
        continue;
      }
      IntPoly image = squarefree_part(r.drop_var(3));
      if (image.total_degree() != d) {
        ++mismatched;
        seen_degree = std::max(seen_degree, image.total_degree());
        continue;
      }
      if (!plane_curve_integral(image, true)) {
        ++reducible;
        continue;
      }
      ProjectionSetup setup;
      setup.n = 3;
      setup.m = 1;
      setup.centers = {make_proj(std::vector<Int>(q))};
      setup.forms = {std::move(form)};
      setup.b1 = Int(4) * d * d;
      setup.b2 = ceil_sqrt(factorial_int(setup.n - setup.m - 2) * (setup.n + 1) *
                           Int(pow(setup.b1, unsigned(2 * (setup.n - setup.m - 2)))));
      setup.inflation = (setup.n - setup.m) *
                        Int(pow(Int(setup.n + 1) * setup.b1 * setup.b2,
                                unsigned(setup.n - setup.m - 1)));
      return ProjectionResult{std::move(setup), std::move(image), j, d, Int(h), tried};
    }
  }
  throw Error("no projection center of height <= " + cap.str() + " found: " +
              scan_summary());
}

NormalizationResult normalize_leading_coeff(const IntPoly& f, int d) {
  if (f.is_zero() || !f.is_homogeneous() || f.total_degree() != d)
    throw Error("expected a nonzero homogeneous polynomial of the declared degree");
  int nv = f.nvars();
  if (nv < 2) throw Error("need at least two variables");
  int vars = nv - 1;  // shifted coordinates x_0..x_n
  Int norm = coeff_norm(f);
  if (d == 0) {
    Int c = f.coeff(Exps(nv, 0));
    return NormalizationResult{std::vector<Int>(vars, 0), f, c, norm, norm};
  }
  Int scale3 = pow(Int(3), unsigned(vars * d));

  std::vector<Int> a(vars, 0);
  std::vector<Int> pt(nv, 0);
  pt[nv - 1] = 1;
  bool found = false;
  while (true) {
    for (int i = 0; i < vars; ++i) pt[i] = a[i];
    if (abs(f.eval(pt)) * scale3 >= norm) {
      found = true;
      break;
    }
    int i = vars - 1;
    while (i >= 0 && a[i] == d) a[i--] = 0;
    if (i < 0) break;
    ++a[i];
  }
  if (!found) throw Error("internal: no shift in [0,d]^(n+1) meets the evaluation bound");

  std::vector<IntPoly> images;
  IntPoly last = IntPoly::variable(nv, nv - 1);
  for (int i = 0; i < vars; ++i) images.push_back(IntPoly::variable(nv, i) + last * a[i]);
  images.push_back(last);
  IntPoly image = f.compose(images);

  Exps top(nv, 0);
  top[nv - 1] = d;
  Int lead = image.coeff(top);
  Int norm_out = coeff_norm(image);
  if (abs(lead) * scale3 < norm) throw Error("internal: shifted leading coefficient too small");
  if (norm_out > binomial(nv - 1 + d, nv - 1) * Int(pow(Int(d), unsigned(vars))) * norm)
    throw Error("normalization growth bound violated");
  return NormalizationResult{std::move(a), std::move(image), std::move(lead), std::move(norm),
                             std::move(norm_out)};
}

AffineReduction affine_reduce_curve(const std::vector<IntPoly>& gens, int d, const Int& B,
                                    const Int& height_cap) {
  if (gens.size() != 2) throw Error("expected exactly two generators");
  for (const IntPoly& g : gens) {
    if (g.nvars() != 3) throw Error("generators must have three variables");
    if (g.is_zero() || g.total_degree() < 1)
      throw Error("generators must be nonzero and nonconstant");
  }
  if (d < 1) throw Error("curve degree must be positive");
  if (B < 1) throw Error("box bound must be positive");

  AffineReduction red;
  red.degree = d;
  red.bound = B;
  red.collision_allowance = Int(d) * d;
  red.dropped_var = -1;

  // Planar fast path: a generator that is a coordinate pins the curve into
  // that coordinate plane and the projection along it is exact.
  for (int which = 0; which < 2 && red.dropped_var < 0; ++which)
    for (int k = 0; k < 3 && red.dropped_var < 0; ++k)
      if (is_signed_coordinate(gens[which], k)) {
        IntPoly r0 = gens[1 - which].eval_partial(k, 0);
        if (r0.is_zero() || r0.total_degree() < 1)
          throw Error("planar fast path degenerate: second generator collapses on the plane");
        IntPoly image = squarefree_part(r0).drop_var(k);
        if (image.total_degree() != d)
          throw Error("planar image degree " + std::to_string(image.total_degree()) +
                      " does not match the declared degree " + std::to_string(d));
        if (!plane_curve_integral(image, false))
          throw Error("planar image is not integral; expected an integral curve");
        red.plane_curve = image;
        red.direction = std::vector<Int>(3, 0);
        red.direction[k] = 1;
        red.dropped_var = k;
        red.inflation = 1;
      }

  if (red.dropped_var < 0) {
    Int cap = height_cap > 0 ? height_cap : Int(4) * d * d;
    if (cap > 1000000) throw WorkLimitError("direction height cap too large to scan");
    long long tried = 0, at_infinity = 0, degenerate = 0, mismatched = 0, reducible = 0;
    int seen_degree = -1;
    std::uint64_t examined = 0;
    IntPoly top0 = degree_part(gens[0], gens[0].total_degree());
    IntPoly top1 = degree_part(gens[1], gens[1].total_degree());
    for (long long h = 1; h <= cap.convert_to<long long>() && red.dropped_var < 0; ++h) {
      auto shell = canonical_shell(3, h);
      examined += shell.size();
      if (examined > work_limit()) throw WorkLimitError("direction search over budget");
      for (const auto& v : shell) {
        ++tried;
        // (0 : v) on both top forms would put the direction on the curve's
        // closure at infinity: fibers could be infinite, so skip.
        if (top0.eval(v) == 0 && top1.eval(v) == 0) {
          ++at_infinity;
          continue;
        }
        int j = 0;
        while (v[j] == 0) ++j;
        IntPoly r =
            resultant_in_var(restrict_line(gens[0], v, j), restrict_line(gens[1], v, j), 2);
        if (r.is_zero()) {
          ++degenerate;
          continue;
        }
        IntPoly image = squarefree_part(scale_clear(r.drop_var(2), v[j]));
        if (image.total_degree() != d) {
          ++mismatched;
          seen_degree = std::max(seen_degree, image.total_degree());
          continue;
        }
        if (!plane_curve_integral(image, false)) {
          ++reducible;
          continue;
        }
        red.plane_curve = image;
        red.direction = v;
        red.dropped_var = j;
        red.inflation = Int(64) * d * d;
        break;
      }
    }
    if (red.dropped_var < 0)
      throw Error("no projection direction of height <= " + cap.str() + " found: tried " +
                  std::to_string(tried) + " candidates (" + std::to_string(at_infinity) +
                  " on the closure at infinity, " + std::to_string(degenerate) +
                  " degenerate eliminations, " + std::to_string(mismatched) +
                  " image degree mismatches with best degree " + std::to_string(seen_degree) +
                  ", " + std::to_string(reducible) +
                  " reducible images); expected an integral curve of degree " +
                  std::to_string(d));
  }

  red.count_space = enumerate_affine_system(gens, B, false).count;
  red.count_plane = enumerate_affine(red.plane_curve, red.inflation * B, false).count;
  red.relation_holds = red.count_space <= red.count_plane + red.collision_allowance;
  return red;
}

}  // namespace dgc
