#include "dgc/witness.hpp"

#include <algorithm>
#include <cmath>

#include "dgc/certified.hpp"
#include "dgc/enumerate.hpp"
#include "dgc/irreducibility.hpp"
#include "dgc/linalg.hpp"

namespace dgc {

namespace {

// Row-major odometer over [lo, hi]^n.
std::vector<std::vector<Int>> integer_box(int n, long long lo, long long hi) {
  std::vector<std::vector<Int>> out;
  std::vector<long long> x(n, lo);
  while (true) {
    out.emplace_back(x.begin(), x.end());
    int i = n - 1;
    while (i >= 0 && x[i] == hi) x[i--] = lo;
    if (i < 0) break;
    ++x[i];
  }
  return out;
}

bool has_vertex(const NewtonPolytope& np, int a, int b) {
  for (const auto& v : np.vertices)
    if (v[0] == a && v[1] == b) return true;
  return false;
}

}  // namespace

WitnessCurve build_witness(int d, int n) {
  if (n < 2) throw Error("witness needs at least two variables");
  if (d < 1) throw Error("witness degree must be positive");
  Int box = std::max(Int(1), Int((d - 1) / 2 - (d - 1) / 4));
  if (d == 1) {
    if (n != 2) throw Error("degree-1 witness is the planar line case");
    return WitnessCurve{1, 2, IntPoly::variable(2, 0), 0, box, 4, {}};
  }

  int cap = (d - 1) / n;
  int hi = (d - 1) / (2 * n);
  int lo = hi - cap;
  auto exponents = integer_box(n, 0, cap);
  auto grid = integer_box(n, lo, hi);
  int m = int(exponents.size());  // = grid.size(), the system is square

  IntPoly structural(n);
  for (int i = 0; i + 1 < n; ++i) {
    Exps e(n, 0);
    e[i] = d;
    structural.add_term(e, 1);
  }
  {
    Exps e(n, 0);
    e[n - 1] = d - 1;
    structural.add_term(e, 1);
  }

  MatI sys(m, m + 1);
  for (int row = 0; row < m; ++row) {
    for (int col = 0; col < m; ++col) {
      Int v = 1;
      for (int i = 0; i < n; ++i)
        for (Int k = 0; k < exponents[col][i]; ++k) v *= grid[row][i];
      sys(row, col) = v;
    }
    sys(row, m) = structural.eval(grid[row]);
  }
  if (det_exact(MatI(sys.leftCols(m))) == 0)
    throw Error("internal: Vandermonde power matrix is singular");
  auto kernel = nullspace_of_int(sys);
  if (kernel.size() != 1 || kernel[0](m) == 0)
    throw Error("internal: grid system did not determine a unique correction");
  VecI w = kernel[0](m) > 0 ? kernel[0] : VecI(-kernel[0]);
  Int t = w(m);

  IntPoly f = structural * t;
  std::vector<Rat> solution;
  for (int col = 0; col < m; ++col) {
    Exps e(exponents[col].size());
    for (int i = 0; i < n; ++i) e[i] = int(exponents[col][i].convert_to<long long>());
    f.add_term(e, w(col));
    solution.emplace_back(Rat(w(col)) / Rat(t));
  }
  f = content_and_primitive(f).second;

  for (const auto& r : grid)
    if (f.eval(r) != 0) throw Error("internal: witness does not vanish on the grid");
  if (n == 2) {
    if (!gao_edge_criterion(f))
      throw Error("internal: witness fails the edge irreducibility criterion");
    NewtonPolytope np = newton_polytope(f);
    if (!has_vertex(np, d, 0) || !has_vertex(np, 0, d - 1))
      throw Error("internal: witness Newton polytope lost a structural vertex");
  }

  Int claimed = 1;
  for (int i = 0; i < n; ++i) claimed *= cap + 1;
  if (n == 2) claimed += 1;  // the point at infinity (0:1:0) of the closure
  return WitnessCurve{d, n, std::move(f), Int((d - 1) / (2 * n)), box, claimed,
                      std::move(solution)};
}

ProjectiveWitnessReport verify_projective_lower_bound(const WitnessCurve& w) {
  if (w.n != 2) throw Error("projective lower bound is stated for plane curves");
  IntPoly closure = w.f.homogenize();
  Int count = enumerate_projective(closure, w.B, false).count;
  Int grid_floor = Int((w.d - 1) / 2 + 1) * ((w.d - 1) / 2 + 1) + 1;
  bool scaling = pow(5 * count, unsigned(w.d)) >= pow(Int(w.d), unsigned(2 * w.d)) * w.B * w.B;
  bool grid = count >= grid_floor;
  bool pass = scaling && (w.d < 3 || grid);
  return ProjectiveWitnessReport{w.d, w.B, count, grid_floor, scaling, grid, pass};
}

AffineWitnessReport verify_affine_lower_bound(const WitnessCurve& w) {
  if (w.n != 2 || w.d < 3) throw Error("affine lower bound is stated for plane curves, d >= 3");
  Int count = enumerate_affine(w.f, w.B, false).count;
  double b = w.B.convert_to<double>();
  double required =
      w.d * w.d * std::pow(b, 1.0 / w.d) * std::log(b) / (4 * std::log(double(w.d)));
  if (w.B == 1)  // log B = 0: the bound degenerates to 0
    return AffineWitnessReport{w.d, w.B, count, 0.0, true};

  bool decided = false, pass = false;
  for (int terms = 16; terms <= 1024 && !decided; terms *= 2) {
    RatInterval logd = log_interval(Int(w.d), terms);
    RatInterval logb = log_interval(w.B, terms);
    RatInterval root = root_interval(w.B, w.d, terms);
    RatInterval lhs = interval_scale(Rat(4 * count), logd);
    RatInterval rhs = interval_scale(Rat(w.d) * w.d, interval_mul(root, logb));
    if (lhs.lo >= rhs.hi) {
      decided = true;
      pass = true;
    } else if (lhs.hi < rhs.lo) {
      decided = true;
      pass = false;
    }
  }
  if (!decided) throw Error("internal: lower-bound comparison did not separate");
  return AffineWitnessReport{w.d, w.B, count, required, pass};
}

}  // namespace dgc
