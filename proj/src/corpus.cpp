#include "dgc/corpus.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "dgc/common.hpp"
#include "dgc/geometry.hpp"
#include "dgc/irreducibility.hpp"
#include "dgc/linalg.hpp"
#include "dgc/polygcd.hpp"

namespace dgc {

namespace {

void exponents_rec(int nvars, int pos, int left, std::vector<int>& cur,
                   std::vector<Exps>& out) {
  if (pos == nvars - 1) {
    cur[pos] = left;
    out.push_back(Exps(cur.begin(), cur.end()));
    return;
  }
  for (int e = 0; e <= left; ++e) {
    cur[pos] = e;
    exponents_rec(nvars, pos + 1, left - e, cur, out);
  }
}

// All exponent vectors of total degree exactly d.
std::vector<Exps> exponents_of_degree(int nvars, int d) {
  std::vector<Exps> out;
  std::vector<int> cur(nvars, 0);
  exponents_rec(nvars, 0, d, cur, out);
  return out;
}

std::vector<Exps> exponents_up_to(int nvars, int d) {
  std::vector<Exps> out;
  for (int k = 0; k <= d; ++k) {
    auto part = exponents_of_degree(nvars, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

IntPoly random_poly_of_degree(Rng& rng, int nvars, int d, bool homogeneous,
                              long long coeff_bound) {
  auto exps = homogeneous ? exponents_of_degree(nvars, d)
                          : exponents_up_to(nvars, d);
  IntPoly f(nvars);
  for (const auto& e : exps) {
    long long c = rng.uniform(-coeff_bound, coeff_bound);
    if (c != 0) f.add_term(e, Int(c));
  }
  return f;
}

bool absolutely_irreducible_filter(const IntPoly& f, int d, int nvars,
                                   bool homogeneous) {
  if (d <= 1) return true;
  if (homogeneous) {
    if (nvars != 3) throw Error("irreducibility filter needs a plane curve");
    return absolutely_irreducible_form(f);
  }
  if (nvars != 2) throw Error("irreducibility filter needs a plane curve");
  try {
    return count_absolute_factors(f) == 1;
  } catch (const Error&) {
    return false;  // not squarefree, hence not irreducible at this degree
  }
}

}  // namespace

std::vector<IntPoly> generate_corpus(const CorpusSpec& spec) {
  if (spec.dmin < 1 || spec.dmax < spec.dmin) throw Error("bad degree range");
  if (spec.nvars < 1) throw Error("bad variable count");
  if (spec.coeff_bound < 1) throw Error("bad coefficient bound");
  if (spec.count < 0) throw Error("bad corpus size");

  Rng rng(spec.seed);
  std::vector<IntPoly> out;
  out.reserve(spec.count);
  long long attempts = 0;
  while ((int)out.size() < spec.count) {
    if (++attempts > spec.attempt_cap) throw Error("corpus attempt cap exhausted");
    int d = (int)rng.uniform(spec.dmin, spec.dmax);
    IntPoly f(spec.nvars);
    if (spec.irreducibility == IrrFilter::reducible) {
      if (d < 2) continue;  // a degree-1 form has no proper factorization
      int d1 = (int)rng.uniform(1, d - 1);
      IntPoly g = random_poly_of_degree(rng, spec.nvars, d1, spec.homogeneous,
                                        spec.coeff_bound);
      IntPoly h = random_poly_of_degree(rng, spec.nvars, d - d1,
                                        spec.homogeneous, spec.coeff_bound);
      if (g.total_degree() != d1 || h.total_degree() != d - d1) continue;
      f = g * h;
    } else {
      f = random_poly_of_degree(rng, spec.nvars, d, spec.homogeneous,
                                spec.coeff_bound);
    }
    if (f.total_degree() != d) continue;
    if (spec.require_primitive) f = content_and_primitive(f).second;
    if (spec.irreducibility == IrrFilter::absolutely_irreducible &&
        !absolutely_irreducible_filter(f, d, spec.nvars, spec.homogeneous))
      continue;
    out.push_back(std::move(f));
  }
  return out;
}

DeterminantInstance random_determinant_instance(Rng& rng, std::int64_t p, int s) {
  if (p < 2) throw Error("bad prime");
  if (s < 1) throw Error("bad monomial count");

  long long a = rng.uniform(0, p - 1);
  long long b = rng.uniform(0, p - 1);
  std::set<std::pair<long long, long long>> seen;
  std::vector<ProjPoint> points;
  long long guard = 0;
  while ((int)points.size() < s) {
    if (++guard > 10000) throw Error("internal: lift sampling stalled");
    long long r = rng.uniform(-3, 3);
    long long t = rng.uniform(-3, 3);
    if (!seen.insert({r, t}).second) continue;
    points.push_back(make_proj({Int(1), Int(a + p * r), Int(b + p * t)}));
  }

  // Smallest degree leaving the interpolation system a kernel of rank >= 2.
  int d = 1;
  while (binomial(d + 2, 2) < s + 2) ++d;
  auto exps = exponents_of_degree(3, d);
  MatI sys((int)points.size(), (int)exps.size());
  for (int i = 0; i < (int)points.size(); ++i)
    for (int j = 0; j < (int)exps.size(); ++j) {
      Int v = 1;
      for (int k = 0; k < 3; ++k)
        for (int e = 0; e < exps[j][k]; ++e) v *= points[i].coords[k];
      sys(i, j) = v;
    }
  auto kernel = nullspace_of_int(sys);
  if (kernel.empty()) throw Error("internal: interpolation kernel empty");
  const VecI& coeffs = kernel[rng.uniform(0, (long long)kernel.size() - 1)];
  IntPoly f(3);
  for (int j = 0; j < (int)exps.size(); ++j)
    if (coeffs[j] != 0) f.add_term(exps[j], coeffs[j]);

  DeterminantInstance inst;
  inst.p = p;
  inst.f = std::move(f);
  inst.points = std::move(points);
  for (int j = 0; j < s; ++j) {
    int e = (int)rng.uniform(1, 3);
    int alpha = (int)rng.uniform(0, e);
    int beta = (int)rng.uniform(0, e - alpha);
    IntPoly m(3);
    m.add_term({alpha, beta, e - alpha - beta}, Int(1));
    inst.monomials.push_back(std::move(m));
  }
  return inst;
}

namespace {

// Substitute a small unimodular change of coordinates built from row
// operations on the identity images.
std::vector<IntPoly> unimodular_mix(Rng& rng, std::vector<IntPoly> gens,
                                    int ops) {
  std::vector<IntPoly> images;
  for (int v = 0; v < 4; ++v) images.push_back(IntPoly::variable(4, v));
  for (int k = 0; k < ops; ++k) {
    int i = (int)rng.uniform(0, 3);
    int j = (int)rng.uniform(0, 2);
    if (j >= i) ++j;
    if (rng.coin())
      images[i] = images[i] + images[j];
    else
      images[i] = images[i] - images[j];
  }
  for (auto& g : gens) g = g.compose(images);
  return gens;
}

}  // namespace

std::vector<SpaceCurve> generate_space_curves(std::uint64_t seed, int count) {
  if (count < 0) throw Error("bad corpus size");
  std::vector<std::string> vars = {"x0", "x1", "x2", "x3"};
  Rng rng(seed);
  std::vector<SpaceCurve> out;
  out.reserve(count);
  int planar_d = 0;
  long long attempts = 0;
  while ((int)out.size() < count) {
    if (++attempts > 400) throw Error("space-curve attempt cap exhausted");
    int slot = (int)out.size();
    SpaceCurve c;
    if (slot == 0) {
      c.gens = {poly_parse("x0*x2 - x1^2", vars),
                poly_parse("x0*x3^2 - 2*x1*x2*x3 + x2^3", vars)};
      c.degree = 3;
    } else if (slot % 3 == 0) {
      // (2,2) intersection; generically an integral elliptic quartic.
      c.gens = {random_poly_of_degree(rng, 4, 2, true, 2),
                random_poly_of_degree(rng, 4, 2, true, 2)};
      c.degree = 4;
    } else {
      int d = planar_d % 4 + 1;
      ++planar_d;
      CorpusSpec ps;
      ps.dmin = ps.dmax = d;
      ps.nvars = 3;
      ps.homogeneous = true;
      ps.coeff_bound = 3;
      ps.count = 1;
      ps.seed = rng.next();
      ps.irreducibility = IrrFilter::absolutely_irreducible;
      IntPoly g = generate_corpus(ps)[0].insert_var(3);
      c.gens = unimodular_mix(rng, {IntPoly::variable(4, 3), g},
                              (int)rng.uniform(2, 3));
      c.degree = d;
    }
    try {
      find_projection_center(c.gens, c.degree);
    } catch (const Error&) {
      continue;  // degenerate sample; try a fresh one
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace dgc
