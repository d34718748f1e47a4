#include "dgc/enumerate.hpp"

#include <algorithm>
#include <numeric>

namespace dgc {

namespace {

constexpr std::size_t kRetainCap = 200000;

// Per-value power tables so each candidate costs one multiply per variable.
template <class T>
struct BoxEval {
  int nvars;
  long long B;
  int maxdeg;
  std::vector<std::vector<T>> pw;  // pw[v + B][e] = v^e
  const IntPoly* f;

  BoxEval(const IntPoly& poly, long long bound) : nvars(poly.nvars()), B(bound), f(&poly) {
    maxdeg = 0;
    for (const auto& [e, c] : poly.terms())
      for (int x : e) maxdeg = std::max(maxdeg, x);
    pw.resize(2 * B + 1);
    for (long long v = -B; v <= B; ++v) {
      auto& row = pw[v + B];
      row.assign(maxdeg + 1, T(1));
      for (int e = 1; e <= maxdeg; ++e) row[e] = row[e - 1] * T(v);
    }
  }

  bool is_zero_at(const std::vector<long long>& x) const {
    T s(0);
    for (const auto& [e, c] : f->terms()) {
      T t((long long)0);
      if constexpr (std::is_same_v<T, Int>) t = c;
      else t = (long long)c;
      for (int i = 0; i < nvars; ++i)
        if (e[i]) t *= pw[x[i] + B][e[i]];
      s += t;
    }
    return s == 0;
  }
};

// Largest possible |f(x)| over the box; decides the int64 fast path.
Int box_value_bound(const IntPoly& f, const Int& B) {
  Int s = 0;
  for (const auto& [e, c] : f.terms()) {
    Int t = abs(c);
    for (int i = 0; i < f.nvars(); ++i)
      if (e[i]) t *= pow(B, e[i]);
    s += t;
  }
  return s;
}

bool fits_int64(const std::vector<IntPoly>& gens, const Int& B) {
  if (B > 1000000) return false;
  Int cap = Int(1) << 62;
  for (const auto& g : gens)
    if (box_value_bound(g, B) >= cap) return false;
  return true;
}

void check_work(const Int& candidates) {
  if (candidates > work_limit())
    throw WorkLimitError("enumeration would scan " + candidates.str() +
                         " candidates, over the configured limit");
}

template <class T>
CountResult affine_scan(const std::vector<IntPoly>& gens, const Int& B, bool retain) {
  const int nv = gens[0].nvars();
  const long long b = (long long)B;
  std::vector<BoxEval<T>> evals;
  evals.reserve(gens.size());
  for (const auto& g : gens) evals.emplace_back(g, b);

  CountResult res;
  res.bound = B;
  res.mode = CountMode::affine;
  std::vector<AffinePoint> pts;
  bool keeping = retain;

  std::vector<long long> x(nv, -b);
  for (;;) {
    bool zero = true;
    for (const auto& ev : evals)
      if (!ev.is_zero_at(x)) {
        zero = false;
        break;
      }
    if (zero) {
      res.count += 1;
      if (keeping) {
        AffinePoint P;
        P.coords.assign(x.begin(), x.end());
        pts.push_back(std::move(P));
        if (pts.size() > kRetainCap) {
          keeping = false;
          pts.clear();
        }
      }
    }
    int i = nv - 1;
    while (i >= 0 && x[i] == b) x[i--] = -b;
    if (i < 0) break;
    ++x[i];
  }
  if (keeping) res.affine_points = std::move(pts);
  return res;
}

template <class T>
CountResult proj_scan(const std::vector<IntPoly>& gens, const Int& B, bool retain) {
  const int nv = gens[0].nvars();
  const long long b = (long long)B;
  std::vector<BoxEval<T>> evals;
  evals.reserve(gens.size());
  for (const auto& g : gens) evals.emplace_back(g, b);

  CountResult res;
  res.bound = B;
  res.mode = CountMode::projective;
  std::vector<ProjPoint> pts;
  bool keeping = retain;

  std::vector<long long> x(nv, 0);
  for (int lead = 0; lead < nv; ++lead) {
    // coords before lead are 0, x[lead] in [1, B], the rest free
    std::fill(x.begin(), x.end(), 0LL);
    x[lead] = 1;
    for (int i = lead + 1; i < nv; ++i) x[i] = -b;
    for (;;) {
      bool zero = true;
      for (const auto& ev : evals)
        if (!ev.is_zero_at(x)) {
          zero = false;
          break;
        }
      if (zero) {
        long long g = 0;
        for (int i = lead; i < nv; ++i) g = std::gcd(g, x[i] < 0 ? -x[i] : x[i]);
        if (g == 1) {
          res.count += 1;
          if (keeping) {
            ProjPoint P;
            P.coords.assign(x.begin(), x.end());
            pts.push_back(std::move(P));
            if (pts.size() > kRetainCap) {
              keeping = false;
              pts.clear();
            }
          }
        }
      }
      int i = nv - 1;
      while (i > lead && x[i] == b) x[i--] = -b;
      if (i == lead) {
        if (x[lead] == b) break;
        ++x[lead];
      } else {
        ++x[i];
      }
    }
  }
  if (keeping) res.proj_points = std::move(pts);
  return res;
}

void validate_gens(const std::vector<IntPoly>& gens, bool homogeneous) {
  if (gens.empty()) throw Error("no generators");
  int nv = gens[0].nvars();
  for (const auto& g : gens) {
    if (g.is_zero()) throw Error("zero polynomial rejected");
    if (g.nvars() != nv) throw Error("variable count mismatch");
    if (homogeneous && !g.is_homogeneous()) throw Error("polynomial not homogeneous");
  }
}

CountResult dispatch_affine(const std::vector<IntPoly>& gens, const Int& B, bool retain) {
  validate_gens(gens, false);
  if (B < 1) throw Error("bound must be positive");
  int nv = gens[0].nvars();
  check_work(pow(Int(2 * B + 1), nv));
  if (fits_int64(gens, B)) return affine_scan<long long>(gens, B, retain);
  return affine_scan<Int>(gens, B, retain);
}

CountResult dispatch_proj(const std::vector<IntPoly>& gens, const Int& B, bool retain) {
  validate_gens(gens, true);
  if (B < 1) throw Error("bound must be positive");
  int nv = gens[0].nvars();
  Int candidates = 0;
  for (int lead = 0; lead < nv; ++lead) candidates += B * pow(Int(2 * B + 1), nv - 1 - lead);
  check_work(candidates);
  if (fits_int64(gens, B)) return proj_scan<long long>(gens, B, retain);
  return proj_scan<Int>(gens, B, retain);
}

}  // namespace

CountResult enumerate_affine(const IntPoly& f, const Int& B, bool retain_points) {
  return dispatch_affine({f}, B, retain_points);
}

CountResult enumerate_projective(const IntPoly& F, const Int& B, bool retain_points) {
  return dispatch_proj({F}, B, retain_points);
}

CountResult enumerate_projective_system(const std::vector<IntPoly>& gens, const Int& B,
                                        bool retain_points) {
  return dispatch_proj(gens, B, retain_points);
}

CountResult enumerate_affine_system(const std::vector<IntPoly>& gens, const Int& B,
                                    bool retain_points) {
  return dispatch_affine(gens, B, retain_points);
}

Int schwarz_zippel_bound(int d, int m, const Int& B) {
  return Int(d) * pow(Int(2 * B + 1), m);
}

SchwarzZippelReport check_schwarz_zippel(const IntPoly& f, const Int& B) {
  if (f.is_zero()) throw Error("zero polynomial rejected");
  SchwarzZippelReport rep;
  rep.bound = schwarz_zippel_bound(f.total_degree(), f.nvars() - 1, B);
  rep.count = enumerate_affine(f, B, false).count;
  rep.pass = rep.count <= rep.bound;
  return rep;
}

AffinePoint find_point_off_variety(const IntPoly& f, int d) {
  if (f.is_zero()) throw Error("zero polynomial rejected");
  if (f.total_degree() > d) throw Error("degree exceeds stated bound");
  const int nv = f.nvars();
  // value order 0, 1, -1, 2, -2, ..., d, -d per coordinate
  std::vector<Int> order;
  order.push_back(0);
  for (int v = 1; v <= d; ++v) {
    order.push_back(v);
    order.push_back(-v);
  }
  std::vector<int> idx(nv, 0);
  std::vector<Int> pt(nv, 0);
  for (;;) {
    for (int i = 0; i < nv; ++i) pt[i] = order[idx[i]];
    if (f.eval(pt) != 0) return AffinePoint{pt};
    int i = nv - 1;
    while (i >= 0 && idx[i] + 1 == (int)order.size()) idx[i--] = 0;
    if (i < 0) break;
    ++idx[i];
  }
  throw Error("internal: no point off the variety within the stated box");
}

}  // namespace dgc
