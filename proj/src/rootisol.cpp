#include "dgc/rootisol.hpp"

#include <algorithm>

namespace dgc {

namespace {

// The cell subdivision views the real line as unit fundamental domains
// [c, c+1).  cells(h) returns a finite superset of the cells that contain a
// real root of h, restricted to c in [lo, hi].  Completeness argument: a cell
// of h' (reported recursively) is always reported; between two consecutive
// reported cells h' has no root, so h is strictly monotone there and a single
// sign change or endpoint zero finds the at-most-one root of that stretch.

template <class T>
T horner(const std::vector<T>& c, long long y) {
  T s(0);
  for (std::size_t i = c.size(); i-- > 0;) s = s * T(y) + c[i];
  return s;
}

template <class T>
int sgn(const T& v) {
  if (v == 0) return 0;
  return v < 0 ? -1 : 1;
}

template <class T>
std::vector<T> strip(const std::vector<T>& c) {
  std::vector<T> r = c;
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

template <class T>
std::vector<T> derivative(const std::vector<T>& c) {
  std::vector<T> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * T((long long)k));
  return d;
}

// floor(-b/a) for the linear polynomial a*y + b, kept in T to avoid overflow
template <class T>
T linear_root_floor(const T& a, const T& b) {
  T num = -b, den = a;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  T q = num / den;  // truncation toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

template <class T>
void cells(const std::vector<T>& h, long long lo, long long hi, std::vector<long long>& out) {
  if (lo > hi) return;
  int deg = (int)h.size() - 1;
  if (deg <= 0) return;
  if (deg == 1) {
    T c = linear_root_floor(h[1], h[0]);
    if (T(lo) <= c && c <= T(hi)) out.push_back((long long)c);
    return;
  }
  std::vector<long long> crit;
  cells(strip(derivative(h)), lo, hi, crit);
  std::sort(crit.begin(), crit.end());
  crit.erase(std::unique(crit.begin(), crit.end()), crit.end());
  for (long long c : crit) out.push_back(c);

  auto scan_segment = [&](long long a, long long b) {
    if (a > b) return;
    T va = horner(h, a);
    if (va == 0) out.push_back(a);
    if (a == b) return;
    T vb = horner(h, b);
    if (vb == 0) out.push_back(b);
    if (sgn(va) * sgn(vb) >= 0) return;
    while (b - a > 1) {
      long long m = a + (b - a) / 2;
      T vm = horner(h, m);
      if (vm == 0) {
        out.push_back(m);
        return;
      }
      if (sgn(va) * sgn(vm) < 0) b = m;
      else a = m, va = vm;
    }
    out.push_back(a);
  };

  long long p = lo;
  for (long long c : crit) {
    scan_segment(p, c);
    p = c + 1;
  }
  scan_segment(p, hi);
}

template <class T>
std::vector<long long> roots_impl(std::vector<T> c, long long lo, long long hi) {
  std::vector<long long> roots;
  c = strip(c);
  if (c.empty()) throw Error("integer root search on zero polynomial");
  // factor out y^k
  std::size_t k = 0;
  while (k < c.size() && c[k] == 0) ++k;
  if (k > 0) {
    if (lo <= 0 && 0 <= hi) roots.push_back(0);
    c.erase(c.begin(), c.begin() + k);
  }
  if (c.size() > 1) {
    std::vector<long long> cand;
    cells(c, lo, hi, cand);
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (long long y : cand)
      if (horner(c, y) == 0) roots.push_back(y);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

std::vector<long long> integer_roots_in(const std::vector<Int>& coeffs, long long lo,
                                        long long hi) {
  return roots_impl<Int>(coeffs, lo, hi);
}

std::vector<long long> integer_roots_in_i128(const std::vector<__int128>& coeffs, long long lo,
                                             long long hi) {
  return roots_impl<__int128>(coeffs, lo, hi);
}

}  // namespace dgc
