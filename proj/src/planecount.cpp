#include "dgc/planecount.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>

#include "dgc/fppoly.hpp"
#include "dgc/polygcd.hpp"
#include "dgc/rootisol.hpp"

namespace dgc {

namespace {

constexpr std::array<int, 5> kSievePrimes = {13, 17, 19, 23, 29};

// bit table over (x0 mod m, x2 mod m): is there y with F = 0 mod m?
struct SieveTable {
  int m;
  std::vector<std::uint64_t> bits;

  bool test(int a, int c) const {
    unsigned idx = (unsigned)(a * m + c);
    return (bits[idx >> 6] >> (idx & 63)) & 1;
  }
};

SieveTable build_table(const IntPoly& F, int m) {
  SieveTable t;
  t.m = m;
  t.bits.assign(((std::size_t)m * m + 63) / 64, 0);
  // dense residue cube evaluation
  std::vector<std::array<int, 3>> terms;
  std::vector<int> coefs;
  for (const auto& [e, c] : F.terms()) {
    int r = (int)mod_reduce_big(c, m);
    if (r == 0) continue;
    terms.push_back({e[0], e[1], e[2]});
    coefs.push_back(r);
  }
  std::vector<std::vector<int>> pw(m);
  int maxe = 0;
  for (const auto& e : terms) maxe = std::max({maxe, e[0], e[1], e[2]});
  for (int v = 0; v < m; ++v) {
    pw[v].assign(maxe + 1, 1);
    for (int k = 1; k <= maxe; ++k) pw[v][k] = (pw[v][k - 1] * v) % m;
  }
  for (int a = 0; a < m; ++a)
    for (int c = 0; c < m; ++c) {
      bool hit = false;
      for (int y = 0; y < m && !hit; ++y) {
        long long s = 0;
        for (std::size_t i = 0; i < terms.size(); ++i)
          s += (long long)coefs[i] * pw[a][terms[i][0]] % m * pw[y][terms[i][1]] % m *
               pw[c][terms[i][2]] % m;
        if (s % m == 0) hit = true;
      }
      if (hit) {
        unsigned idx = (unsigned)(a * m + c);
        t.bits[idx >> 6] |= 1ull << (idx & 63);
      }
    }
  return t;
}

}  // namespace

std::vector<Int> plane_curve_counts(const IntPoly& F, const std::vector<long long>& thresholds) {
  if (F.nvars() != 3) throw Error("plane curve needs three variables");
  if (F.is_zero() || !F.is_homogeneous()) throw Error("input must be a nonzero form");
  if (thresholds.empty()) return {};
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    if (thresholds[i] < 1 || (i && thresholds[i] < thresholds[i - 1]))
      throw Error("thresholds must be ascending and positive");
  }
  const long long H = thresholds.back();

  // per-threshold counters; record(h) bumps every threshold >= h
  std::vector<long long> counters(thresholds.size(), 0);
  auto record = [&](long long h) {
    auto it = std::lower_bound(thresholds.begin(), thresholds.end(), h);
    for (std::size_t i = it - thresholds.begin(); i < counters.size(); ++i) ++counters[i];
  };

  // 128-bit budget: (deg+1) * deg! * max|coeff| * H^deg < 2^126
  const int d1 = F.degree_in(1);
  bool use_i128 = true;
  {
    Int fact = 1;
    for (int k = 2; k <= d1; ++k) fact *= k;
    Int worst = 0;
    auto cs = coeffs_in_var(F, 1);
    for (const auto& ck : cs) {
      Int t = 0;
      for (const auto& [e, c] : ck.terms()) t += abs(c) * pow(Int(H), e[0] + e[2]);
      if (t > worst) worst = t;
    }
    if ((d1 + 1) * fact * worst * pow(Int(H), d1) >= (Int(1) << 126)) use_i128 = false;
  }

  std::vector<SieveTable> tables;
  for (int m : kSievePrimes) tables.push_back(build_table(F, m));

  // coefficient support of F by x1-degree
  struct CT {
    int e0, e2;
    long long c_ll;
    Int c_big;
    bool small;
  };
  std::vector<std::vector<CT>> coef_terms(d1 + 1);
  for (const auto& [e, c] : F.terms()) {
    CT t;
    t.e0 = e[0];
    t.e2 = e[2];
    t.small = (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max());
    t.c_ll = t.small ? (long long)c : 0;
    t.c_big = c;
    coef_terms[e[1]].push_back(t);
  }
  const int maxd = F.total_degree();

  // power tables over [-H, H] for the inner coordinate
  std::vector<std::vector<__int128>> powc(2 * H + 1);
  if (use_i128)
    for (long long v = -H; v <= H; ++v) {
      auto& row = powc[v + H];
      row.assign(maxd + 1, (__int128)1);
      for (int k = 1; k <= maxd; ++k) row[k] = row[k - 1] * v;
    }

  std::vector<__int128> slice(d1 + 1);
  std::vector<Int> slice_big(d1 + 1);
  std::vector<__int128> powa(maxd + 1);
  std::vector<Int> powa_big(maxd + 1), powc_big(maxd + 1);

  // main family: x0 = a > 0, solve for x1 over slices (a, x2 = c)
  for (long long a = 1; a <= H; ++a) {
    if (use_i128) {
      powa[0] = 1;
      for (int k = 1; k <= maxd; ++k) powa[k] = powa[k - 1] * a;
    } else {
      powa_big[0] = 1;
      for (int k = 1; k <= maxd; ++k) powa_big[k] = powa_big[k - 1] * a;
    }
    std::array<int, kSievePrimes.size()> am{}, cm{};
    for (std::size_t i = 0; i < kSievePrimes.size(); ++i) {
      am[i] = (int)(a % kSievePrimes[i]);
      cm[i] = (int)(((-H) % kSievePrimes[i] + kSievePrimes[i]) % kSievePrimes[i]);
    }
    for (long long c = -H; c <= H; ++c) {
      bool pass = true;
      for (std::size_t i = 0; i < kSievePrimes.size(); ++i)
        if (!tables[i].test(am[i], cm[i])) {
          pass = false;
          break;
        }
      if (pass) {
        bool all_zero = true;
        if (use_i128) {
          for (int k = 0; k <= d1; ++k) {
            __int128 s = 0;
            for (const auto& t : coef_terms[k]) s += (__int128)t.c_ll * powa[t.e0] * powc[c + H][t.e2];
            slice[k] = s;
            if (s != 0) all_zero = false;
          }
        } else {
          powc_big[0] = 1;
          for (int k = 1; k <= maxd; ++k) powc_big[k] = powc_big[k - 1] * c;
          for (int k = 0; k <= d1; ++k) {
            Int s = 0;
            for (const auto& t : coef_terms[k]) s += t.c_big * powa_big[t.e0] * powc_big[t.e2];
            slice_big[k] = s;
            if (s != 0) all_zero = false;
          }
        }
        if (all_zero) {
          // the whole line x0 = a, x2 = c lies on the curve
          for (long long b = -H; b <= H; ++b)
            if (std::gcd(std::gcd(a, b < 0 ? -b : b), c < 0 ? -c : c) == 1)
              record(std::max({a, b < 0 ? -b : b, c < 0 ? -c : c}));
        } else {
          auto roots = use_i128 ? integer_roots_in_i128(slice, -H, H)
                                : integer_roots_in(slice_big, -H, H);
          for (long long b : roots) {
            long long ab = b < 0 ? -b : b, ac = c < 0 ? -c : c;
            if (std::gcd(std::gcd(a, ab), ac) == 1) record(std::max({a, ab, ac}));
          }
        }
      }
      for (std::size_t i = 0; i < kSievePrimes.size(); ++i)
        if (++cm[i] == kSievePrimes[i]) cm[i] = 0;
    }
  }

  // boundary family: x0 = 0, x1 = b > 0, solve for x2
  {
    IntPoly F0 = F.eval_partial(0, 0);
    auto cs2 = coeffs_in_var(F0, 2);  // coefficients in x2, entries in x1 only
    for (long long b = 1; b <= H; ++b) {
      std::vector<Int> uni(cs2.size());
      bool all_zero = true;
      for (std::size_t k = 0; k < cs2.size(); ++k) {
        Int v = 0;
        for (const auto& [e, c] : cs2[k].terms()) v += c * pow(Int(b), e[1]);
        uni[k] = v;
        if (v != 0) all_zero = false;
      }
      if (all_zero) {
        for (long long c = -H; c <= H; ++c)
          if (std::gcd(b, c < 0 ? -c : c) == 1) record(std::max(b, c < 0 ? -c : c));
      } else if (cs2.size() >= 1) {
        for (long long c : integer_roots_in(uni, -H, H))
          if (std::gcd(b, c < 0 ? -c : c) == 1) record(std::max(b, c < 0 ? -c : c));
      }
    }
  }

  // the point (0 : 0 : 1)
  {
    std::vector<Int> pt = {0, 0, 1};
    if (F.eval(pt) == 0) record(1);
  }

  std::vector<Int> out;
  out.reserve(counters.size());
  for (long long v : counters) out.push_back(v);
  return out;
}

}  // namespace dgc
