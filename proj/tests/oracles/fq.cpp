#include "oracles/fq.hpp"

namespace oracle {

i64 mod_mul(i64 a, i64 b, i64 p) { return (i64)((__int128)a * b % p); }

i64 mod_pow(i64 a, i64 e, i64 p) {
  i64 r = 1 % p;
  a %= p;
  if (a < 0) a += p;
  while (e > 0) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

i64 mod_inv(i64 a, i64 p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw std::runtime_error("oracle: division by zero mod p");
  return mod_pow(a, p - 2, p);
}

namespace {

void ptrim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int pdeg(const PPoly& a) { return (int)a.size() - 1; }

PPoly psub(PPoly a, const PPoly& b, i64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
  ptrim(a);
  return a;
}

PPoly pmul(const PPoly& a, const PPoly& b, i64 p) {
  if (a.empty() || b.empty()) return {};
  PPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + (__int128)a[i] * b[j]) % p;
  }
  ptrim(c);
  return c;
}

PPoly prem(PPoly a, const PPoly& b, i64 p) {
  i64 linv = mod_inv(b.back(), p);
  while (pdeg(a) >= pdeg(b)) {
    i64 c = mod_mul(a.back(), linv, p);
    int shift = pdeg(a) - pdeg(b);
    for (std::size_t j = 0; j < b.size(); ++j)
      a[j + shift] = ((a[j + shift] - mod_mul(c, b[j], p)) % p + p) % p;
    ptrim(a);
  }
  return a;
}

PPoly pgcd(PPoly a, PPoly b, i64 p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    PPoly r = prem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    i64 linv = mod_inv(a.back(), p);
    for (i64& c : a) c = mod_mul(c, linv, p);
  }
  return a;
}

PPoly ppowmod(PPoly base, i64 e, const PPoly& m, i64 p) {
  PPoly r = {1};
  base = prem(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) r = prem(pmul(r, base, p), m, p);
    base = prem(pmul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

// t^(p^i) mod m by i successive p-th powers.
PPoly frobenius_power(const PPoly& m, i64 p, int i) {
  PPoly u = {0, 1};
  for (int j = 0; j < i; ++j) u = ppowmod(std::move(u), p, m, p);
  return u;
}

bool pirreducible(const PPoly& m, i64 p) {
  int k = pdeg(m);
  PPoly t = {0, 1};
  PPoly frob = frobenius_power(m, p, k);
  if (psub(frob, t, p) != PPoly{}) return false;
  for (int l = 2; l <= k; ++l) {
    if (k % l != 0) continue;
    bool prime = true;
    for (int q = 2; q * q <= l; ++q)
      if (l % q == 0) prime = false;
    if (!prime) continue;
    PPoly g = pgcd(m, psub(frobenius_power(m, p, k / l), t, p), p);
    if (pdeg(g) != 0) return false;
  }
  return true;
}

}  // namespace

Fq make_fq(i64 p, int k) {
  if (p < 2 || k < 1 || k > 5) throw std::runtime_error("oracle: bad field parameters");
  Fq F;
  F.p = p;
  F.k = k;
  if (k == 1) {
    F.modulus = {0, 1};
    return F;
  }
  // seeded search over full lower coefficients; an irreducible monic of
  // degree k has density ~1/k, so a few draws suffice
  std::uint64_t state = 0x6a09e667f3bcc909ULL ^ (std::uint64_t)p ^ ((std::uint64_t)k << 56);
  auto next = [&state]() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  for (int tries = 0; tries < 20000; ++tries) {
    PPoly m(k + 1, 0);
    m[k] = 1;
    for (int i = 0; i < k; ++i) m[i] = (i64)(next() % (std::uint64_t)p);
    if (m[0] == 0) m[0] = 1;
    if (pirreducible(m, p)) {
      F.modulus = m;
      return F;
    }
  }
  throw std::runtime_error("oracle: no irreducible modulus found");
}

El el_zero(const Fq& F) { return El(F.k, 0); }

El el_one(const Fq& F) {
  El a(F.k, 0);
  a[0] = 1 % F.p;
  return a;
}

El el_from(const Fq& F, i64 c) {
  El a(F.k, 0);
  a[0] = (c % F.p + F.p) % F.p;
  return a;
}

bool el_is_zero(const El& a) {
  for (i64 c : a)
    if (c != 0) return false;
  return true;
}

El el_add(const Fq& F, El a, const El& b) {
  for (int i = 0; i < F.k; ++i) a[i] = (a[i] + b[i]) % F.p;
  return a;
}

El el_sub(const Fq& F, El a, const El& b) {
  for (int i = 0; i < F.k; ++i) a[i] = ((a[i] - b[i]) % F.p + F.p) % F.p;
  return a;
}

El el_mul(const Fq& F, const El& a, const El& b) {
  std::vector<i64> c(2 * F.k - 1, 0);
  for (int i = 0; i < F.k; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < F.k; ++j)
      c[i + j] = (c[i + j] + (__int128)a[i] * b[j]) % F.p;
  }
  for (int i = 2 * F.k - 2; i >= F.k; --i) {
    if (c[i] == 0) continue;
    i64 lead = c[i];
    c[i] = 0;
    for (int j = 0; j < F.k; ++j)
      c[i - F.k + j] =
          ((c[i - F.k + j] - mod_mul(lead, F.modulus[j], F.p)) % F.p + F.p) %
          F.p;
  }
  return El(c.begin(), c.begin() + F.k);
}

El el_inv(const Fq& F, const El& a) {
  if (el_is_zero(a)) throw std::runtime_error("oracle: inverse of zero");
  if (F.k == 1) return {mod_inv(a[0], F.p)};
  // extended euclid on (a, modulus) in F_p[t]
  PPoly r0 = F.modulus, r1(a);
  ptrim(r1);
  PPoly s0 = {}, s1 = {1};
  while (pdeg(r1) > 0) {
    // one division step: r0 = q r1 + r2
    PPoly q;
    PPoly rem = r0;
    i64 linv = mod_inv(r1.back(), F.p);
    q.assign(pdeg(r0) - pdeg(r1) + 1, 0);
    while (pdeg(rem) >= pdeg(r1)) {
      i64 c = mod_mul(rem.back(), linv, F.p);
      int shift = pdeg(rem) - pdeg(r1);
      q[shift] = c;
      for (std::size_t j = 0; j < r1.size(); ++j)
        rem[j + shift] =
            ((rem[j + shift] - mod_mul(c, r1[j], F.p)) % F.p + F.p) % F.p;
      ptrim(rem);
    }
    PPoly s2 = psub(s0, pmul(q, s1, F.p), F.p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw std::runtime_error("oracle: element not invertible");
  i64 linv = mod_inv(r1[0], F.p);
  El out(F.k, 0);
  for (std::size_t i = 0; i < s1.size(); ++i) out[i] = mod_mul(s1[i], linv, F.p);
  return out;
}

}  // namespace oracle
