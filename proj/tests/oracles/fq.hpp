#pragma once

// Self-contained arithmetic in F_{p^k}, k <= 5, for the factorization
// oracles.  Elements are length-k coefficient vectors over F_p; nothing here
// may call into the library under test.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace oracle {

using i64 = std::int64_t;

i64 mod_mul(i64 a, i64 b, i64 p);
i64 mod_pow(i64 a, i64 e, i64 p);
i64 mod_inv(i64 a, i64 p);

// Dense F_p[t], index = exponent, no trailing (leading-term) zeros.
using PPoly = std::vector<i64>;

struct Fq {
  i64 p = 2;
  int k = 1;
  PPoly modulus;  // monic irreducible of degree k
};

// Deterministic modulus search; throws when none of the scanned candidates
// is irreducible (does not happen for k <= 5).
Fq make_fq(i64 p, int k);

using El = std::vector<i64>;  // length k

El el_zero(const Fq& F);
El el_one(const Fq& F);
El el_from(const Fq& F, i64 c);
bool el_is_zero(const El& a);
El el_add(const Fq& F, El a, const El& b);
El el_sub(const Fq& F, El a, const El& b);
El el_mul(const Fq& F, const El& a, const El& b);
El el_inv(const Fq& F, const El& a);

}  // namespace oracle
