#pragma once

#include <cstdint>

#include "dgc/common.hpp"

namespace dgc {

// Modular arithmetic on int64 residues; p < 2^62 so sums stay in range and
// products go through 128-bit intermediates.
inline std::int64_t mod_reduce(std::int64_t a, std::int64_t p) {
  std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

inline std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return (std::int64_t)((__int128)a * b % p);
}

inline std::int64_t add_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
  std::int64_t r = a + b;
  return r >= p ? r - p : r;
}

inline std::int64_t sub_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
  std::int64_t r = a - b;
  return r < 0 ? r + p : r;
}

std::int64_t pow_mod(std::int64_t a, std::uint64_t e, std::int64_t p);
std::int64_t inv_mod(std::int64_t a, std::int64_t p);

bool is_prime_u64(std::uint64_t n);

// Primes in [lo, hi] by sieve; hi capped at desk scale.
std::vector<std::int64_t> primes_in(std::int64_t lo, std::int64_t hi);

// Residue of a big integer.
std::int64_t mod_reduce_big(const Int& a, std::int64_t p);

}  // namespace dgc
