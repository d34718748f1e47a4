#pragma once

#include <cstdint>
#include <random>

namespace dgc {

// Seeded deterministic source.  All sampling goes through the folded
// helpers below rather than std distributions, whose output is
// implementation-defined; corpora and experiments must replay bit-for-bit
// across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [lo, hi] up to the (negligible) modulo fold.
  long long uniform(long long lo, long long hi);

  bool coin() { return next() & 1; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace dgc
