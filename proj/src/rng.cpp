#include "dgc/rng.hpp"

#include "dgc/common.hpp"

namespace dgc {

long long Rng::uniform(long long lo, long long hi) {
  if (lo > hi) throw Error("empty sampling range");
  std::uint64_t span = std::uint64_t(hi - lo) + 1;
  return lo + (long long)(next() % span);
}

}  // namespace dgc
