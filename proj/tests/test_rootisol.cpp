#include <doctest.h>

#include "dgc/rootisol.hpp"

using namespace dgc;

namespace {
// coefficients of (y - 2)(y + 3)(y - 10) = y^3 - 9y^2 - 16y + 60
const std::vector<Int> CUBIC = {Int(60), Int(-16), Int(-9), Int(1)};
}  // namespace

TEST_CASE("integer roots are found exactly and in order") {
  CHECK(integer_roots_in(CUBIC, -100, 100) == std::vector<long long>{-3, 2, 10});
  CHECK(integer_roots_in(CUBIC, -2, 9) == std::vector<long long>{2});
  CHECK(integer_roots_in(CUBIC, 11, 50).empty());
  CHECK(integer_roots_in(CUBIC, 2, 2) == std::vector<long long>{2});
}

TEST_CASE("repeated roots are listed once") {
  // (y - 1)^2
  CHECK(integer_roots_in({Int(1), Int(-2), Int(1)}, -5, 5) == std::vector<long long>{1});
}

TEST_CASE("degenerate inputs") {
  CHECK(integer_roots_in({Int(7)}, -10, 10).empty());       // nonzero constant
  CHECK(integer_roots_in({Int(0), Int(1)}, -3, 3) == std::vector<long long>{0});
  CHECK(integer_roots_in({Int(-5), Int(1)}, -3, 3).empty());  // root outside range
}

TEST_CASE("large coefficients stay exact") {
  // (y - 10^9)(y + 1)
  Int r("1000000000");
  std::vector<Int> f = {-r, Int(1) - r, Int(1)};
  auto roots = integer_roots_in(f, -2000000000LL, 2000000000LL);
  CHECK(roots == std::vector<long long>{-1, 1000000000LL});
}

TEST_CASE("128-bit fast path agrees with the exact path") {
  std::vector<__int128> f = {60, -16, -9, 1};
  CHECK(integer_roots_in_i128(f, -100, 100) == std::vector<long long>{-3, 2, 10});
}
