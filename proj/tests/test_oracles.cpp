#include <doctest.h>

#include "dgc/intpoly.hpp"
#include "oracles/oracles.hpp"

using namespace dgc;

namespace {
const std::vector<std::string> XY = {"x", "y"};
IntPoly P(const std::string& s) { return poly_parse(s, XY); }
}  // namespace

TEST_CASE("factor counts over closures of prime fields on known splits") {
  // x^2 - y^2 = (x-y)(x+y) everywhere
  CHECK(oracle::absolute_factor_count_fp(P("x^2 - y^2"), 7) == 2);
  CHECK(oracle::absolute_factor_count_fp(P("x^2 - y^2"), 101) == 2);

  // x^2 + y^2 splits over the closure for every odd p, whether or not -1
  // is a square mod p
  CHECK(oracle::absolute_factor_count_fp(P("x^2 + y^2"), 5) == 2);
  CHECK(oracle::absolute_factor_count_fp(P("x^2 + y^2"), 7) == 2);

  // x^2 - 2y^2: 2 is a square mod 7, not mod 5; the closure count is 2 both ways
  CHECK(oracle::absolute_factor_count_fp(P("x^2 - 2*y^2"), 7) == 2);
  CHECK(oracle::absolute_factor_count_fp(P("x^2 - 2*y^2"), 5) == 2);

  CHECK(oracle::absolute_factor_count_fp(P("y - x^2"), 13) == 1);
  CHECK(oracle::absolute_factor_count_fp(P("y^2 - x^3"), 7) == 1);
  CHECK(oracle::absolute_factor_count_fp(P("(x + y)*(x - y)*(x + y + 1)"), 11) == 3);
  CHECK(oracle::absolute_factor_count_fp(P("x^2 + 1"), 7) == 2);
  CHECK(oracle::absolute_factor_count_fp(P("y^2 - x^5 - x - 1"), 17) == 1);
}

TEST_CASE("irreducibility over closures of prime fields") {
  CHECK(oracle::absolutely_irreducible_fp(P("y - x^2"), 7));
  CHECK_FALSE(oracle::absolutely_irreducible_fp(P("x^2 - y^2"), 7));
  CHECK_FALSE(oracle::absolutely_irreducible_fp(P("(x + y)^2"), 7));   // not squarefree
  CHECK_FALSE(oracle::absolutely_irreducible_fp(P("7*x + 14*y"), 7));  // reduction zero
}

TEST_CASE("non-squarefree reductions are flagged, not miscounted") {
  CHECK_THROWS_AS(oracle::absolute_factor_count_fp(P("(x + y)^2"), 7), oracle::BadReduction);
  CHECK_THROWS_AS(oracle::absolute_factor_count_fp(P("x^2 - 7*y"), 7), oracle::BadReduction);
}

TEST_CASE("factor counts over the rationals' closure") {
  CHECK(oracle::absolute_factor_count_q(P("y^2 - x^5 - x - 1"), 1) == 1);
  CHECK(oracle::absolute_factor_count_q(P("x^2 - y^2"), 2) == 2);
  CHECK(oracle::absolute_factor_count_q(P("x^2 + y^2"), 3) == 2);  // splits over Q(i)
  CHECK(oracle::absolute_factor_count_q(P("(x + y)*(x - y)*(x + y + 1)"), 4) == 3);
  CHECK(oracle::absolutely_irreducible_q(P("y - x^2"), 5));
  CHECK_FALSE(oracle::absolutely_irreducible_q(P("x^2 - 3*y^2"), 6));
  CHECK_THROWS_AS(oracle::absolute_factor_count_q(P("(x + y)^2"), 7), oracle::BadReduction);
}

TEST_CASE("deterministic primality") {
  CHECK(oracle::is_prime_u64(2));
  CHECK(oracle::is_prime_u64(1000000007ULL));
  CHECK(oracle::is_prime_u64(2305843009213693951ULL));  // 2^61 - 1
  CHECK_FALSE(oracle::is_prime_u64(1));
  CHECK_FALSE(oracle::is_prime_u64(561));  // Carmichael
  CHECK_FALSE(oracle::is_prime_u64(2305843009213693953ULL));
}

TEST_CASE("graded quotient dimensions by explicit elimination") {
  CHECK(oracle::graded_quotient_dim(2, 2, 1) == 3);
  CHECK(oracle::graded_quotient_dim(2, 2, 3) == 7);
  CHECK(oracle::graded_quotient_dim(1, 1, 5) == 1);
  CHECK(oracle::graded_quotient_dim(1, 3, 0) == 1);
  CHECK(oracle::graded_quotient_dim(2, 1, 1) == 2);
  CHECK(oracle::graded_quotient_dim(3, 5, 4) == 35);  // below mu: full dimension
}
