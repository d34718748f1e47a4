#include <doctest.h>

#include "dgc/fppoly.hpp"
#include "dgc/irreducibility.hpp"
#include "oracles/oracles.hpp"

using namespace dgc;

namespace {
const std::vector<std::string> XY = {"x", "y"};
const std::vector<std::string> PROJ = {"x0", "x1", "x2"};
IntPoly P(const std::string& s) { return poly_parse(s, XY); }
IntPoly H(const std::string& s) { return poly_parse(s, PROJ); }
}  // namespace

TEST_CASE("absolute irreducibility over the rationals") {
  CHECK_FALSE(absolutely_irreducible(P("x^2 - y^2")));
  CHECK_FALSE(absolutely_irreducible(P("x^2 + y^2")));  // splits over Q(i)
  CHECK(absolutely_irreducible(P("y - x^2")));
  CHECK(absolutely_irreducible(P("y^2 - x^5 - x - 1")));
  CHECK(absolutely_irreducible(P("x^2 + y^2 - 1")));
  CHECK_THROWS_AS(absolutely_irreducible(P("(x + y)^2")), Error);
}

TEST_CASE("absolute irreducibility over prime fields above the degree threshold") {
  // d = 2 needs p > 27 * 16 = 432
  CHECK_FALSE(absolutely_irreducible(reduce_mod_p(P("x^2 - y^2"), 433)));
  CHECK(absolutely_irreducible(reduce_mod_p(P("x^2 + y^2 - 1"), 433)));
  CHECK(count_absolute_factors(reduce_mod_p(P("x^2 - y^2"), 433)) == 2);
  // 433 = 1 mod 4, so -1 is a square and x^2 + y^2 splits already over F_433
  CHECK(count_absolute_factors(reduce_mod_p(P("x^2 + y^2"), 433)) == 2);
  CHECK_THROWS_AS(absolutely_irreducible(reduce_mod_p(P("x^2 - y^2"), 101)), Error);
}

TEST_CASE("factor counts match the independent factorization oracle") {
  // p = 2203 clears the 27 d^4 threshold for every degree-3 entry
  for (const char* s : {"y - x^2", "x^2 - y^2", "x^2 + y^2", "x^2 + y^2 - 1",
                        "y^2 - x^3 - 1", "x*y - 1", "y^3 - x^2 + x*y"}) {
    IntPoly f = P(s);
    CHECK(count_absolute_factors(f) == oracle::absolute_factor_count_q(f, 99));
    CHECK(count_absolute_factors(reduce_mod_p(f, 2203)) ==
          oracle::absolute_factor_count_fp(f, 2203));
  }
}

TEST_CASE("lenient reduction predicate") {
  IntPoly f = P("x^2 + y^2 - 1");
  CHECK(reduction_absolutely_irreducible(f, 433));
  CHECK_FALSE(reduction_absolutely_irreducible(P("x^2 - y^2"), 433));
  CHECK_FALSE(reduction_absolutely_irreducible(P("433*x*y + 433"), 433));  // reduction zero
  CHECK_FALSE(reduction_absolutely_irreducible(P("(x + y)^2"), 433));      // not squarefree
  CHECK(reduction_absolutely_irreducible(P("x - y"), 433));
  CHECK_FALSE(reduction_absolutely_irreducible(P("x^2 - 1"), 433));  // y-free, two lines
}

TEST_CASE("trivariate form predicate") {
  CHECK(absolutely_irreducible_form(H("x0*x2 - x1^2")));
  CHECK(absolutely_irreducible_form(H("x0")));  // linear forms pass
  CHECK(absolutely_irreducible_form(H("x0^2 + x1^2 + x2^2")));
  CHECK_FALSE(absolutely_irreducible_form(H("x0*x1")));
  CHECK_FALSE(absolutely_irreducible_form(H("x0^2 - x1^2")));
  CHECK_FALSE(absolutely_irreducible_form(H("x0^2*x1 + x0*x1^2")));  // coordinate divisor
  CHECK_THROWS_AS(absolutely_irreducible_form(H("x0 + 1")), Error);  // not homogeneous? degree mix
}

TEST_CASE("edge criterion is sufficient, never contradicts") {
  CHECK(gao_edge_criterion(P("y^2 - x^5 - x - 1")));
  CHECK_FALSE(gao_edge_criterion(P("y^2 - x^4")));  // gcd(4, 2) = 2
  CHECK(gao_edge_criterion(P("y^3 - x^2 + x*y")));  // 1*2 + 1*3 = 5 < 6
  CHECK_FALSE(gao_edge_criterion(P("x*y")));        // no pure powers

  for (const char* s : {"y^2 - x^5 - x - 1", "y^3 - x^2 + x*y", "y - x^2"}) {
    if (gao_edge_criterion(P(s))) CHECK(absolutely_irreducible(P(s)));
  }
}

TEST_CASE("newton polytope of a box support") {
  NewtonPolytope np = newton_polytope(P("1 + x^2 + y^2 + x^2*y^2"));
  REQUIRE(np.vertices.size() == 4);
  CHECK(np.vertices[0][0] == 0);
  CHECK(np.vertices[0][1] == 0);
  CHECK(np.edges.size() == 4);

  NewtonPolytope seg = newton_polytope(P("x + y"));
  CHECK(seg.vertices.size() == 2);
}
