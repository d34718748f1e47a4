#include <doctest.h>

#include <cmath>

#include "dgc/chebyshev.hpp"
#include "dgc/detmethod.hpp"
#include "oracles/oracles.hpp"

using namespace dgc;

namespace {
const std::vector<std::string> PROJ = {"x0", "x1", "x2"};
IntPoly H(const std::string& s) { return poly_parse(s, PROJ); }
}  // namespace

TEST_CASE("graded dimensions of the singular stalk") {
  CHECK(stalk_hilbert(2, 2, 1) == 3);
  CHECK(stalk_hilbert(2, 2, 3) == 7);   // C(5,2) - C(3,2)
  CHECK(stalk_hilbert(1, 1, 5) == 1);
  CHECK(stalk_hilbert(3, 4, 0) == 1);
  CHECK_THROWS_AS(stalk_hilbert(0, 1, 1), Error);
}

TEST_CASE("weight sequence and partial sums") {
  StalkProfile smooth_curve{1, 1};
  CHECK(smooth_curve.weight(1) == 0);
  CHECK(smooth_curve.weight(2) == 1);
  CHECK(smooth_curve.weight(3) == 2);
  CHECK(smooth_curve.partial_sum(3) == 3);
  CHECK(smooth_curve.partial_sum(1) == 0);

  // smooth surface point: weight m occurs m + 1 times
  StalkProfile smooth_surface{2, 1};
  CHECK(smooth_surface.partial_sum(4) == 0 + 1 + 1 + 2);

  // convexity of the increments
  StalkProfile node{1, 2};
  long long prev = node.partial_sum(1) - node.partial_sum(0);
  for (long long s = 1; s <= 30; ++s) {
    long long inc = node.partial_sum(s + 1) - node.partial_sum(s);
    CHECK(inc >= prev);
    prev = inc;
  }
}

TEST_CASE("main-term defect report") {
  WeightSumReport r = weight_partial_sum(1, 1, 3);
  CHECK(r.a_s == 3);
  CHECK(r.main_term == doctest::Approx(0.5 * std::pow(3.0, 2.0)));
  CHECK(weight_partial_sum(1, 1, 1).a_s == 0);
}

TEST_CASE("divisibility certificate on an explicit smooth instance") {
  DeterminantInstance inst;
  inst.p = 5;
  inst.f = H("x0*x2 - x1^2");
  inst.points = {make_proj({Int(1), Int(1), Int(1)}), make_proj({Int(1), Int(6), Int(36)})};
  inst.monomials = {poly_parse("x0", PROJ), poly_parse("x1", PROJ)};
  PadicCheckResult r = verify_padic_divisibility(inst);
  CHECK(r.pass);
  CHECK(r.det_value == 5);
  CHECK(r.vp == 1);
  CHECK(r.a_s == 1);
  CHECK(r.mu == 1);
  CHECK(inst.predicted_exponent == 1);
}

TEST_CASE("degenerate determinant passes by convention") {
  DeterminantInstance inst;
  inst.p = 5;
  inst.f = H("x0*x2 - x1^2");
  inst.points = {make_proj({Int(1), Int(1), Int(1)}), make_proj({Int(1), Int(6), Int(36)})};
  inst.monomials = {poly_parse("x0", PROJ), poly_parse("x0", PROJ)};
  PadicCheckResult r = verify_padic_divisibility(inst);
  CHECK(r.pass);
  CHECK(r.det_zero);
}

TEST_CASE("invalid instances are rejected") {
  DeterminantInstance off;
  off.p = 5;
  off.f = H("x0*x2 - x1^2");
  off.points = {make_proj({Int(1), Int(1), Int(1)}), make_proj({Int(1), Int(2), Int(3)})};
  off.monomials = {poly_parse("x0", PROJ), poly_parse("x1", PROJ)};
  CHECK_THROWS_AS(verify_padic_divisibility(off), Error);  // second point off the curve

  DeterminantInstance split;
  split.p = 5;
  split.f = H("x0*x2 - x1^2");
  split.points = {make_proj({Int(1), Int(0), Int(0)}), make_proj({Int(0), Int(0), Int(1)})};
  split.monomials = {poly_parse("x0", PROJ), poly_parse("x1", PROJ)};
  CHECK_THROWS_AS(verify_padic_divisibility(split), Error);  // reductions differ
}

TEST_CASE("point multiplicity from the tangent cone") {
  CHECK(point_multiplicity_mod_p(H("x0*x2 - x1^2"), 5, {Int(1), Int(1), Int(1)}) == 1);
  // node of the cuspidal-free cubic x1^2 x0 = x2^3 at (1:0:0) has multiplicity 2
  CHECK(point_multiplicity_mod_p(H("x1^2*x0 - x2^3"), 7, {Int(1), Int(0), Int(0)}) == 2);
  CHECK(point_multiplicity_mod_p(H("x0*x2 - x1^2"), 5, {Int(1), Int(2), Int(4)}) == 1);
  CHECK(point_multiplicity_mod_p(H("x0*x2 - x1^2"), 5, {Int(1), Int(1), Int(2)}) == 0);
}

TEST_CASE("reduction statistics over small primes") {
  ReductionStats conic = reduction_stats(H("x0*x2 - x1^2"), 7);
  CHECK(conic.n_p == 8);  // smooth conic: p + 1 points, all multiplicity 1
  CHECK(conic.geometrically_integral);

  ReductionStats lines = reduction_stats(H("x0*x1"), 7);
  CHECK_FALSE(lines.geometrically_integral);
  CHECK(lines.n_p == 16);  // 2(p + 1) - 2 points, the node counted twice

  ReductionStats fermat = reduction_stats(H("x0^3 + x1^3 + x2^3"), 7);
  CHECK(fermat.n_p == 9);  // 54 affine cone solutions / 6
}

TEST_CASE("prime log sums stay under the linear cap") {
  ChebyshevReport r10 = chebyshev_check(10);
  CHECK(r10.pass);
  CHECK(r10.theta == doctest::Approx(std::log(2.) + std::log(3.) + std::log(5.) + std::log(7.)));

  CHECK(chebyshev_check(1).pass);
  CHECK(chebyshev_check(1).theta == 0.0);

  ChebyshevReport sweep = chebyshev_check_all(10000, 1e-6);
  CHECK(sweep.pass);
  CHECK(sweep.max_ratio < 2.0);
  CHECK(sweep.max_ratio > 0.5);  // the ratio approaches 1 from below at this scale
}

TEST_CASE("stalk dimensions match the elimination oracle on spot values") {
  for (int n = 1; n <= 2; ++n)
    for (int mu = 1; mu <= 3; ++mu)
      for (int k = 0; k <= 6; ++k)
        CHECK(stalk_hilbert(n, mu, k) == oracle::graded_quotient_dim(n, mu, k));
}
