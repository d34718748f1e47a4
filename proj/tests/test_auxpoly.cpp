#include <doctest.h>

#include <cmath>

#include "dgc/auxpoly.hpp"
#include "dgc/polygcd.hpp"

using namespace dgc;

namespace {
const std::vector<std::string> XY = {"x", "y"};
const std::vector<std::string> PROJ = {"x0", "x1", "x2"};
IntPoly P(const std::string& s) { return poly_parse(s, XY); }
IntPoly H(const std::string& s) { return poly_parse(s, PROJ); }
}  // namespace

TEST_CASE("conic interpolation certificate at height one") {
  IntPoly f = H("x0*x2 - x1^2");
  AuxCertificate cert = aux_polynomial(f, 1, CountMode::projective);
  CHECK(cert.M == 2);
  CHECK(cert.s_points == 4);
  CHECK(cert.bezout_bound == 4);
  CHECK(cert.g.total_degree() == 2);
  CHECK(cert.g.is_homogeneous());
  CHECK_FALSE(poly_divides(f, cert.g));
  for (const auto& pt : cert.proj_points) CHECK(cert.g.eval(pt.coords) == 0);
  CHECK(bezout_check(cert));
}

TEST_CASE("affine line needs a cubic to beat the multiples of f") {
  AuxCertificate cert = aux_polynomial(P("x - y"), 1, CountMode::affine);
  CHECK(cert.M == 3);
  CHECK(cert.s_points == 3);
  CHECK_FALSE(poly_divides(P("x - y"), cert.g));
  for (const auto& pt : cert.affine_points) CHECK(cert.g.eval(pt.coords) == 0);
  CHECK(bezout_check(cert));
}

TEST_CASE("no points makes the certificate trivial") {
  AuxCertificate cert = aux_polynomial(H("x0^2 + x1^2 + x2^2"), 5, CountMode::projective);
  CHECK(cert.M == 0);
  CHECK(cert.s_points == 0);
  CHECK(cert.g.is_constant());
  CHECK_FALSE(cert.g.is_zero());
  CHECK(bezout_check(cert));
}

TEST_CASE("forged point counts fail the intersection bound") {
  AuxCertificate cert = aux_polynomial(H("x0*x2 - x1^2"), 1, CountMode::projective);
  cert.s_points = cert.bezout_bound.convert_to<long long>() + 1;
  CHECK_FALSE(bezout_check(cert));
}

TEST_CASE("interpolation rejects bad inputs") {
  CHECK_THROWS_AS(aux_polynomial(P("2*x^2 + 2*y^2 - 50"), 1, CountMode::affine),
                  Error);  // content 2
  CHECK_THROWS_AS(aux_polynomial(P("x^2 - y^2"), 1, CountMode::affine), Error);
  CHECK_THROWS_AS(aux_polynomial(H("x0^2 + x1"), 1, CountMode::projective), Error);
  CHECK_THROWS_AS(
      aux_polynomial(poly_parse("x0 - x3", {"x0", "x1", "x2", "x3"}), 1, CountMode::projective),
      Error);  // not a plane curve
}

TEST_CASE("certificates across bounds keep all invariants") {
  IntPoly f = H("x0^3 + x1^3 - x2^3 - 3*x0*x1*x2");
  for (long long b : {1, 2, 4}) {
    AuxCertificate cert = aux_polynomial(f, b, CountMode::projective);
    CHECK(cert.g.total_degree() == cert.M);
    CHECK_FALSE(poly_divides(f, cert.g));
    CHECK(Int(cert.s_points) <= cert.bezout_bound);
    for (const auto& pt : cert.proj_points) CHECK(cert.g.eval(pt.coords) == 0);
  }
}

TEST_CASE("three-term degree bound evaluation") {
  CHECK(walsh_degree_formula(1, 2, 1.0, 1.0, 1.0, 1.0) == doctest::Approx(16.0));
  double e2 = std::exp(2.0);
  CHECK(walsh_degree_formula(1, 2, e2, 1.0, 1.0, 1.0) ==
        doctest::Approx(std::pow(e2, 2.0 / 2.0) * 8.0 + 2.0 + 8.0));
  // the log term vanishes at B = 1 for any other arguments
  CHECK(walsh_degree_formula(2, 3, 1.0, 5.0, 2.0, 7.0) ==
        doctest::Approx(7.0 * std::pow(3.0, 4 - 0.5) * 2.0 / std::pow(5.0, 0.5 / std::pow(3.0, 1.5)) +
                        7.0 * std::pow(3.0, 4 - 0.5)));
}
