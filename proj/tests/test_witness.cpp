#include <doctest.h>

#include <array>

#include "dgc/irreducibility.hpp"
#include "dgc/witness.hpp"

using namespace dgc;

namespace {
IntPoly P(const std::string& s) { return poly_parse(s, {"x", "y"}); }
}

TEST_CASE("small-degree witness curves in closed form") {
  CHECK(build_witness(1, 2).f == P("x"));
  CHECK(build_witness(2, 2).f == P("x^2 + y"));
  CHECK(build_witness(3, 2).f == P("x^3 + y^2 - x + y"));
}

TEST_CASE("witness curves vanish on the whole shifted grid") {
  for (int d = 1; d <= 8; ++d) {
    WitnessCurve w = build_witness(d, 2);
    CHECK(w.d == d);
    CHECK(w.f.total_degree() == d);
    long long g = w.grid_radius.convert_to<long long>();
    for (long long r1 = -g; r1 <= g; ++r1)
      for (long long r2 = -g; r2 <= g; ++r2)
        CHECK(w.f.eval({Int(r1), Int(r2)}) == 0);
    if (d >= 2) CHECK(!w.rational_solution.empty());
  }
}

TEST_CASE("witness curves are absolutely irreducible by the edge criterion") {
  for (int d = 2; d <= 8; ++d) {
    WitnessCurve w = build_witness(d, 2);
    CHECK(gao_edge_criterion(w.f));
    NewtonPolytope np = newton_polytope(w.f);
    bool has_x = false, has_y = false;
    for (const auto& v : np.vertices) {
      if (v == std::array<int, 2>{d, 0}) has_x = true;
      if (v == std::array<int, 2>{0, d - 1}) has_y = true;
    }
    CHECK(has_x);
    CHECK(has_y);
  }
}

TEST_CASE("projective point floor for the cubic witness") {
  WitnessCurve w = build_witness(3, 2);
  CHECK(w.B == 1);
  CHECK(w.claimed_count == 5);
  ProjectiveWitnessReport rep = verify_projective_lower_bound(w);
  CHECK(rep.count == 7);  // six box points plus one at infinity
  CHECK(rep.grid_floor == 5);
  CHECK(rep.scaling_pass);
  CHECK(rep.grid_pass);
  CHECK(rep.pass);
}

TEST_CASE("projective point floor for the quintic witness") {
  WitnessCurve w = build_witness(5, 2);
  CHECK(w.grid_radius == 1);
  ProjectiveWitnessReport rep = verify_projective_lower_bound(w);
  CHECK(rep.count == 10);  // full grid plus one at infinity
  CHECK(rep.grid_floor == 10);
  CHECK(rep.pass);
}

TEST_CASE("claimed line count") {
  CHECK(build_witness(1, 2).claimed_count == 4);
}

TEST_CASE("affine point floor") {
  WitnessCurve small = build_witness(3, 2);
  CHECK(small.B == 1);
  CHECK(verify_affine_lower_bound(small).pass);  // box of radius 1 passes vacuously

  WitnessCurve big = build_witness(9, 2);
  CHECK(big.B == 2);
  AffineWitnessReport rep = verify_affine_lower_bound(big);
  CHECK(rep.count >= 25);  // the vanishing grid already fills the box
  CHECK(rep.pass);
}
