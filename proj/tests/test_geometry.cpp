#include <doctest.h>

#include "dgc/enumerate.hpp"
#include "dgc/geometry.hpp"
#include "dgc/rng.hpp"

using namespace dgc;

namespace {
const std::vector<std::string> S4 = {"x0", "x1", "x2", "x3"};
const std::vector<std::string> A3 = {"x", "y", "z"};
IntPoly S(const std::string& s) { return poly_parse(s, S4); }
IntPoly A(const std::string& s) { return poly_parse(s, A3); }

ProjPoint pp(std::vector<Int> v) { return make_proj(std::move(v)); }

std::vector<IntPoly> twisted_cubic() {
  return {S("x0*x2 - x1^2"), S("x0*x3^2 - 2*x1*x2*x3 + x2^3")};
}
}  // namespace

TEST_CASE("minor coordinates of spans") {
  auto single = pluecker({pp({Int(1), Int(0), Int(0), Int(0)})});
  CHECK(single == std::vector<Int>{1, 0, 0, 0});

  auto line = pluecker({pp({Int(1), Int(0), Int(0), Int(0)}), pp({Int(0), Int(1), Int(0), Int(0)})});
  CHECK(line == std::vector<Int>{1, 0, 0, 0, 0, 0});

  CHECK_THROWS_AS(pluecker({pp({Int(1), Int(1), Int(0), Int(0)}), pp({Int(2), Int(2), Int(0), Int(0)})}),
                  Error);
}

TEST_CASE("minor coordinates ignore the choice of spanning points") {
  Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Int> a(4), b(4);
    for (int i = 0; i < 4; ++i) {
      a[i] = Int(rng.uniform(-5, 5));
      b[i] = Int(rng.uniform(-5, 5));
    }
    std::vector<Int> sum(4);
    for (int i = 0; i < 4; ++i) sum[i] = a[i] + b[i];
    try {
      auto base = pluecker({pp(a), pp(b)});
      auto mixed = pluecker({pp(sum), pp(b)});  // unimodular row operation
      CHECK(base == mixed);
    } catch (const Error&) {
      continue;  // dependent or zero draws
    }
  }
}

TEST_CASE("small solutions violating the first equation") {
  MatI one(1, 2);
  one << 1, 1;
  auto x = small_violating_solution(LinearSystem{one});
  CHECK(x == std::vector<Int>{1, 0});

  MatI two(2, 3);
  two << 1, 1, 1, 1, 0, -1;
  auto y = small_violating_solution(LinearSystem{two});
  CHECK(y[0] + y[1] + y[2] != 0);
  CHECK(y[0] - y[2] == 0);
  for (const Int& v : y) CHECK(abs(v) <= 2);  // within sqrt(1! * 3) * 1^1, rounded up

  MatI dep(2, 3);
  dep << 1, 1, 0, 2, 2, 0;
  CHECK_THROWS_AS(small_violating_solution(LinearSystem{dep}), Error);
}

TEST_CASE("projection center for the monomial space curve") {
  ProjectionResult r = find_projection_center(twisted_cubic(), 3);
  CHECK(r.degree == 3);
  CHECK(r.image.total_degree() == 3);
  CHECK(r.center_height <= 36);  // (4 * d^2)^1 * 1!
  CHECK(r.setup.centers.size() == 1);
  CHECK(r.setup.forms.size() == 1);
  CHECK(r.image.nvars() == 3);

  // forms vanish on the complementary centers and not on their own
  const auto& L = r.setup.forms[0];
  const auto& C = r.setup.centers[0];
  Int v = 0;
  for (int i = 0; i < 4; ++i) v += L[i] * C.coords[i];
  CHECK(v != 0);
}

TEST_CASE("projected curve points land on the image within the height cap") {
  ProjectionResult r = find_projection_center(twisted_cubic(), 3);
  auto pts = enumerate_projective_system(twisted_cubic(), 3);
  REQUIRE(pts.proj_points.has_value());
  REQUIRE(pts.count >= 4);
  for (const auto& P : *pts.proj_points) {
    ProjectedPoint q = project_point(r.setup, P);
    CHECK(q.height_out <= q.cap);
    std::vector<Int> plane;
    for (int i = 0; i < 4; ++i)
      if (i != r.dropped_var) plane.push_back(q.image.coords[i]);
    CHECK(r.image.eval(plane) == 0);
  }
}

TEST_CASE("projecting the center itself is rejected") {
  ProjectionResult r = find_projection_center(twisted_cubic(), 3);
  CHECK_THROWS_AS(project_point(r.setup, r.setup.centers[0]), Error);
}

TEST_CASE("points of the target plane are fixed with their height") {
  ProjectionResult r = find_projection_center(twisted_cubic(), 3);
  std::vector<Int> fixed(4, 0);
  fixed[(r.dropped_var + 1) % 4] = 1;
  ProjectedPoint q = project_point(r.setup, pp(fixed));
  CHECK(q.image == pp(fixed));
  CHECK(q.height_out == q.height_in);
}

TEST_CASE("reducible curves cannot pass the degree-preservation test") {
  std::vector<IntPoly> gens = {S("x0*x1"), S("x3")};
  CHECK_THROWS_AS(find_projection_center(gens, 2, Int(3)), Error);
}

TEST_CASE("leading-coefficient shifts") {
  NormalizationResult xy = normalize_leading_coeff(poly_parse("x*y", {"x", "y"}), 2);
  CHECK(xy.shift == std::vector<Int>{1});
  CHECK(xy.lead == 1);

  NormalizationResult idfix = normalize_leading_coeff(poly_parse("x1^2", {"x0", "x1"}), 2);
  CHECK(idfix.shift == std::vector<Int>{0});
  CHECK(idfix.lead == 1);

  NormalizationResult sq = normalize_leading_coeff(poly_parse("x0^2 + x0*x1", {"x0", "x1"}), 2);
  CHECK(sq.lead != 0);
  for (const Int& a : sq.shift) {
    CHECK(a >= 0);
    CHECK(a <= 2);
  }
}

TEST_CASE("shift postconditions on a seeded sample") {
  Rng rng(17);
  const std::vector<std::string> V = {"x0", "x1", "x2"};
  for (int trial = 0; trial < 50; ++trial) {
    int d = int(rng.uniform(1, 4));
    IntPoly f(3);
    // random form of degree d in three variables
    for (int i = 0; i <= d; ++i)
      for (int j = 0; i + j <= d; ++j) {
        Exps e = {i, j, d - i - j};
        Int c = Int(rng.uniform(-20, 20));
        if (c != 0) f.add_term(e, c);
      }
    if (f.is_zero()) continue;
    NormalizationResult r = normalize_leading_coeff(f, d);
    Int norm = coeff_norm(f);
    Int scale = 1;
    for (int k = 0; k < 3 * d; ++k) scale *= 3;
    CHECK(abs(r.lead) * scale >= norm);
    CHECK(r.norm_out <= binomial(2 + d + 1, 3) * pow(Int(d), 3) * norm);
  }
}

TEST_CASE("space-to-plane count relation for the monomial curve") {
  AffineReduction red = affine_reduce_curve({A("y - x^2"), A("z - x^3")}, 3, 3);
  CHECK(red.degree == 3);
  CHECK(red.count_space == 3);  // x in {-1, 0, 1}: higher coordinates leave the box
  CHECK(red.relation_holds);
  CHECK(red.plane_curve.nvars() == 2);
  CHECK(red.collision_allowance == 9);
}

TEST_CASE("planar inputs project without inflation") {
  AffineReduction red = affine_reduce_curve({A("y - x^2"), A("z")}, 2, 5);
  CHECK(red.inflation == 1);
  CHECK(red.dropped_var == 2);
  CHECK(red.relation_holds);
  CHECK(red.count_space == red.count_plane);
}

TEST_CASE("reducible affine curves are rejected") {
  CHECK_THROWS_AS(affine_reduce_curve({A("x*y"), A("z")}, 2, 2, Int(2)), Error);
}
