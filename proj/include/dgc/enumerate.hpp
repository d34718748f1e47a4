#pragma once

#include <optional>
#include <vector>

#include "dgc/intpoly.hpp"
#include "dgc/points.hpp"

namespace dgc {

enum class CountMode { affine, projective };

struct CountResult {
  Int count = 0;
  Int bound = 0;
  CountMode mode = CountMode::affine;
  std::optional<std::vector<AffinePoint>> affine_points;
  std::optional<std::vector<ProjPoint>> proj_points;
};

// Exhaustive scan of the box [-B, B]^nvars.  Points retained when their
// number stays below the retention cap (or always if retain forces it).
CountResult enumerate_affine(const IntPoly& f, const Int& B, bool retain_points = true);

// Canonical projective representatives of height <= B: first nonzero
// coordinate positive, gcd 1.  F must be homogeneous and nonzero.
CountResult enumerate_projective(const IntPoly& F, const Int& B, bool retain_points = true);

// Common zeros of several homogeneous forms (same variable count).
CountResult enumerate_projective_system(const std::vector<IntPoly>& gens, const Int& B,
                                        bool retain_points = true);
CountResult enumerate_affine_system(const std::vector<IntPoly>& gens, const Int& B,
                                    bool retain_points = true);

Int schwarz_zippel_bound(int d, int m, const Int& B);

struct SchwarzZippelReport {
  Int bound;
  Int count;
  bool pass;
};

SchwarzZippelReport check_schwarz_zippel(const IntPoly& f, const Int& B);

// First integer tuple with all |a_i| <= d and f(a) != 0, scanning
// coordinates in the order 0, 1, -1, 2, -2, ...
AffinePoint find_point_off_variety(const IntPoly& f, int d);

}  // namespace dgc
