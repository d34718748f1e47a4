#pragma once

#include <vector>

#include "dgc/intpoly.hpp"

namespace dgc {

struct AffinePoint {
  std::vector<Int> coords;
};

// Canonical representative of a rational projective point: integer
// coordinates with gcd 1 and positive first nonzero coordinate.
struct ProjPoint {
  std::vector<Int> coords;
};

// Normalizes raw coordinates; rejects the zero vector.
ProjPoint make_proj(std::vector<Int> raw);

Int height(const ProjPoint& P);
Int height(const AffinePoint& P);

bool operator==(const ProjPoint& a, const ProjPoint& b);
bool operator<(const ProjPoint& a, const ProjPoint& b);

}  // namespace dgc
