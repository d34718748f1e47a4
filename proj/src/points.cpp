#include "dgc/points.hpp"

namespace dgc {

ProjPoint make_proj(std::vector<Int> raw) {
  Int g = 0;
  for (const Int& c : raw) g = gcd(g, c);
  if (g == 0) throw Error("projective point has all coordinates zero");
  if (g < 0) g = -g;
  int lead = -1;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    raw[i] /= g;
    if (lead < 0 && raw[i] != 0) lead = (int)i;
  }
  if (raw[lead] < 0)
    for (Int& c : raw) c = -c;
  return ProjPoint{std::move(raw)};
}

Int height(const ProjPoint& P) {
  Int m = 0;
  for (const Int& c : P.coords) {
    Int a = abs(c);
    if (a > m) m = a;
  }
  return m;
}

Int height(const AffinePoint& P) {
  Int m = 0;
  for (const Int& c : P.coords) {
    Int a = abs(c);
    if (a > m) m = a;
  }
  return m;
}

bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords == b.coords; }

bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.coords < b.coords; }

}  // namespace dgc
