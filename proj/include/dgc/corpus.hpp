#pragma once

#include <cstdint>
#include <vector>

#include "dgc/detmethod.hpp"
#include "dgc/intpoly.hpp"
#include "dgc/rng.hpp"

namespace dgc {

enum class IrrFilter {
  any,
  absolutely_irreducible,  // rejection-sampled against the rank test
  reducible,               // built as a product of two smaller factors
};

// Reproducible random polynomials.  Supported shapes: affine in any number
// of variables, homogeneous in any number of variables; the
// absolutely-irreducible filter is implemented for affine bivariate and
// homogeneous trivariate inputs (plane curves).
struct CorpusSpec {
  int dmin = 2;
  int dmax = 4;
  long long coeff_bound = 10;
  int nvars = 2;
  bool homogeneous = false;
  int count = 20;
  std::uint64_t seed = 0;
  IrrFilter irreducibility = IrrFilter::any;
  bool require_primitive = true;
  long long attempt_cap = 200000;
};

std::vector<IntPoly> generate_corpus(const CorpusSpec& spec);

// Valid p-adic determinant instance: s distinct lifts of one mod-p plane
// point, a random primitive curve through all of them, and s random
// monomial forms.
DeterminantInstance random_determinant_instance(Rng& rng, std::int64_t p, int s);

struct SpaceCurve {
  std::vector<IntPoly> gens;  // two generators in 4 variables
  int degree;
};

// Two-generator integral curves in P^3 of degree <= 4: the degree-3 monomial
// curve, plane curves moved off the coordinate planes by small unimodular
// substitutions, and random (2,2) intersections kept when the projection
// pipeline certifies them.  Every returned curve admits a projection center
// within the height cap.
std::vector<SpaceCurve> generate_space_curves(std::uint64_t seed, int count);

}  // namespace dgc
