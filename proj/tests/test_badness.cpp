#include <doctest.h>

#include <cmath>

#include "dgc/irreducibility.hpp"

using namespace dgc;

namespace {
const std::vector<std::string> XY = {"x", "y"};
IntPoly P(const std::string& s) { return poly_parse(s, XY); }
}  // namespace

TEST_CASE("good reduction everywhere gives badness 1") {
  BadnessReport r = bad_primes(P("y^2 - x^5 - x - 1"));
  CHECK(r.abs_irreducible);
  CHECK(r.d == 5);
  CHECK(r.threshold == 27 * 625);
  CHECK(r.bad_primes.empty());
  CHECK(badness_value(r) == 1.0);

  BadnessReport r2 = bad_primes(P("y^2 - 2*x^5 - 1"));
  CHECK(r2.bad_primes.empty());  // only p = 2 degenerates, below threshold
  CHECK(badness_value(r2) == 1.0);
}

TEST_CASE("reducible input reports badness 0") {
  BadnessReport r = bad_primes(P("x^2 - y^2"));
  CHECK_FALSE(r.abs_irreducible);
  CHECK(badness_value(r) == 0.0);
}

TEST_CASE("a conic degenerating at a large prime is caught") {
  // x^2 + y^2 - 541 falls to two lines mod 541, and 541 > 27 * 2^4
  BadnessReport r = bad_primes(P("x^2 + y^2 - 541"));
  CHECK(r.abs_irreducible);
  CHECK(r.bad_primes == std::vector<long long>{541});
  CHECK(badness_value(r) == doctest::Approx(std::exp(std::log(541.0) / 541.0)));

  CHECK_FALSE(reduction_absolutely_irreducible(P("x^2 + y^2 - 541"), 541));
  CHECK(reduction_absolutely_irreducible(P("x^2 + y^2 - 541"), 439));
}

TEST_CASE("badness from a single hypothetical prime") {
  BadnessReport r;
  r.abs_irreducible = true;
  r.bad_primes = {101};
  CHECK(badness_value(r) == doctest::Approx(1.0468).epsilon(1e-3));

  BadnessReport empty;
  empty.abs_irreducible = true;
  CHECK(badness_value(empty) == 1.0);
}

TEST_CASE("log badness stays under the coefficient norm scale") {
  for (const char* s : {"y^2 - x^5 - x - 1", "x^2 + y^2 - 541", "y^3 - x^2 + x*y",
                        "x^2 + y^2 - 1"}) {
    BadnessReport r = bad_primes(P(s));
    REQUIRE(r.abs_irreducible);
    double cap = std::max(std::log(coeff_norm(r.f).convert_to<double>()), 1.0);
    CHECK(r.log_badness <= cap);
  }
}

TEST_CASE("candidate screening agrees with an exhaustive window scan") {
  // small window keeps the scan fast; the frozen example re-checks 541
  IntPoly f = P("x^2 + y^2 - 541");
  BadnessReport r = bad_primes(f, 1000);
  std::vector<long long> exhaustive;
  for (long long p = 433; p <= 1000; ++p) {
    bool prime = p > 1;
    for (long long q = 2; q * q <= p; ++q)
      if (p % q == 0) prime = false;
    if (prime && !reduction_absolutely_irreducible(f, p)) exhaustive.push_back(p);
  }
  CHECK(r.bad_primes == exhaustive);
}
