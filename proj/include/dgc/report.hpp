#pragma once

// JSON and CSV views of the library's result structs.  Arbitrary-precision
// integers and rationals are rendered as decimal strings so no consumer has
// to round-trip them through doubles.

#include <string>
#include <vector>

#include <json.hpp>

#include "dgc/auxpoly.hpp"
#include "dgc/detmethod.hpp"
#include "dgc/enumerate.hpp"
#include "dgc/experiments.hpp"
#include "dgc/geometry.hpp"
#include "dgc/irreducibility.hpp"
#include "dgc/witness.hpp"

namespace dgc {

using Json = nlohmann::json;

// x, y / x, y, z for two and three variables, x0, x1, ... beyond.
std::vector<std::string> default_vars(int nvars);

std::string rat_string(const Rat& q);

Json report_json(const CountResult& r, const std::vector<std::string>& vars,
                 const IntPoly& f);
Json report_json(const AuxCertificate& cert,
                 const std::vector<std::string>& vars);
Json report_json(const BadnessReport& r, const std::vector<std::string>& vars);
Json report_json(const WitnessCurve& w);
Json report_json(const ProjectiveWitnessReport& r);
Json report_json(const AffineWitnessReport& r);
Json report_json(const ProjectionSetup& s);
Json report_json(const ProjectionResult& r);
Json report_json(const AffineReduction& r);
Json report_json(const NormalizationResult& r,
                 const std::vector<std::string>& vars);
Json report_json(const DeterminantInstance& inst, const PadicCheckResult& res);
Json report_json(const ExperimentReport& rep);

std::string experiment_csv(const ExperimentReport& rep);

}  // namespace dgc
