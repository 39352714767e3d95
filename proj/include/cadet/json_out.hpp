#ifndef CADET_JSON_OUT_HPP
#define CADET_JSON_OUT_HPP

// JSON views of the library's result types. Every document carries
// "schema": 1; counts and other quantities that can exceed 64 bits are
// emitted as decimal strings. nlohmann::json keeps object keys sorted, so
// identical inputs serialize byte-identically.

#include <json.hpp>

#include "cadet/am.hpp"
#include "cadet/code.hpp"
#include "cadet/constructions.hpp"
#include "cadet/designs.hpp"
#include "cadet/moments.hpp"
#include "cadet/predictor.hpp"
#include "cadet/repro.hpp"

namespace cadet::jsonio {

using nlohmann::json;

json distribution_json(const code::WeightDistribution& wd, unsigned dimension);
json predicted_json(const predictor::PredictedDistribution& p);
json design_json(const designs::Design& d);
json am_json(const am::AmReport& r);
json characterization_json(const am::CharacterizationReport& r);
json construction_json(const constructions::ConstructionReport& r);
json moment_check_json(const moments::MomentCheck& r);
json acceptance_json(const std::vector<repro::CriterionResult>& results);

// Parses the {nu, counts: ["..."]} shape produced by distribution_json.
code::WeightDistribution distribution_from_json(const json& j);

}  // namespace cadet::jsonio

#endif
