#include "cadet/json_out.hpp"

namespace cadet::jsonio {

namespace {

json counts_json(const std::vector<Int>& counts) {
    json arr = json::array();
    for (const Int& c : counts) arr.push_back(c.str());
    return arr;
}

}  // namespace

json distribution_json(const code::WeightDistribution& wd, unsigned dimension) {
    json j;
    j["schema"] = 1;
    j["nu"] = wd.nu;
    j["m"] = dimension;
    j["counts"] = counts_json(wd.counts);
    j["enumerator"] = wd.enumerator();
    return j;
}

json predicted_json(const predictor::PredictedDistribution& p) {
    json j;
    j["schema"] = 1;
    j["nu"] = p.nu;
    j["m"] = p.dimension;
    j["counts"] = counts_json(p.counts);
    j["min_distance"] = p.min_distance;
    j["provenance"] = p.provenance;
    return j;
}

json design_json(const designs::Design& d) {
    json j;
    j["schema"] = 1;
    j["nu"] = d.nu;
    j["k"] = d.blocks.empty() ? 0 : d.blocks.front().size();
    j["blocks"] = json::array();
    for (const auto& b : d.blocks) j["blocks"].push_back(b);
    j["mult"] = d.mult;
    if (d.declared) {
        j["t"] = d.declared->t;
        j["lambda"] = d.declared->lambda.str();
    }
    return j;
}

json am_json(const am::AmReport& r) {
    json j;
    j["schema"] = 1;
    j["mode"] = r.mode;
    j["t"] = r.t;
    j["nu"] = r.nu;
    j["d"] = r.d;
    j["d_dual"] = r.d_dual;
    j["verdict"] = am::verdict_name(r.verdict);
    j["simple_range"] = {r.d, r.simple_w};
    j["simple_range_dual"] = {r.d_dual, r.simple_w_dual};
    if (!r.s_set.empty()) j["S"] = r.s_set;
    if (!r.derived_s_sets.empty()) {
        json ds;
        for (const auto& [tp, s] : r.derived_s_sets) ds[std::to_string(tp)] = s;
        j["derived_S"] = ds;
    }
    j["facts"] = json::array();
    for (const auto& f : r.facts) j["facts"].push_back({{"name", f.name}, {"value", f.value}, {"ok", f.ok}});
    return j;
}

json characterization_json(const am::CharacterizationReport& r) {
    json j;
    j["schema"] = 1;
    j["mode"] = "characterization";
    j["t"] = r.t;
    j["shortened_invariant"] = r.shortened_invariant;
    j["punctured_invariant"] = r.punctured_invariant;
    j["designs_primal"] = r.designs_primal ? json(*r.designs_primal) : json();
    j["designs_dual"] = r.designs_dual ? json(*r.designs_dual) : json();
    if (r.failing_weight) j["failing_weight"] = *r.failing_weight;
    j["consistent"] = r.consistent;
    j["facts"] = json::array();
    for (const auto& f : r.facts) j["facts"].push_back({{"name", f.name}, {"value", f.value}, {"ok", f.ok}});
    return j;
}

json construction_json(const constructions::ConstructionReport& r) {
    json j;
    j["schema"] = 1;
    j["nu"] = r.code.length();
    j["m"] = r.code.dimension();
    j["q"] = r.code.field()->q();
    j["min_distance"] = r.enumerated.min_positive_weight();
    j["counts"] = counts_json(r.enumerated.counts);
    j["enumerator"] = r.enumerated.enumerator();
    j["coordinate_labels"] = r.coordinate_labels;
    j["predicate_holds"] = r.predicate_holds;
    j["match"] = r.match;
    if (r.predicted) j["predicted"] = predicted_json(*r.predicted);
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

json moment_check_json(const moments::MomentCheck& r) {
    json j;
    j["schema"] = 1;
    j["ok"] = r.ok;
    j["t_max"] = r.t_max;
    j["first_failing"] = r.first_failing ? json(*r.first_failing) : json();
    return j;
}

json acceptance_json(const std::vector<repro::CriterionResult>& results) {
    json j;
    j["schema"] = 1;
    bool all = true;
    j["results"] = json::array();
    // Timings are deliberately left out: identical invocations must
    // serialize byte-identically.
    for (const auto& r : results) {
        all &= r.pass;
        j["results"].push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
    j["pass"] = all;
    return j;
}

code::WeightDistribution distribution_from_json(const json& j) {
    code::WeightDistribution wd;
    wd.nu = j.at("nu").get<unsigned>();
    for (const auto& c : j.at("counts")) {
        if (c.is_string())
            wd.counts.emplace_back(c.get<std::string>());
        else
            wd.counts.emplace_back(c.get<std::uint64_t>());
    }
    if (wd.counts.size() != wd.nu + 1)
        throw std::invalid_argument("distribution json: counts must have nu+1 entries");
    return wd;
}

}  // namespace cadet::jsonio
