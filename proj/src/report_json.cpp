#include "fordcf/report_json.hpp"

namespace fordcf {

nlohmann::ordered_json to_json(const TheoremUReport& report) {
    nlohmann::ordered_json j;
    j["x"] = to_string(report.x);
    j["alpha"] = report.alpha;
    j["isInteger"] = report.is_integer;
    j["stmt_i"] = report.stmt_i;
    j["stmt_ii"] = report.stmt_ii;
    j["stmt_iii"] = report.stmt_iii;
    j["stmt_iv"] = report.stmt_iv;
    j["stmt_v"] = report.stmt_v;
    j["witness"] = report.witness ? nlohmann::ordered_json(to_string(*report.witness))
                                  : nlohmann::ordered_json(nullptr);
    j["consistent"] = report.consistent;
    return j;
}

nlohmann::ordered_json to_json(const SweepReport& report) {
    nlohmann::ordered_json params;
    params["maxDenX"] = report.params.max_den_x;
    params["maxDenAlpha"] = report.params.max_den_alpha;
    params["window"] = to_string(report.params.lo) + ".." + to_string(report.params.hi);
    params["candidateMode"] =
        report.params.mode == CandidateMode::Pruned ? "pruned" : "exhaustive";

    nlohmann::ordered_json j;
    j["params"] = std::move(params);
    j["totalChecked"] = report.total_checked;
    j["xCount"] = report.x_count;
    j["alphaCount"] = report.alpha_count;
    j["convergentPairs"] = report.convergent_pairs;
    j["propositionDMismatches"] = report.proposition_d_mismatches;
    j["convergentCountMismatches"] = report.convergent_count_mismatches;
    j["inconsistencies"] = nlohmann::ordered_json::array();
    for (const TheoremUReport& r : report.inconsistencies) {
        j["inconsistencies"].push_back(to_json(r));
    }
    j["elapsed"] = report.elapsed_seconds;
    return j;
}

}  // namespace fordcf
