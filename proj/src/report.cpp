#include "qcong/report.hpp"

#include "json.hpp"

namespace qcong {

namespace {

nlohmann::json to_json_obj(const VerificationReport& r) {
    nlohmann::json j;
    j["id"] = r.id;
    j["params"] = r.params;
    j["order"] = r.order;
    j["instances_checked"] = r.instances_checked;
    j["status"] = r.status();
    if (r.first_violation) {
        j["violation_n"] = r.first_violation->first;
        j["violation_value"] = r.first_violation->second;
    }
    j["insufficient_coverage"] = r.insufficient_coverage;
    j["runtime_ms"] = r.runtime_ms;
    j["note"] = r.note;
    return j;
}

} // namespace

std::string report_to_json(const VerificationReport& r) {
    return to_json_obj(r).dump();
}

std::string reports_to_json(const std::string& command,
                            const std::vector<VerificationReport>& reports,
                            const std::vector<std::string>& coefficients) {
    nlohmann::json doc;
    doc["artifact_version"] = kArtifactVersion;
    doc["command"] = command;
    doc["reports"] = nlohmann::json::array();
    for (const auto& r : reports) doc["reports"].push_back(to_json_obj(r));
    if (!coefficients.empty()) doc["coefficients"] = coefficients;
    return doc.dump(2);
}

} // namespace qcong
