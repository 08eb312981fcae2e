#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qcong {

/// Outcome of one verification job: an identity fixture, a congruence
/// claim instance, an oracle cross-check or a residue-table check.
struct VerificationReport {
    std::string id;
    std::string params;     // "alpha=2 l1=4 l2=3" style, empty if none
    long order = 0;
    long instances_checked = 0;
    bool pass = false;
    // first differing progression index / exponent and the offending
    // coefficient value (decimal string)
    std::optional<std::pair<long, std::string>> first_violation;
    bool insufficient_coverage = false;
    double runtime_ms = 0.0;
    std::string note;

    std::string status() const { return pass ? "pass" : "fail"; }
};

/// Flat JSON for one report; used by the CLI --json writer.
std::string report_to_json(const VerificationReport& r);

/// Whole-file JSON document: {"artifact_version", "command", "reports"}.
/// A non-empty `coefficients` list (expand/dissect output) is added as
/// an extra top-level array of decimal strings.
std::string reports_to_json(const std::string& command,
                            const std::vector<VerificationReport>& reports,
                            const std::vector<std::string>& coefficients = {});

inline constexpr const char* kArtifactVersion = "0.1.0";

} // namespace qcong
