#pragma once

#include "ghwlrc/bounds.hpp"
#include "ghwlrc/ghw.hpp"
#include "ghwlrc/linear_code.hpp"
#include "ghwlrc/locality.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace ghwlrc {

struct AnalysisOptions {
    bool witnesses = false;
    std::optional<int> promised_r;
    EnumerationLimits limits;
};

struct Timings {
    double hierarchy_ms = 0;
    double locality_ms = 0;
    double bounds_ms = 0;
    double total_ms = 0;
};

/// Everything `analyze` reports about one code. All fields except `timings`
/// are a deterministic function of the code.
struct AnalysisReport {
    unsigned q = 0;
    unsigned p = 0;
    unsigned m = 0;
    std::vector<unsigned> modulus;
    int n = 0;
    int k = 0;
    std::optional<LocalityProfile> locality;
    std::string locality_note;
    WeightHierarchy primal;
    WeightHierarchy dual;
    BoundReport bounds;
    bool wei_duality = false;
    bool gk_forms_agree = false;
    Timings timings;

    /// A bound claim or a self-check failed.
    bool has_violation() const;
};

AnalysisReport analyze(const LinearCode& code, const AnalysisOptions& options = {});

/// Full JSON document. Coordinates are 1-based. Keys are emitted in sorted
/// order, so identical reports serialize identically apart from "timings".
nlohmann::json to_json(const AnalysisReport& report);

/// The JSON document without "timings".
nlohmann::json comparable_json(const AnalysisReport& report);

std::string to_text(const AnalysisReport& report);

} // namespace ghwlrc
