#pragma once

// Batch verification of every claim over seeded random codes and certified
// fixtures. Backs the `verify` command.

#include "ghwlrc/bounds.hpp"
#include "ghwlrc/constructions.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ghwlrc {

struct ClaimTally {
    int checked = 0;
    int passed = 0;
};

struct SuiteResult {
    std::string name;
    std::map<std::string, ClaimTally> tallies;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    bool passed() const { return failures.empty(); }
    void tally(const std::string& claim, bool ok, const std::string& context);
};

struct SuiteOptions {
    std::uint64_t seed = 1;
    int count = 200;
    EnumerationLimits limits;
};

/// Random codes with q in {2,3,4}, 2 <= n <= 12 and every 1 <= k <= n reachable.
std::vector<Construction> random_suite(std::uint64_t seed, int count);

/// Random codes with small, repeated local parity groups (so that r < k is
/// common) and a few global parities on top. Deterministic in `seed`.
LinearCode random_lrc_code(unsigned q, int n, int r, int global_parities, std::uint64_t seed);

/// Codes with computed locality r < k, drawn from random_suite and random_lrc_code.
std::vector<LinearCode> lrc_suite(std::uint64_t seed, int count);

/// A fixture accepted into a theorem suite only after its optimality is re-derived.
struct CertifiedFixture {
    std::string label;
    LinearCode code;
    BoundReport report;
};

/// Tries to build and certify a Tamo-Barg fixture; the string explains a failure.
std::optional<CertifiedFixture> certified_tamo_barg(unsigned q, int n, int k, int r, std::string* why = nullptr,
                                                    const EnumerationLimits& limits = {});

SuiteResult verify_duality(const SuiteOptions& options);
SuiteResult verify_lemmas(const SuiteOptions& options);
SuiteResult verify_optimal_rk(const SuiteOptions& options);
SuiteResult verify_optimal_rnk(const SuiteOptions& options);
SuiteResult verify_props(const SuiteOptions& options);
SuiteResult verify_oracle(const SuiteOptions& options);

const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);

} // namespace ghwlrc
