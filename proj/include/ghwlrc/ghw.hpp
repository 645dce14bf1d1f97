#pragma once

#include "ghwlrc/linear_code.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ghwlrc {

/// d_1 < ... < d_dim together with the complementary gap numbers in {1..n}.
struct WeightHierarchy {
    int n = 0;
    std::vector<int> values;
    std::vector<int> gaps;
    /// Per-index witness, filled only when requested.
    std::vector<SubcodeWitness> witnesses;

    int dimension() const { return int(values.size()); }
    /// 1-based accessors matching d_i and g_i.
    int d(int i) const { return values.at(std::size_t(i - 1)); }
    int g(int i) const { return gaps.at(std::size_t(i - 1)); }
};

struct GhwResult {
    int weight = 0;
    SubcodeWitness witness;
};

/// d_i of `code` for 1 <= i <= k, with a subcode of dimension >= i supported on
/// exactly d_i coordinates.
GhwResult ghw(const LinearCode& code, int i, const EnumerationLimits& limits = {});

/// Full hierarchy of `code` from a single sweep over column subsets of H.
WeightHierarchy weight_hierarchy(const LinearCode& code, bool with_witnesses = false,
                                 const EnumerationLimits& limits = {});

/// Hierarchy of the dual code, computed from subsets of G; empty when k = n.
WeightHierarchy dual_weight_hierarchy(const LinearCode& code, bool with_witnesses = false,
                                      const EnumerationLimits& limits = {});

std::vector<int> gap_numbers(const LinearCode& code, const EnumerationLimits& limits = {});

/// Sorted complement of `values` inside {1..n}.
std::vector<int> complement_in_range(const std::vector<int>& values, int n);

struct DualityReport {
    bool holds = true;
    std::vector<std::string> violations;
};

/// Checks {d_i} = [n] \ {n+1-d_j^perp} and d_i = n+1 - g^perp_{k-i+1}.
DualityReport check_wei_duality(const WeightHierarchy& primal, const WeightHierarchy& dual);
DualityReport check_wei_duality(const LinearCode& code, const EnumerationLimits& limits = {});

/// g_k^perp evaluated both ways. An empty max-range reads as k (no i with
/// d_i^perp < k+i) and an empty min-range as n, which keeps the forms equal.
struct GkDual {
    int max_form = 0;
    int min_form = 0;
};

GkDual gk_dual_forms(const std::vector<int>& dual_values, int n, int k);

/// g_k^perp; throws std::logic_error if the two forms or d_1 = n+1-g_k^perp disagree.
int gk_dual(const LinearCode& code, const EnumerationLimits& limits = {});

/// d_i from the enumerated codewords alone: the words supported inside S are the
/// largest subcode on S, so d_i = min |S| with at least q^i of them. No rank
/// computations. Only for tiny instances (q^k <= limits.max_oracle_codewords,
/// n <= limits.max_n).
int ghw_oracle(const LinearCode& code, int i, const EnumerationLimits& limits = {});

} // namespace ghwlrc
