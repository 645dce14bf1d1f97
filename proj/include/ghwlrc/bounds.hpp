#pragma once

#include "ghwlrc/ghw.hpp"
#include "ghwlrc/linear_code.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ghwlrc {

// ---------------------------------------------------------------------------
// Closed-form bounds. Parameters are the usual (n, k, r, i); every function
// validates its ranges and throws std::invalid_argument otherwise.
// ---------------------------------------------------------------------------

int ceil_div(int a, int b);

/// d <= n - k - ceil(k/r) + 2
int singleton_like_bound(int n, int k, int r);

/// d_i <= n - k - ceil((k-i+1)/r) + i + 1
int generalized_singleton_like_bound(int n, int k, int r, int i);

/// d_i^perp <= i(r+1) for i <= floor(k/r), else k + i.
int dual_ghw_upper(int n, int k, int r, int i);

/// g_i^perp >= ceil(i/r) + i - 1
int gap_lower_bound(int r, int i);

/// Exact dual hierarchy of an optimal LRC with r | k (length n - k).
std::vector<int> optimal_dual_hierarchy(int n, int k, int r);

/// Exact hierarchy of an optimal LRC with r | k (length k).
std::vector<int> optimal_primal_hierarchy(int n, int k, int r);

/// Optimal LRC, any r: i(r+1) - ceil(k/r) r + k below ceil(k/r), and exactly k + i from there on.
int optimal_dual_ghw_lower(int n, int k, int r, int i);

/// Optimal LRC: g_i^perp <= ceil((i + ceil(k/r) r - k)/r) + i - 1
int optimal_gap_upper(int n, int k, int r, int i);

/// Optimal LRC: d_i >= n - k - ceil((ceil(k/r) r - i + 1)/r) + i + 1
int optimal_primal_ghw_lower(int n, int k, int r, int i);

/// Upper bound on the largest minimum distance of a q-ary [n, k] code:
/// min(Singleton, Griesmer).
int d_opt_surrogate(unsigned q, int n, int k);

/// Upper bound on the largest dimension of a q-ary length-n code with distance d
/// (0 when no nonzero code fits).
int k_opt_surrogate(unsigned q, int n, int d);

// ---------------------------------------------------------------------------
// Checks against computed hierarchies.
// ---------------------------------------------------------------------------

enum class ClaimStatus { holds, violated, not_applicable };

const char* to_string(ClaimStatus status);

struct Verdict {
    std::string claim;
    ClaimStatus status = ClaimStatus::not_applicable;
    std::optional<int> index; ///< first violating index, when one exists
    std::string detail;

    bool holds() const { return status == ClaimStatus::holds; }
    bool violated() const { return status == ClaimStatus::violated; }
};

/// d_{i+1}^perp <= d_i^perp + r + 1 over 1 <= i <= floor(k/r) (and i + 1 <= n - k).
Verdict dual_ghw_step_bound(const WeightHierarchy& dual, int k, int r);

/// If d_i^perp = i(r+1) then d_j^perp = j(r+1) for every j < i; 1 < i <= floor(k/r).
Verdict dual_ghw_saturation(const WeightHierarchy& dual, int k, int r, int i);

struct MuRho {
    int mu = 0;
    int rho = 0;
};

/// mu = min{v : d_v^perp = k + v}, rho = max{x : d_x^perp - x < k}. Empty ranges
/// read as mu = n - k + 1 and rho = 0, matching g_k^perp = k + mu - 1 = k + rho.
MuRho mu_rho(const std::vector<int>& dual_values, int n, int k);

struct PropositionBound {
    int value = 0;
    bool range_empty = false;       ///< no i with d_i^perp < k + i; value is the Singleton fallback
    std::optional<int> lrc_value;   ///< locality specialisation, when r < k is known
};

/// d <= min_{1 <= i <= g_k^perp - k} d_opt(n - d_i^perp, k + i - d_i^perp), and
/// the LRC form min_{1 <= i <= ceil(k/r) - 1} d_opt(n - i(r+1), k - ir).
PropositionBound prop1_bound(unsigned q, int n, int k, const std::vector<int>& dual_values,
                             std::optional<int> r = std::nullopt);

/// k <= min [k_opt(n - d_i^perp, d) - i + d_i^perp], and the LRC form
/// min [ir + k_opt(n - i(r+1), d)].
PropositionBound prop2_bound(unsigned q, int n, int k, int d, const std::vector<int>& dual_values,
                             std::optional<int> r = std::nullopt);

// ---------------------------------------------------------------------------
// Certification.
// ---------------------------------------------------------------------------

struct BoundRow {
    int i = 0;
    std::optional<int> generalized_singleton_like; ///< upper bound on d_i
    std::optional<int> optimal_primal_lower;       ///< lower bound on d_i for an optimal LRC
};

struct DualBoundRow {
    int i = 0;
    std::optional<int> dual_upper;                 ///< upper bound on d_i^perp
    std::optional<int> optimal_dual_lower;         ///< lower bound on d_i^perp for an optimal LRC
};

struct BoundReport {
    int n = 0;
    int k = 0;
    unsigned q = 0;
    std::optional<int> r;  ///< absent when the code has no finite locality
    int d = 0;
    std::optional<int> singleton_like;
    std::vector<BoundRow> primal_rows;
    std::vector<DualBoundRow> dual_rows;
    int gk_dual = 0;
    int mu = 0;
    int rho = 0;
    PropositionBound prop1;
    PropositionBound prop2;
    bool is_optimal = false;
    std::vector<Verdict> verdicts;

    const Verdict* find(const std::string& claim) const;
    bool any_violated() const;
};

/// Claim identifiers in report order.
const std::vector<std::string>& claim_ids();

/// Evaluates every claim from already-computed hierarchies. `r` is the locality
/// the claims are stated for (absent: LRC claims are not applicable).
BoundReport evaluate_bounds(unsigned q, const WeightHierarchy& primal, const WeightHierarchy& dual,
                            std::optional<int> r);

struct CertifyOptions {
    /// Evaluate against this locality instead of the computed one. It must be a
    /// valid locality for the code (every coordinate repairable from r symbols).
    std::optional<int> promised_r;
    EnumerationLimits limits;
};

BoundReport certify_optimal(const LinearCode& code, const CertifyOptions& options = {});

} // namespace ghwlrc
