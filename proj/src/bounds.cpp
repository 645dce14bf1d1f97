#include "ghwlrc/bounds.hpp"

#include "ghwlrc/locality.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ghwlrc {

namespace {

void require(bool condition, const char* what)
{
    if (!condition) throw std::invalid_argument(what);
}

void require_nkr(int n, int k, int r)
{
    require(1 <= r && r <= k && k <= n, "parameters must satisfy 1 <= r <= k <= n");
}

Verdict verdict(std::string claim, ClaimStatus status, std::optional<int> index = std::nullopt, std::string detail = {})
{
    return {std::move(claim), status, index, std::move(detail)};
}

Verdict not_applicable(std::string claim, std::string why) { return verdict(std::move(claim), ClaimStatus::not_applicable, {}, std::move(why)); }

/// Runs `ok(i)` over [first, last] and reports the first failure.
template <typename Check>
Verdict check_range(std::string claim, int first, int last, Check ok)
{
    for (int i = first; i <= last; ++i) {
        if (!ok(i)) return verdict(std::move(claim), ClaimStatus::violated, i);
    }
    return verdict(std::move(claim), ClaimStatus::holds);
}

} // namespace

int ceil_div(int a, int b)
{
    require(b > 0, "ceil_div needs a positive divisor");
    if (a >= 0) return (a + b - 1) / b;
    return -((-a) / b);
}

int singleton_like_bound(int n, int k, int r)
{
    require_nkr(n, k, r);
    return n - k - ceil_div(k, r) + 2;
}

int generalized_singleton_like_bound(int n, int k, int r, int i)
{
    require_nkr(n, k, r);
    require(1 <= i && i <= k, "index must satisfy 1 <= i <= k");
    return n - k - ceil_div(k - i + 1, r) + i + 1;
}

int dual_ghw_upper(int n, int k, int r, int i)
{
    require_nkr(n, k, r);
    require(1 <= i && i <= n - k, "index must satisfy 1 <= i <= n - k");
    return i <= k / r ? i * (r + 1) : k + i;
}

int gap_lower_bound(int r, int i)
{
    require(r >= 1 && i >= 1, "gap bound needs r >= 1 and i >= 1");
    return ceil_div(i, r) + i - 1;
}

std::vector<int> optimal_dual_hierarchy(int n, int k, int r)
{
    require_nkr(n, k, r);
    if (k % r != 0) throw std::invalid_argument("closed form needs r | k");
    std::vector<int> out;
    for (int i = 1; i <= n - k; ++i) out.push_back(i <= k / r ? i * (r + 1) : k + i);
    return out;
}

std::vector<int> optimal_primal_hierarchy(int n, int k, int r)
{
    require_nkr(n, k, r);
    if (k % r != 0) throw std::invalid_argument("closed form needs r | k");
    std::vector<int> out;
    for (int i = 1; i <= k; ++i) out.push_back(n - k - ceil_div(k - i + 1, r) + i + 1);
    return out;
}

int optimal_dual_ghw_lower(int n, int k, int r, int i)
{
    require_nkr(n, k, r);
    require(1 <= i && i <= n - k, "index must satisfy 1 <= i <= n - k");
    const int groups = ceil_div(k, r);
    if (i <= groups - 1) return i * (r + 1) - groups * r + k;
    return k + i;
}

int optimal_gap_upper(int n, int k, int r, int i)
{
    require_nkr(n, k, r);
    require(1 <= i && i <= k, "index must satisfy 1 <= i <= k");
    const int slack = ceil_div(k, r) * r - k;
    return ceil_div(i + slack, r) + i - 1;
}

int optimal_primal_ghw_lower(int n, int k, int r, int i)
{
    require_nkr(n, k, r);
    require(1 <= i && i <= k, "index must satisfy 1 <= i <= k");
    return n - k - ceil_div(ceil_div(k, r) * r - i + 1, r) + i + 1;
}

namespace {

/// sum_{j < k} ceil(d / q^j)
long long griesmer_length(unsigned q, int k, int d)
{
    long long total = 0;
    long long power = 1;
    for (int j = 0; j < k; ++j) {
        total += power >= d ? 1 : (d + power - 1) / power;
        if (power < d) power *= q;
    }
    return total;
}

} // namespace

int d_opt_surrogate(unsigned q, int n, int k)
{
    require(q >= 2, "q must be at least 2");
    require(1 <= k && k <= n, "d_opt needs 1 <= k <= n");
    int best = 1;
    for (int d = 1; d <= n - k + 1; ++d) {
        if (griesmer_length(q, k, d) <= n) best = d;
    }
    return best;
}

int k_opt_surrogate(unsigned q, int n, int d)
{
    require(q >= 2, "q must be at least 2");
    require(d >= 1 && n >= 0, "k_opt needs d >= 1 and n >= 0");
    if (d > n) return 0;
    int best = 0;
    for (int k = 1; k <= n - d + 1; ++k) {
        if (griesmer_length(q, k, d) <= n) best = k;
    }
    return best;
}

const char* to_string(ClaimStatus status)
{
    switch (status) {
    case ClaimStatus::holds: return "holds";
    case ClaimStatus::violated: return "violated";
    case ClaimStatus::not_applicable: return "not_applicable";
    }
    return "unknown";
}

Verdict dual_ghw_step_bound(const WeightHierarchy& dual, int k, int r)
{
    require(r >= 1, "locality must be positive");
    const int redundancy = dual.dimension();
    const int last = std::min(k / r, redundancy - 1);
    Verdict v = check_range("lem2", 1, last, [&](int i) { return dual.d(i + 1) <= dual.d(i) + r + 1; });

    // Outside the stated range the inequality is only observed, never asserted.
    std::optional<int> beyond;
    for (int i = last + 1; i <= redundancy - 1; ++i) {
        if (i >= 1 && dual.d(i + 1) > dual.d(i) + r + 1) {
            beyond = i;
            break;
        }
    }
    if (last + 1 <= redundancy - 1) {
        v.detail = beyond ? "step bound fails beyond the stated range at i = " + std::to_string(*beyond)
                          : "step bound also holds beyond the stated range";
    }
    return v;
}

Verdict dual_ghw_saturation(const WeightHierarchy& dual, int k, int r, int i)
{
    require(r >= 1, "locality must be positive");
    require(1 < i && i <= k / r && i <= dual.dimension(), "saturation index must satisfy 1 < i <= floor(k/r)");
    if (dual.d(i) != i * (r + 1)) return verdict("lem3", ClaimStatus::holds, {}, "vacuous");
    return check_range("lem3", 1, i - 1, [&](int j) { return dual.d(j) == j * (r + 1); });
}

MuRho mu_rho(const std::vector<int>& dual_values, int n, int k)
{
    MuRho out{n - k + 1, 0};
    const int redundancy = std::min(n - k, int(dual_values.size()));
    for (int v = 1; v <= redundancy; ++v) {
        if (dual_values[std::size_t(v - 1)] == k + v) {
            out.mu = v;
            break;
        }
    }
    for (int x = 1; x <= redundancy; ++x) {
        if (dual_values[std::size_t(x - 1)] - x < k) out.rho = x;
    }
    return out;
}

PropositionBound prop1_bound(unsigned q, int n, int k, const std::vector<int>& dual_values, std::optional<int> r)
{
    PropositionBound out;
    const int rho = mu_rho(dual_values, n, k).rho;
    out.value = std::numeric_limits<int>::max();
    for (int i = 1; i <= rho; ++i) {
        const int di = dual_values[std::size_t(i - 1)];
        out.value = std::min(out.value, d_opt_surrogate(q, n - di, k + i - di));
    }
    if (rho == 0) {
        out.range_empty = true;
        out.value = n - k + 1;
    }
    if (r && *r >= 1 && *r < k) {
        int best = std::numeric_limits<int>::max();
        for (int i = 1; i <= ceil_div(k, *r) - 1; ++i) {
            const int length = n - i * (*r + 1);
            const int dimension = k - i * *r;
            if (dimension < 1 || dimension > length) continue;
            best = std::min(best, d_opt_surrogate(q, length, dimension));
        }
        if (best != std::numeric_limits<int>::max()) out.lrc_value = best;
    }
    return out;
}

PropositionBound prop2_bound(unsigned q, int n, int k, int d, const std::vector<int>& dual_values, std::optional<int> r)
{
    PropositionBound out;
    const int rho = mu_rho(dual_values, n, k).rho;
    out.value = std::numeric_limits<int>::max();
    for (int i = 1; i <= rho; ++i) {
        const int di = dual_values[std::size_t(i - 1)];
        out.value = std::min(out.value, k_opt_surrogate(q, n - di, d) - i + di);
    }
    if (rho == 0) {
        out.range_empty = true;
        out.value = n - d + 1;
    }
    if (r && *r >= 1 && *r < k) {
        int best = std::numeric_limits<int>::max();
        for (int i = 1; i <= ceil_div(k, *r) - 1; ++i) {
            const int length = n - i * (*r + 1);
            if (length < 0) continue;
            best = std::min(best, i * *r + k_opt_surrogate(q, length, d));
        }
        if (best != std::numeric_limits<int>::max()) out.lrc_value = best;
    }
    return out;
}

const Verdict* BoundReport::find(const std::string& claim) const
{
    for (const auto& v : verdicts) {
        if (v.claim == claim) return &v;
    }
    return nullptr;
}

bool BoundReport::any_violated() const
{
    return std::any_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.violated(); });
}

const std::vector<std::string>& claim_ids()
{
    static const std::vector<std::string> ids{"eq1",  "thm1", "lem1", "lem2", "lem3",  "lem4",     "thm2",     "thm3",
                                              "lem5", "lem6", "thm4", "prop1", "prop2", "prop3_mu", "prop4_rho"};
    return ids;
}

BoundReport evaluate_bounds(unsigned q, const WeightHierarchy& primal, const WeightHierarchy& dual, std::optional<int> r)
{
    BoundReport rep;
    rep.n = primal.n;
    rep.k = primal.dimension();
    rep.q = q;
    rep.d = primal.d(1);
    const int n = rep.n;
    const int k = rep.k;
    const int redundancy = n - k;
    if (dual.dimension() != redundancy) throw std::invalid_argument("dual hierarchy has the wrong length");
    if (r && (*r < 1 || *r > k)) r.reset();
    rep.r = r;

    const GkDual forms = gk_dual_forms(dual.values, n, k);
    rep.gk_dual = forms.max_form;
    const MuRho mr = mu_rho(dual.values, n, k);
    rep.mu = mr.mu;
    rep.rho = mr.rho;
    rep.prop1 = prop1_bound(q, n, k, dual.values, r);
    rep.prop2 = prop2_bound(q, n, k, rep.d, dual.values, r);

    if (r) {
        rep.singleton_like = singleton_like_bound(n, k, *r);
        rep.is_optimal = rep.d == *rep.singleton_like;
    }
    const bool optimal = rep.is_optimal;
    const bool divides = r && k % *r == 0;

    for (int i = 1; i <= k; ++i) {
        BoundRow row{i, {}, {}};
        if (r) {
            row.generalized_singleton_like = generalized_singleton_like_bound(n, k, *r, i);
            if (optimal) row.optimal_primal_lower = optimal_primal_ghw_lower(n, k, *r, i);
        }
        rep.primal_rows.push_back(row);
    }
    for (int i = 1; i <= redundancy; ++i) {
        DualBoundRow row{i, {}, {}};
        if (r) {
            row.dual_upper = dual_ghw_upper(n, k, *r, i);
            if (optimal) row.optimal_dual_lower = optimal_dual_ghw_lower(n, k, *r, i);
        }
        rep.dual_rows.push_back(row);
    }

    auto& out = rep.verdicts;
    const std::string no_locality = "code has no finite locality";
    if (r) {
        const int rv = *r;
        out.push_back(verdict("eq1", rep.d <= *rep.singleton_like ? ClaimStatus::holds : ClaimStatus::violated));
        out.push_back(check_range("thm1", 1, k, [&](int i) {
            return primal.d(i) <= generalized_singleton_like_bound(n, k, rv, i);
        }));
        out.push_back(check_range("lem1", 1, redundancy, [&](int i) { return dual.d(i) <= dual_ghw_upper(n, k, rv, i); }));
        out.push_back(dual_ghw_step_bound(dual, k, rv));
        {
            Verdict v = verdict("lem3", ClaimStatus::holds);
            for (int i = 2; i <= std::min(k / rv, redundancy); ++i) {
                const Verdict step = dual_ghw_saturation(dual, k, rv, i);
                if (step.violated()) {
                    v = verdict("lem3", ClaimStatus::violated, i);
                    break;
                }
            }
            out.push_back(v);
        }
        out.push_back(check_range("lem4", 1, k, [&](int i) { return dual.g(i) >= gap_lower_bound(rv, i); }));

        if (optimal && divides) {
            const auto expected_dual = optimal_dual_hierarchy(n, k, rv);
            const auto expected_primal = optimal_primal_hierarchy(n, k, rv);
            out.push_back(check_range("thm2", 1, redundancy,
                                      [&](int i) { return dual.d(i) == expected_dual[std::size_t(i - 1)]; }));
            out.push_back(check_range("thm3", 1, k,
                                      [&](int i) { return primal.d(i) == expected_primal[std::size_t(i - 1)]; }));
        } else {
            const std::string why = optimal ? "r does not divide k" : "code is not optimal";
            out.push_back(not_applicable("thm2", why));
            out.push_back(not_applicable("thm3", why));
        }

        if (optimal && !divides) {
            const int groups = ceil_div(k, rv);
            out.push_back(check_range("lem5", 1, redundancy, [&](int i) {
                const int bound = optimal_dual_ghw_lower(n, k, rv, i);
                return i >= groups ? dual.d(i) == bound : dual.d(i) >= bound;
            }));
            out.push_back(check_range("lem6", 1, k, [&](int i) { return dual.g(i) <= optimal_gap_upper(n, k, rv, i); }));
            out.push_back(
                check_range("thm4", 1, k, [&](int i) { return primal.d(i) >= optimal_primal_ghw_lower(n, k, rv, i); }));
        } else {
            const std::string why = optimal ? "r divides k (exact forms apply)" : "code is not optimal";
            out.push_back(not_applicable("lem5", why));
            out.push_back(not_applicable("lem6", why));
            out.push_back(not_applicable("thm4", why));
        }
    } else {
        for (const char* id : {"eq1", "thm1", "lem1", "lem2", "lem3", "lem4", "thm2", "thm3", "lem5", "lem6", "thm4"}) {
            out.push_back(not_applicable(id, no_locality));
        }
    }

    {
        const bool ok = rep.prop1.value >= rep.d && (!rep.prop1.lrc_value || *rep.prop1.lrc_value >= rep.d);
        Verdict v = verdict("prop1", ok ? ClaimStatus::holds : ClaimStatus::violated);
        if (rep.prop1.range_empty) v.detail = "range empty; Singleton fallback";
        out.push_back(v);
    }
    {
        const bool ok = rep.prop2.value >= k && (!rep.prop2.lrc_value || *rep.prop2.lrc_value >= k);
        Verdict v = verdict("prop2", ok ? ClaimStatus::holds : ClaimStatus::violated);
        if (rep.prop2.range_empty) v.detail = "range empty; Singleton fallback";
        out.push_back(v);
    }
    out.push_back(verdict("prop3_mu", rep.d == n - k - rep.mu + 2 ? ClaimStatus::holds : ClaimStatus::violated));
    {
        const bool ok = rep.d == n - k - rep.rho + 1 && rep.mu == rep.rho + 1 && forms.max_form == forms.min_form &&
                        rep.gk_dual == k + rep.rho;
        out.push_back(verdict("prop4_rho", ok ? ClaimStatus::holds : ClaimStatus::violated));
    }
    return rep;
}

BoundReport certify_optimal(const LinearCode& code, const CertifyOptions& options)
{
    const WeightHierarchy primal = weight_hierarchy(code, false, options.limits);
    const WeightHierarchy dual = dual_weight_hierarchy(code, false, options.limits);

    std::optional<int> r;
    if (options.promised_r) {
        const int promised = *options.promised_r;
        if (promised < 1 || promised > code.k()) {
            throw std::invalid_argument("promised locality must satisfy 1 <= r <= k");
        }
        if (!is_lrc(code, promised, options.limits)) {
            throw std::invalid_argument("code does not have locality " + std::to_string(promised));
        }
        r = promised;
    } else if (code.k() < code.n()) {
        try {
            r = locality(code, options.limits).r;
        } catch (const NoLocality&) {
            r.reset();
        }
    }
    return evaluate_bounds(code.q(), primal, dual, r);
}

} // namespace ghwlrc
