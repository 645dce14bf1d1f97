#include "ghwlrc/ghw.hpp"

#include "subset_sweep.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace ghwlrc {

namespace {

SubcodeWitness witness_for(const Matrix& checks, const std::vector<std::size_t>& subset)
{
    const Matrix kernel = detail::embedded_kernel(checks, subset);
    SubcodeWitness w;
    w.dimension = kernel.rows();
    std::vector<bool> covered(checks.cols(), false);
    for (std::size_t r = 0; r < kernel.rows(); ++r) {
        const auto row = kernel.row(r);
        w.basis.emplace_back(row.begin(), row.end());
        for (std::size_t c = 0; c < row.size(); ++c) covered[c] = covered[c] || row[c] != 0;
    }
    for (std::size_t c = 0; c < covered.size(); ++c) {
        if (covered[c]) w.support.push_back(c);
    }
    return w;
}

WeightHierarchy hierarchy_of(const Matrix& checks, std::size_t dim, bool with_witnesses,
                             const EnumerationLimits& limits)
{
    const int n = int(checks.cols());
    WeightHierarchy h;
    h.n = n;
    if (dim > 0) {
        const auto profile = detail::nullity_profile(checks, dim, limits);
        h.values = detail::hierarchy_from_profile(profile, dim);
        if (with_witnesses) {
            for (int value : h.values) h.witnesses.push_back(witness_for(checks, profile.witness[std::size_t(value)]));
        }
    } else {
        detail::require_within(limits, checks.cols());
    }
    h.gaps = complement_in_range(h.values, n);
    return h;
}

} // namespace

std::vector<int> complement_in_range(const std::vector<int>& values, int n)
{
    std::vector<bool> present(std::size_t(n) + 1, false);
    for (int v : values) {
        if (v >= 1 && v <= n) present[std::size_t(v)] = true;
    }
    std::vector<int> out;
    for (int v = 1; v <= n; ++v) {
        if (!present[std::size_t(v)]) out.push_back(v);
    }
    return out;
}

WeightHierarchy weight_hierarchy(const LinearCode& code, bool with_witnesses, const EnumerationLimits& limits)
{
    return hierarchy_of(code.parity_check(), std::size_t(code.k()), with_witnesses, limits);
}

WeightHierarchy dual_weight_hierarchy(const LinearCode& code, bool with_witnesses, const EnumerationLimits& limits)
{
    return hierarchy_of(code.generator(), std::size_t(code.n() - code.k()), with_witnesses, limits);
}

GhwResult ghw(const LinearCode& code, int i, const EnumerationLimits& limits)
{
    if (i < 1 || i > code.k()) {
        throw std::out_of_range("GHW index " + std::to_string(i) + " outside 1.." + std::to_string(code.k()));
    }
    const auto profile = detail::nullity_profile(code.parity_check(), std::size_t(i), limits);
    const int weight = detail::hierarchy_from_profile(profile, std::size_t(i)).back();
    return {weight, witness_for(code.parity_check(), profile.witness[std::size_t(weight)])};
}

std::vector<int> gap_numbers(const LinearCode& code, const EnumerationLimits& limits)
{
    return weight_hierarchy(code, false, limits).gaps;
}

DualityReport check_wei_duality(const WeightHierarchy& primal, const WeightHierarchy& dual)
{
    DualityReport report;
    const int n = primal.n;
    const int k = primal.dimension();

    // {d_i} = [n] \ {n + 1 - d_j^perp}
    std::vector<int> reflected;
    for (int v : dual.values) reflected.push_back(n + 1 - v);
    std::sort(reflected.begin(), reflected.end());
    const std::vector<int> expected = complement_in_range(reflected, n);
    if (expected != primal.values || reflected.size() + primal.values.size() != std::size_t(n)) {
        report.holds = false;
        std::ostringstream msg;
        msg << "hierarchy is not the complement of the reflected dual hierarchy";
        report.violations.push_back(msg.str());
    }

    // d_i = n + 1 - g^perp_{k-i+1}
    if (int(dual.gaps.size()) != k) {
        report.holds = false;
        report.violations.push_back("dual has " + std::to_string(dual.gaps.size()) + " gap numbers, expected " +
                                    std::to_string(k));
    } else {
        for (int i = 1; i <= k; ++i) {
            if (primal.d(i) != n + 1 - dual.g(k - i + 1)) {
                report.holds = false;
                report.violations.push_back("gap form fails at i = " + std::to_string(i));
            }
        }
    }
    return report;
}

DualityReport check_wei_duality(const LinearCode& code, const EnumerationLimits& limits)
{
    return check_wei_duality(weight_hierarchy(code, false, limits), dual_weight_hierarchy(code, false, limits));
}

GkDual gk_dual_forms(const std::vector<int>& dual_values, int n, int k)
{
    GkDual out{k, n};
    for (int i = 1; i <= n - k && std::size_t(i) <= dual_values.size(); ++i) {
        if (dual_values[std::size_t(i - 1)] < k + i) out.max_form = k + i;
    }
    for (int i = 1; i <= n - k && std::size_t(i) <= dual_values.size(); ++i) {
        if (dual_values[std::size_t(i - 1)] == k + i) {
            out.min_form = k + i - 1;
            break;
        }
    }
    return out;
}

int gk_dual(const LinearCode& code, const EnumerationLimits& limits)
{
    const auto dual = dual_weight_hierarchy(code, false, limits);
    const GkDual forms = gk_dual_forms(dual.values, code.n(), code.k());
    if (forms.max_form != forms.min_form) {
        throw std::logic_error("g_k^perp max-form " + std::to_string(forms.max_form) + " differs from min-form " +
                               std::to_string(forms.min_form));
    }
    if (!dual.gaps.empty() && dual.gaps.back() != forms.max_form) {
        throw std::logic_error("g_k^perp disagrees with the largest dual gap number");
    }
    const int d = min_distance(code, limits);
    if (d != code.n() + 1 - forms.max_form) throw std::logic_error("d_1 != n + 1 - g_k^perp");
    return forms.max_form;
}

int ghw_oracle(const LinearCode& code, int i, const EnumerationLimits& limits)
{
    const int k = code.k();
    const int n = code.n();
    if (i < 1 || i > k) throw std::out_of_range("GHW index " + std::to_string(i) + " outside 1.." + std::to_string(k));
    const Field& f = code.gf();
    const unsigned q = f.q();

    std::uint64_t total = 1;
    for (int t = 0; t < k; ++t) {
        total *= q;
        if (total > limits.max_oracle_codewords) {
            throw LimitExceeded("q^k exceeds the oracle limit " + std::to_string(limits.max_oracle_codewords));
        }
    }

    // Codewords with support inside S form the largest subcode supported on S,
    // so d_i is the smallest |S| holding at least q^i codewords.
    if (std::size_t(n) > limits.max_n) throw LimitExceeded("n exceeds the sweep limit " + std::to_string(limits.max_n));
    std::vector<std::uint64_t> count(std::size_t(1) << n, 0);
    std::vector<Symbol> message(std::size_t(k), 0);
    std::vector<Symbol> word(static_cast<std::size_t>(n));
    const Matrix& g = code.generator();
    detail::Deadline deadline(limits.max_wall_time);
    for (std::uint64_t index = 0; index < total; ++index) {
        deadline.tick();
        std::uint64_t rest = index;
        for (int t = 0; t < k; ++t) {
            message[std::size_t(t)] = Symbol(rest % q);
            rest /= q;
        }
        std::fill(word.begin(), word.end(), Symbol(0));
        for (int t = 0; t < k; ++t) {
            const Symbol coeff = message[std::size_t(t)];
            if (coeff == 0) continue;
            for (int c = 0; c < n; ++c) {
                word[std::size_t(c)] = f.add(word[std::size_t(c)], f.mul(coeff, g(std::size_t(t), std::size_t(c))));
            }
        }
        std::uint64_t mask = 0;
        for (int c = 0; c < n; ++c) {
            if (word[std::size_t(c)] != 0) mask |= std::uint64_t(1) << c;
        }
        ++count[mask];
    }
    for (int c = 0; c < n; ++c) {
        for (std::size_t s = 0; s < count.size(); ++s) {
            if (s & (std::size_t(1) << c)) count[s] += count[s ^ (std::size_t(1) << c)];
        }
    }
    std::uint64_t needed = 1;
    for (int t = 0; t < i; ++t) needed *= q;
    int best = n + 1;
    for (std::size_t s = 0; s < count.size(); ++s) {
        if (count[s] >= needed) best = std::min(best, std::popcount(s));
    }
    if (best > n) throw std::logic_error("no subcode of the requested dimension found");
    return best;
}

} // namespace ghwlrc
