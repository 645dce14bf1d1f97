#include "subset_sweep.hpp"

#include <algorithm>
#include <string>

namespace ghwlrc::detail {

void require_within(const EnumerationLimits& limits, std::size_t n)
{
    if (n > limits.max_n) {
        throw LimitExceeded("code length " + std::to_string(n) + " exceeds the enumeration limit " +
                            std::to_string(limits.max_n));
    }
}

namespace {

class Sweep {
public:
    Sweep(const Matrix& checks, std::size_t cap, const EnumerationLimits& limits)
        : n_(checks.cols()), cap_(cap), basis_(*checks.field(), checks.rows()), deadline_(limits.max_wall_time)
    {
        columns_.reserve(n_);
        for (std::size_t c = 0; c < n_; ++c) columns_.push_back(checks.column(c));

        // Every s-subset has nullity at least s - rank(checks).
        const std::size_t total_rank = rank(checks);
        profile_.best.assign(n_ + 1, 0);
        profile_.witness.assign(n_ + 1, {});
        for (std::size_t s = 0; s <= n_; ++s) {
            profile_.best[s] = s > total_rank ? s - total_rank : 0;
        }
    }

    NullityProfile run()
    {
        std::vector<std::size_t> subset;
        subset.reserve(n_);
        visit(0, 0, subset);
        for (std::size_t s = 1; s <= n_; ++s) {
            if (profile_.witness[s].empty()) profile_.witness[s] = padded({}, s);
        }
        return std::move(profile_);
    }

private:
    bool can_improve(std::size_t size, std::size_t nullity, std::size_t remaining) const
    {
        for (std::size_t extra = 0; extra <= remaining; ++extra) {
            const std::size_t reach = std::min(nullity + extra, cap_);
            if (reach > profile_.best[size + extra]) return true;
        }
        return false;
    }

    /// `subset` plus the lowest unused coordinates, up to `size` elements, sorted.
    std::vector<std::size_t> padded(std::vector<std::size_t> subset, std::size_t size) const
    {
        for (std::size_t c = 0; c < n_ && subset.size() < size; ++c) {
            if (std::find(subset.begin(), subset.end(), c) == subset.end()) subset.push_back(c);
        }
        std::sort(subset.begin(), subset.end());
        return subset;
    }

    void record(const std::vector<std::size_t>& subset, std::size_t nullity)
    {
        const std::size_t s = subset.size();
        if (nullity <= profile_.best[s]) return;
        profile_.best[s] = nullity;
        profile_.witness[s] = subset;
        // nullity never decreases when coordinates are added
        for (std::size_t t = s + 1; t <= n_ && profile_.best[t] < nullity; ++t) {
            profile_.best[t] = nullity;
            profile_.witness[t] = padded(subset, t);
        }
    }

    void visit(std::size_t next, std::size_t nullity, std::vector<std::size_t>& subset)
    {
        deadline_.tick();
        if (!subset.empty()) record(subset, nullity);
        if (!can_improve(subset.size(), nullity, n_ - next)) return;
        for (std::size_t c = next; c < n_; ++c) {
            const bool independent = basis_.insert(columns_[c]);
            subset.push_back(c);
            visit(c + 1, nullity + (independent ? 0 : 1), subset);
            subset.pop_back();
            if (independent) basis_.pop();
        }
    }

    std::size_t n_;
    std::size_t cap_;
    std::vector<std::vector<Symbol>> columns_;
    IncrementalBasis basis_;
    Deadline deadline_;
    NullityProfile profile_;
};

} // namespace

NullityProfile nullity_profile(const Matrix& checks, std::size_t cap, const EnumerationLimits& limits)
{
    require_within(limits, checks.cols());
    return Sweep(checks, cap, limits).run();
}

std::vector<int> hierarchy_from_profile(const NullityProfile& profile, std::size_t dim)
{
    std::vector<int> values;
    values.reserve(dim);
    std::size_t s = 0;
    for (std::size_t i = 1; i <= dim; ++i) {
        while (s < profile.best.size() && profile.best[s] < i) ++s;
        if (s == profile.best.size()) throw std::logic_error("nullity profile does not reach the code dimension");
        values.push_back(int(s));
    }
    return values;
}

Matrix embedded_kernel(const Matrix& checks, const std::vector<std::size_t>& subset)
{
    const Matrix local = nullspace(checks.select_columns(subset));
    Matrix out(checks.field(), local.rows(), checks.cols());
    for (std::size_t r = 0; r < local.rows(); ++r) {
        for (std::size_t j = 0; j < subset.size(); ++j) out(r, subset[j]) = local(r, j);
    }
    return out;
}

} // namespace ghwlrc::detail
