#pragma once

// Exhaustive subset kernels shared by the code, ghw and locality modules.

#include "ghwlrc/linear_code.hpp"

#include <chrono>
#include <cstddef>
#include <vector>

namespace ghwlrc::detail {

/// Wall-clock guard polled from inner loops.
class Deadline {
public:
    explicit Deadline(std::chrono::milliseconds budget)
        : end_(std::chrono::steady_clock::now() + budget)
    {
    }

    void tick()
    {
        if (++ticks_ % 4096 == 0 && std::chrono::steady_clock::now() > end_) {
            throw LimitExceeded("enumeration exceeded the configured wall time");
        }
    }

private:
    std::chrono::steady_clock::time_point end_;
    std::size_t ticks_ = 0;
};

/// For each subset size s, the largest |S| - rank(checks_S) over |S| = s, with a
/// subset attaining it. Values are only resolved up to `cap`: best[s] is exact
/// whenever the true maximum is below `cap`, and otherwise at least `cap`.
struct NullityProfile {
    std::vector<std::size_t> best;
    std::vector<std::vector<std::size_t>> witness;
};

NullityProfile nullity_profile(const Matrix& checks, std::size_t cap, const EnumerationLimits& limits);

/// d_i = min{s : best[s] >= i} for i = 1..dim.
std::vector<int> hierarchy_from_profile(const NullityProfile& profile, std::size_t dim);

/// Vectors supported inside `subset` whose restriction lies in ker(checks_subset),
/// embedded back into length checks.cols().
Matrix embedded_kernel(const Matrix& checks, const std::vector<std::size_t>& subset);

void require_within(const EnumerationLimits& limits, std::size_t n);

} // namespace ghwlrc::detail
