#pragma once

#include "ghwlrc/linear_code.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ghwlrc {

/// Thrown when some coordinate lies in the support of no dual codeword, so no
/// finite locality exists (k = n, or the coordinate is free of every parity check).
class NoLocality : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct DualCodeword {
    std::vector<Symbol> entries;
    std::vector<std::size_t> support; ///< 0-based, sorted

    int weight() const { return int(support.size()); }
};

struct LocalityProfile {
    std::vector<int> per_coordinate; ///< r_j, indexed by 0-based coordinate
    int r = 0;
    std::vector<DualCodeword> covering_rows;
};

/// Minimum-weight dual codeword with a nonzero entry at `coordinate`; among
/// those, the lexicographically smallest support, scaled so that entry is 1.
/// Searches weights up to `max_weight` (0 = unbounded) and throws NoLocality
/// if nothing is found.
DualCodeword min_covering_dual_codeword(const LinearCode& code, std::size_t coordinate, int max_weight = 0,
                                        const EnumerationLimits& limits = {});

/// min{wt(h) - 1 : h in C^perp, h_j != 0} for the 0-based coordinate j.
int coordinate_locality(const LinearCode& code, std::size_t coordinate, const EnumerationLimits& limits = {});

LocalityProfile locality(const LinearCode& code, const EnumerationLimits& limits = {});

/// Greedy cover: repeatedly take the minimum-weight covering dual codeword of
/// the smallest uncovered coordinate. Throws std::invalid_argument if some
/// coordinate needs a row heavier than r + 1.
std::vector<DualCodeword> covering_rows(const LinearCode& code, int r, const EnumerationLimits& limits = {});

/// Every coordinate has locality <= r.
bool is_lrc(const LinearCode& code, int r, const EnumerationLimits& limits = {});

} // namespace ghwlrc
