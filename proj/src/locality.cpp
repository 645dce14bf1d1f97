#include "ghwlrc/locality.hpp"

#include "subset_sweep.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace ghwlrc {

namespace {

/// Lexicographically first independent column set T of size `size`, avoiding
/// `target`, whose span contains column `target`.
class CoverSearch {
public:
    CoverSearch(const LinearCode& code, std::size_t target, detail::Deadline& deadline)
        : generator_(code.generator()), target_(target), basis_(code.gf(), generator_.rows()), deadline_(deadline)
    {
        for (std::size_t c = 0; c < generator_.cols(); ++c) columns_.push_back(generator_.column(c));
    }

    std::optional<std::vector<std::size_t>> find(std::size_t size)
    {
        chosen_.clear();
        if (descend(0, size)) return chosen_;
        return std::nullopt;
    }

private:
    bool descend(std::size_t next, std::size_t size)
    {
        deadline_.tick();
        if (chosen_.size() == size) return basis_.contains(columns_[target_]);
        for (std::size_t c = next; c < columns_.size(); ++c) {
            if (c == target_) continue;
            if (!basis_.insert(columns_[c])) continue; // a minimal cover is independent
            chosen_.push_back(c);
            const bool found = descend(c + 1, size);
            if (found) {
                basis_.pop();
                return true;
            }
            chosen_.pop_back();
            basis_.pop();
        }
        return false;
    }

    const Matrix& generator_;
    std::size_t target_;
    IncrementalBasis basis_;
    detail::Deadline& deadline_;
    std::vector<std::vector<Symbol>> columns_;
    std::vector<std::size_t> chosen_;
};

void require_redundancy(const LinearCode& code)
{
    if (code.k() == code.n()) throw NoLocality("code has no redundancy");
}

} // namespace

DualCodeword min_covering_dual_codeword(const LinearCode& code, std::size_t coordinate, int max_weight,
                                        const EnumerationLimits& limits)
{
    if (coordinate >= std::size_t(code.n())) {
        throw std::out_of_range("coordinate " + std::to_string(coordinate + 1) + " outside 1.." +
                                std::to_string(code.n()));
    }
    require_redundancy(code);
    detail::require_within(limits, std::size_t(code.n()));
    detail::Deadline deadline(limits.max_wall_time);
    CoverSearch search(code, coordinate, deadline);

    // weight = |T| + 1, and an independent T has at most k elements
    std::size_t largest = std::size_t(std::min(code.k(), code.n() - 1));
    if (max_weight > 0) largest = std::min(largest, std::size_t(max_weight - 1));
    for (std::size_t size = 0; size <= largest && size + 1 <= std::size_t(code.n()); ++size) {
        auto cover = search.find(size);
        if (!cover) continue;
        std::vector<std::size_t> support = *cover;
        support.push_back(coordinate);
        std::sort(support.begin(), support.end());

        const Matrix kernel = detail::embedded_kernel(code.generator(), support);
        const auto row = kernel.row(0);
        const Field& f = code.gf();
        const Symbol scale = f.inv(row[coordinate]);
        DualCodeword word;
        word.entries.resize(row.size());
        for (std::size_t c = 0; c < row.size(); ++c) word.entries[c] = f.mul(row[c], scale);
        word.support = support_of(word.entries);
        return word;
    }
    throw NoLocality("no dual codeword" + std::string(max_weight > 0 ? " within the weight bound" : "") +
                     " covers coordinate " + std::to_string(coordinate + 1));
}

int coordinate_locality(const LinearCode& code, std::size_t coordinate, const EnumerationLimits& limits)
{
    return min_covering_dual_codeword(code, coordinate, 0, limits).weight() - 1;
}

LocalityProfile locality(const LinearCode& code, const EnumerationLimits& limits)
{
    require_redundancy(code);
    LocalityProfile profile;
    for (std::size_t j = 0; j < std::size_t(code.n()); ++j) {
        profile.per_coordinate.push_back(coordinate_locality(code, j, limits));
    }
    profile.r = *std::max_element(profile.per_coordinate.begin(), profile.per_coordinate.end());
    profile.covering_rows = covering_rows(code, profile.r, limits);
    return profile;
}

std::vector<DualCodeword> covering_rows(const LinearCode& code, int r, const EnumerationLimits& limits)
{
    require_redundancy(code);
    if (r < 0) throw std::invalid_argument("locality must be non-negative");
    std::vector<bool> covered(std::size_t(code.n()), false);
    std::vector<DualCodeword> rows;
    for (std::size_t j = 0; j < covered.size(); ++j) {
        if (covered[j]) continue;
        DualCodeword row;
        try {
            row = min_covering_dual_codeword(code, j, r + 1, limits);
        } catch (const NoLocality&) {
            throw std::invalid_argument("coordinate " + std::to_string(j + 1) + " has locality above r = " +
                                        std::to_string(r));
        }
        for (std::size_t c : row.support) covered[c] = true;
        rows.push_back(std::move(row));
    }
    return rows;
}

bool is_lrc(const LinearCode& code, int r, const EnumerationLimits& limits)
{
    if (code.k() == code.n() || r < 0) return false;
    for (std::size_t j = 0; j < std::size_t(code.n()); ++j) {
        try {
            min_covering_dual_codeword(code, j, r + 1, limits);
        } catch (const NoLocality&) {
            return false;
        }
    }
    return true;
}

} // namespace ghwlrc
