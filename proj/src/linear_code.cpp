#include "ghwlrc/linear_code.hpp"

#include "subset_sweep.hpp"

#include <string>

namespace ghwlrc {

namespace {

Matrix canonical_rows(const Matrix& generator)
{
    const RrefResult reduced = rref(generator);
    return reduced.reduced.row_block(0, reduced.rank);
}

} // namespace

LinearCode::LinearCode(Matrix generator, bool allow_zero_columns)
    : generator_(std::move(generator)), parity_check_(nullspace(generator_))
{
    if (generator_.rows() == 0) throw std::invalid_argument("code dimension must be at least 1");
    for (std::size_t c = 0; c < generator_.cols(); ++c) {
        if (generator_.column_is_zero(c)) zero_coordinates_.push_back(c);
    }
    if (!allow_zero_columns && !zero_coordinates_.empty()) {
        throw std::invalid_argument("generator column " + std::to_string(zero_coordinates_.front() + 1) +
                                    " is all-zero");
    }
}

LinearCode LinearCode::from_generator(const Matrix& generator)
{
    if (generator.cols() == 0) throw std::invalid_argument("code length must be at least 1");
    return LinearCode(canonical_rows(generator), false);
}

LinearCode LinearCode::dual() const
{
    if (parity_check_.rows() == 0) throw std::invalid_argument("the dual of the full space is the zero code");
    return LinearCode(canonical_rows(parity_check_), true);
}

bool LinearCode::contains(std::span<const Symbol> word) const
{
    if (word.size() != generator_.cols()) return false;
    const Field& f = gf();
    for (std::size_t r = 0; r < parity_check_.rows(); ++r) {
        Symbol acc = 0;
        for (std::size_t c = 0; c < word.size(); ++c) acc = f.add(acc, f.mul(parity_check_(r, c), word[c]));
        if (acc != 0) return false;
    }
    return true;
}

bool LinearCode::same_code(const LinearCode& other) const { return generator_ == other.generator_; }

int min_distance(const LinearCode& code, const EnumerationLimits& limits)
{
    const auto profile = detail::nullity_profile(code.parity_check(), 1, limits);
    return detail::hierarchy_from_profile(profile, 1).front();
}

std::size_t hamming_weight(std::span<const Symbol> word)
{
    std::size_t weight = 0;
    for (Symbol s : word) weight += s != 0;
    return weight;
}

std::vector<std::size_t> support_of(std::span<const Symbol> word)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] != 0) out.push_back(i);
    }
    return out;
}

} // namespace ghwlrc
