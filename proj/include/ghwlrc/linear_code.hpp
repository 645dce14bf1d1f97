#pragma once

#include "ghwlrc/matrix.hpp"

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ghwlrc {

/// Raised when an exhaustive computation would exceed its configured size or wall time.
class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Size and time guards for the exhaustive kernels.
struct EnumerationLimits {
    std::size_t max_n = 24;                         ///< subset sweeps (2^n subsets)
    std::uint64_t max_oracle_codewords = 1'000'000; ///< q^k for the direct subcode oracle
    std::chrono::milliseconds max_wall_time{std::chrono::minutes(10)};
};

/// A subcode certificate: linearly independent codewords and their joint support.
struct SubcodeWitness {
    std::vector<std::vector<Symbol>> basis;
    std::size_t dimension = 0;
    std::vector<std::size_t> support; ///< 0-based, sorted
};

/**
 * [n, k] linear code held as a canonical (RREF) generator plus a parity-check
 * matrix derived from its nullspace.
 *
 * Primal codes may not have an all-zero generator column. Codes produced by
 * `dual()` are allowed to, and report it through `zero_coordinates()`.
 */
class LinearCode {
public:
    /// Redundant rows are dropped. Throws std::invalid_argument on k = 0 or a zero column.
    static LinearCode from_generator(const Matrix& generator);

    /// The [n, n - k] code generated by the parity-check matrix. Throws
    /// std::invalid_argument when k = n (the dual is the zero code).
    LinearCode dual() const;

    const FieldPtr& field() const { return generator_.field(); }
    const Field& gf() const { return *generator_.field(); }
    unsigned q() const { return gf().q(); }
    int n() const { return int(generator_.cols()); }
    int k() const { return int(generator_.rows()); }

    const Matrix& generator() const { return generator_; }
    const Matrix& parity_check() const { return parity_check_; }

    /// Coordinates where every codeword is zero (empty for primal codes).
    const std::vector<std::size_t>& zero_coordinates() const { return zero_coordinates_; }
    bool has_zero_coordinate() const { return !zero_coordinates_.empty(); }

    bool contains(std::span<const Symbol> word) const;
    /// Same codeword set (canonical generators compared).
    bool same_code(const LinearCode& other) const;

private:
    LinearCode(Matrix generator, bool allow_zero_columns);

    Matrix generator_;
    Matrix parity_check_;
    std::vector<std::size_t> zero_coordinates_;
};

/// Minimum distance via the smallest support hosting a nonzero codeword.
int min_distance(const LinearCode& code, const EnumerationLimits& limits = {});

std::size_t hamming_weight(std::span<const Symbol> word);
std::vector<std::size_t> support_of(std::span<const Symbol> word);

} // namespace ghwlrc
