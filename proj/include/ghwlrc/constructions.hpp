#pragma once

#include "ghwlrc/linear_code.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ghwlrc {

enum class ConstructionKind { tamo_barg, reed_solomon, random };

/// Parameters of a fixture, with the evaluation points the construction used.
struct ConstructionSpec {
    ConstructionKind kind = ConstructionKind::random;
    unsigned q = 2;
    int n = 0;
    int k = 0;
    int r = 0;              ///< tamo_barg only
    std::uint64_t seed = 0; ///< random only
    std::vector<Symbol> evaluation_points;
};

struct Construction {
    ConstructionSpec spec;
    LinearCode code;
};

/**
 * Tamo-Barg polynomial-evaluation LRC with good polynomial x^(r+1).
 *
 * Evaluation set: the n-th roots of unity of GF(q) (so n | q-1), which splits
 * into n/(r+1) cosets of the order-(r+1) subgroup; x^(r+1) is constant on each
 * coset. Messages are spanned by the monomials x^(a + (r+1)b) with a < r and
 * b < floor(k/r), plus a < k mod r at b = floor(k/r). Restricted to a coset
 * every such polynomial has degree < r in x, which gives locality r.
 *
 * Requires (r+1) | n, n | q-1 and k <= n r / (r+1). Optimality is not assumed;
 * certify the result before relying on it.
 */
Construction tamo_barg(unsigned q, int n, int k, int r);

/// Vandermonde generator on the first n field elements in index order.
Construction reed_solomon(unsigned q, int n, int k);

/**
 * Uniformly random full-rank k×n generator with no zero column.
 *
 * Symbols are drawn from std::mt19937_64 seeded with `seed` (the engine's output
 * sequence is fixed by the C++ standard) and mapped to [0, q) by rejection
 * sampling on the raw 64-bit output, so the result is identical on every
 * platform. Zero columns are redrawn; rank-deficient matrices are redrawn whole.
 */
Construction random_code(unsigned q, int n, int k, std::uint64_t seed);

const char* to_string(ConstructionKind kind);

} // namespace ghwlrc
