#include "ghwlrc/constructions.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace ghwlrc {

namespace {

Matrix evaluation_matrix(const FieldPtr& field, const std::vector<int>& degrees, const std::vector<Symbol>& points)
{
    Matrix g(field, degrees.size(), points.size());
    for (std::size_t row = 0; row < degrees.size(); ++row) {
        for (std::size_t c = 0; c < points.size(); ++c) g(row, c) = field->pow(points[c], std::uint64_t(degrees[row]));
    }
    return g;
}

/// Uniform draw from [0, bound) using only raw engine output.
std::uint64_t draw_below(std::mt19937_64& engine, std::uint64_t bound)
{
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        const std::uint64_t x = engine();
        if (x < limit) return x % bound;
    }
}

} // namespace

const char* to_string(ConstructionKind kind)
{
    switch (kind) {
    case ConstructionKind::tamo_barg: return "tamo-barg";
    case ConstructionKind::reed_solomon: return "reed-solomon";
    case ConstructionKind::random: return "random";
    }
    return "unknown";
}

Construction tamo_barg(unsigned q, int n, int k, int r)
{
    if (r < 1 || k < 1 || n < 1) throw std::invalid_argument("tamo-barg needs positive n, k, r");
    if (n % (r + 1) != 0) throw std::invalid_argument("tamo-barg needs (r+1) | n");
    if ((q - 1) % unsigned(n) != 0) throw std::invalid_argument("tamo-barg needs n | q-1");
    if (k * (r + 1) > n * r) throw std::invalid_argument("tamo-barg needs k <= n r / (r+1)");
    const FieldPtr field = field_of_order(q);

    std::vector<Symbol> points;
    for (unsigned x = 1; x < q; ++x) {
        if (field->pow(Symbol(x), std::uint64_t(n)) == 1) points.push_back(Symbol(x));
    }

    std::vector<int> degrees;
    const int full_blocks = k / r;
    for (int b = 0; b < full_blocks; ++b) {
        for (int a = 0; a < r; ++a) degrees.push_back(a + (r + 1) * b);
    }
    for (int a = 0; a < k % r; ++a) degrees.push_back(a + (r + 1) * full_blocks);
    std::sort(degrees.begin(), degrees.end());

    ConstructionSpec spec{ConstructionKind::tamo_barg, q, n, k, r, 0, points};
    return {std::move(spec), LinearCode::from_generator(evaluation_matrix(field, degrees, points))};
}

Construction reed_solomon(unsigned q, int n, int k)
{
    if (k < 1 || k > n) throw std::invalid_argument("reed-solomon needs 1 <= k <= n");
    if (unsigned(n) > q) throw std::invalid_argument("reed-solomon needs n <= q");
    const FieldPtr field = field_of_order(q);
    std::vector<Symbol> points;
    for (int x = 0; x < n; ++x) points.push_back(Symbol(x));
    std::vector<int> degrees;
    for (int i = 0; i < k; ++i) degrees.push_back(i);

    ConstructionSpec spec{ConstructionKind::reed_solomon, q, n, k, 0, 0, points};
    return {std::move(spec), LinearCode::from_generator(evaluation_matrix(field, degrees, points))};
}

Construction random_code(unsigned q, int n, int k, std::uint64_t seed)
{
    if (k < 1 || k > n) throw std::invalid_argument("random code needs 1 <= k <= n");
    const FieldPtr field = field_of_order(q);
    std::mt19937_64 engine(seed);
    Matrix g(field, std::size_t(k), std::size_t(n));
    for (;;) {
        for (std::size_t c = 0; c < std::size_t(n); ++c) {
            do {
                for (std::size_t row = 0; row < std::size_t(k); ++row) g(row, c) = Symbol(draw_below(engine, q));
            } while (g.column_is_zero(c));
        }
        if (rank(g) == std::size_t(k)) break;
    }
    ConstructionSpec spec{ConstructionKind::random, q, n, k, 0, seed, {}};
    return {std::move(spec), LinearCode::from_generator(g)};
}

} // namespace ghwlrc
