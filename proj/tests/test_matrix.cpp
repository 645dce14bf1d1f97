#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghwlrc/matrix.hpp"

#include <random>

using namespace ghwlrc;

namespace {

Matrix random_matrix(FieldPtr f, std::size_t rows, std::size_t cols, std::mt19937_64& rng)
{
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = Symbol(rng() % f->q());
    }
    return m;
}

} // namespace

TEST_CASE("rank examples")
{
    auto f2 = field_of_order(2);
    const auto id = rref(Matrix::identity(f2, 3));
    CHECK(id.rank == 3);
    CHECK(id.pivot_columns == std::vector<std::size_t>{0, 1, 2});
    CHECK(rank(Matrix::from_rows(f2, {{1, 1}, {1, 1}})) == 1);
    CHECK(rank(Matrix::from_rows(field_of_order(13), {{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("rank of column subsets")
{
    auto f2 = field_of_order(2);
    const std::vector<std::size_t> s02{0, 2}, s01{0, 1}, none{};
    CHECK(rank_of_columns(Matrix::identity(f2, 4), s02) == 2);
    const Matrix g = Matrix::from_rows(f2, {{1, 1, 0, 0}, {0, 0, 1, 1}});
    CHECK(rank_of_columns(g, s01) == 1);
    CHECK(rank_of_columns(g, none) == 0);
}

TEST_CASE("nullspace examples")
{
    auto f2 = field_of_order(2);
    CHECK(nullspace(Matrix::identity(f2, 4)).rows() == 0);
    const Matrix n1 = nullspace(Matrix::from_rows(f2, {{1, 1}}));
    CHECK(n1 == Matrix::from_rows(f2, {{1, 1}}));
    const Matrix g = Matrix::from_rows(f2, {{1, 1, 0, 0}, {0, 0, 1, 1}});
    const Matrix n2 = nullspace(g);
    CHECK(n2.rows() == 2);
    CHECK(rref(n2).reduced == rref(g).reduced);
}

TEST_CASE("random invariants")
{
    std::mt19937_64 rng(11);
    for (unsigned q : {2u, 3u, 4u, 7u, 8u}) {
        auto f = field_of_order(q);
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 7;
            const Matrix m = random_matrix(f, rows, cols, rng);
            CAPTURE(q);
            CHECK(rank(m) == rank(m.transpose()));
            const auto once = rref(m);
            CHECK(rref(once.reduced).reduced == once.reduced);
            const Matrix kernel = nullspace(m);
            CHECK(kernel.rows() == cols - once.rank);
            if (kernel.rows() > 0) {
                CHECK((m * kernel.transpose()).is_zero());
                CHECK(rank(kernel) == kernel.rows());
            }
        }
    }
}

TEST_CASE("incremental basis")
{
    auto f = field_of_order(5);
    IncrementalBasis basis(*f, 3);
    const std::vector<Symbol> a{1, 2, 3}, b{0, 1, 2}, c{1, 3, 0};
    CHECK(basis.insert(a));
    CHECK(basis.insert(b));
    CHECK(basis.rank() == 2);
    // c = a + b
    CHECK(basis.contains(c));
    CHECK_FALSE(basis.insert(c));
    basis.pop();
    CHECK(basis.rank() == 1);
    CHECK_FALSE(basis.contains(c));
}

TEST_CASE("range checks")
{
    auto f2 = field_of_order(2);
    Matrix m(f2, 2, 2);
    CHECK_THROWS(m.at(2, 0));
    CHECK_THROWS(m.set(0, 0, 2));
    CHECK_THROWS(Matrix::from_rows(f2, {{1, 0}, {1}}));
}
