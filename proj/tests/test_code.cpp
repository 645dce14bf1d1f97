#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"

#include <random>

using namespace ghwlrc;

TEST_CASE("construction and parity checks")
{
    auto c = fixtures::self_dual_4_2();
    CHECK(c.n() == 4);
    CHECK(c.k() == 2);
    CHECK(rref(c.parity_check()).reduced == rref(Matrix::from_rows(field_of_order(2), {{1, 1, 0, 0}, {0, 0, 1, 1}})).reduced);

    auto rep = fixtures::repetition3();
    CHECK(rep.k() == 1);
    CHECK(rep.parity_check().rows() == 2);
    CHECK((rep.generator() * rep.parity_check().transpose()).is_zero());

    CHECK_THROWS_AS(fixtures::code(2, {{1, 0, 1}, {0, 0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(fixtures::code(2, {{0, 0, 0}}), std::invalid_argument);
}

TEST_CASE("redundant rows are dropped")
{
    auto c = fixtures::code(3, {{1, 2, 0}, {2, 1, 0}, {0, 0, 1}});
    CHECK(c.k() == 2);
}

TEST_CASE("duals")
{
    auto c = fixtures::self_dual_4_2();
    CHECK(c.dual().same_code(c));
    CHECK(fixtures::repetition3().dual().same_code(fixtures::parity3()));
    auto rs = fixtures::rs_7_6_3();
    CHECK(rs.dual().k() == 3);
    CHECK(min_distance(rs.dual()) == 4);
    CHECK_THROWS(fixtures::code(2, {{1, 0}, {0, 1}}).dual());
}

TEST_CASE("dual of dual and row-transform invariance")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const unsigned q = trial % 2 ? 3 : 4;
        const int n = 3 + int(rng() % 6);
        const int k = 1 + int(rng() % unsigned(n - 1));
        auto c = random_code(q, n, k, rng()).code;
        auto dd = LinearCode::from_generator(c.dual().dual().generator());
        CHECK(dd.same_code(c));
        // any invertible row operation leaves the code unchanged
        Matrix g = c.generator();
        auto f = c.field();
        if (g.rows() > 1) {
            for (std::size_t col = 0; col < g.cols(); ++col) g(0, col) = f->add(g(0, col), f->mul(2 % q, g(1, col)));
        }
        CHECK(LinearCode::from_generator(g).same_code(c));
        for (std::size_t r = 0; r < c.generator().rows(); ++r) CHECK(c.contains(c.generator().row(r)));
    }
}

TEST_CASE("minimum distance")
{
    CHECK(min_distance(fixtures::self_dual_4_2()) == 2);
    CHECK(min_distance(fixtures::repetition3()) == 3);
    CHECK(min_distance(fixtures::tb_12_6_3()) == 6);
    const std::vector<Symbol> w{0, 3, 0, 1};
    CHECK(hamming_weight(w) == 2);
    CHECK(support_of(w) == std::vector<std::size_t>{1, 3});
}

TEST_CASE("limits")
{
    EnumerationLimits tight;
    tight.max_n = 4;
    CHECK_THROWS_AS(min_distance(fixtures::tb_12_6_3(), tight), LimitExceeded);
}
