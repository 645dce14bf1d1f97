#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "ghwlrc/bounds.hpp"
#include "ghwlrc/ghw.hpp"
#include "ghwlrc/locality.hpp"
#include "ghwlrc/suites.hpp"

using namespace ghwlrc;

TEST_CASE("tamo-barg fixtures")
{
    const auto ex = tamo_barg(13, 12, 6, 3);
    CHECK(ex.code.n() == 12);
    CHECK(ex.code.k() == 6);
    CHECK(ex.spec.evaluation_points.size() == 12);
    CHECK(min_distance(ex.code) == 6);
    CHECK(locality(ex.code).r == 3);

    const auto c125 = tamo_barg(13, 12, 5, 3).code;
    CHECK(min_distance(c125) == 7);

    const auto c421 = tamo_barg(5, 4, 2, 1).code;
    CHECK(weight_hierarchy(c421).values == std::vector<int>{2, 4});
    CHECK(certify_optimal(c421).is_optimal);

    CHECK_THROWS(tamo_barg(9, 8, 4, 2));    // (r+1) does not divide n
    CHECK_THROWS(tamo_barg(13, 10, 4, 1));  // n does not divide q-1
    CHECK_THROWS(tamo_barg(13, 12, 10, 3)); // k too large
}

TEST_CASE("certified fixtures")
{
    std::string why;
    CHECK(certified_tamo_barg(13, 12, 6, 3, &why).has_value());
    CHECK_FALSE(certified_tamo_barg(9, 8, 4, 2, &why).has_value());
    CHECK(why.find("(r+1)") != std::string::npos);
}

TEST_CASE("reed-solomon")
{
    CHECK(weight_hierarchy(reed_solomon(7, 6, 3).code).values == std::vector<int>{4, 5, 6});
    CHECK(weight_hierarchy(reed_solomon(8, 7, 3).code).values == std::vector<int>{5, 6, 7});
    CHECK(weight_hierarchy(reed_solomon(5, 4, 4).code).values == std::vector<int>{1, 2, 3, 4});
    CHECK_THROWS(reed_solomon(5, 6, 2));
}

TEST_CASE("random codes")
{
    const auto a = random_code(2, 8, 4, 1);
    const auto b = random_code(2, 8, 4, 1);
    CHECK(a.code.generator() == b.code.generator());
    CHECK(a.code.k() == 4);
    for (std::size_t c = 0; c < 8; ++c) CHECK_FALSE(a.code.generator().column_is_zero(c));

    const auto t = random_code(3, 6, 3, 7).code;
    for (int i = 1; i <= 3; ++i) CHECK(weight_hierarchy(t).d(i) == ghw_oracle(t, i));

    const auto full = random_code(2, 8, 8, 0).code;
    CHECK(full.k() == 8);
    CHECK_THROWS_AS(locality(full), NoLocality);
    CHECK_THROWS(random_code(2, 4, 5, 0));
}

TEST_CASE("random LRC codes have the requested locality")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto c = random_lrc_code(3, 10, 3, 1, seed);
        CHECK(is_lrc(c, 3));
        CHECK(c.generator() == random_lrc_code(3, 10, 3, 1, seed).generator());
    }
}
