#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "ghwlrc/ghw.hpp"

#include <algorithm>
#include <bit>
#include <random>

using namespace ghwlrc;

namespace {

// Binary codes only: every i-tuple of codewords, rank and joint support by hand.
int brute_binary_ghw(const LinearCode& c, int i)
{
    const int n = c.n(), k = c.k();
    std::vector<unsigned> words;
    for (unsigned m = 1; m < (1u << k); ++m) {
        unsigned w = 0;
        for (int t = 0; t < k; ++t) {
            if (!(m >> t & 1)) continue;
            for (int col = 0; col < n; ++col) w ^= unsigned(c.generator()(std::size_t(t), std::size_t(col))) << col;
        }
        words.push_back(w);
    }
    int best = n + 1;
    std::vector<unsigned> pick;
    auto rank2 = [](std::vector<unsigned> v) {
        int r = 0;
        for (int bit = 31; bit >= 0; --bit) {
            auto it = std::find_if(v.begin(), v.end(), [bit](unsigned x) { return x >> bit & 1; });
            if (it == v.end()) continue;
            const unsigned p = *it;
            v.erase(it);
            for (auto& x : v) {
                if (x >> bit & 1) x ^= p;
            }
            ++r;
        }
        return r;
    };
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (int(pick.size()) == i) {
            if (rank2(pick) == i) {
                unsigned s = 0;
                for (unsigned w : pick) s |= w;
                best = std::min(best, std::popcount(s));
            }
            return;
        }
        for (std::size_t t = from; t < words.size(); ++t) {
            pick.push_back(words[t]);
            self(self, t + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return best;
}

} // namespace

TEST_CASE("single weights")
{
    auto c = fixtures::self_dual_4_2();
    CHECK(ghw(c, 1).weight == 2);
    CHECK(ghw(c, 2).weight == 4);
    CHECK(ghw(fixtures::tb_12_6_3(), 4).weight == 10);
    auto full = fixtures::code(3, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    for (int i = 1; i <= 4; ++i) CHECK(ghw(full, i).weight == i);
    CHECK_THROWS(ghw(c, 3));
    CHECK_THROWS(ghw(c, 0));
}

TEST_CASE("hierarchies and gaps")
{
    auto ex = fixtures::tb_12_6_3();
    const auto h = weight_hierarchy(ex);
    CHECK(h.values == std::vector<int>{6, 7, 8, 10, 11, 12});
    CHECK(h.gaps == std::vector<int>{1, 2, 3, 4, 5, 9});
    const auto hd = dual_weight_hierarchy(ex);
    CHECK(hd.values == std::vector<int>{4, 8, 9, 10, 11, 12});
    CHECK(hd.gaps == std::vector<int>{1, 2, 3, 5, 6, 7});
    CHECK(gap_numbers(ex) == std::vector<int>{1, 2, 3, 4, 5, 9});

    CHECK(weight_hierarchy(fixtures::rs_7_6_3()).values == std::vector<int>{4, 5, 6});
    auto mds73 = reed_solomon(8, 7, 3).code;
    CHECK(weight_hierarchy(mds73).values == std::vector<int>{5, 6, 7});
    CHECK(gap_numbers(mds73) == std::vector<int>{1, 2, 3, 4});
    CHECK(complement_in_range({2, 4}, 5) == std::vector<int>{1, 3, 5});
}

TEST_CASE("witnesses certify the weights")
{
    for (const auto& c : {fixtures::tb_12_6_3(), fixtures::rs_7_6_3(), fixtures::self_dual_4_2()}) {
        const auto h = weight_hierarchy(c, true);
        REQUIRE(h.witnesses.size() == h.values.size());
        for (int i = 1; i <= c.k(); ++i) {
            const auto& w = h.witnesses[std::size_t(i - 1)];
            CHECK(int(w.support.size()) == h.d(i));
            CHECK(int(w.dimension) >= i);
            CHECK(w.basis.size() == w.dimension);
            Matrix basis(c.field(), w.basis.size(), std::size_t(c.n()));
            std::vector<bool> touched(std::size_t(c.n()), false);
            for (std::size_t r = 0; r < w.basis.size(); ++r) {
                CHECK(c.contains(w.basis[r]));
                for (std::size_t col = 0; col < w.basis[r].size(); ++col) {
                    basis(r, col) = w.basis[r][col];
                    if (w.basis[r][col] != 0) touched[col] = true;
                }
            }
            CHECK(rank(basis) == w.dimension);
            for (std::size_t col = 0; col < touched.size(); ++col) {
                const bool in = std::binary_search(w.support.begin(), w.support.end(), col);
                CHECK(touched[col] == in);
            }
        }
    }
}

TEST_CASE("oracle")
{
    auto c = fixtures::self_dual_4_2();
    CHECK(ghw_oracle(c, 1) == 2);
    CHECK(ghw_oracle(fixtures::parity3(), 1) == 2);
    CHECK(ghw_oracle(fixtures::parity3(), 2) == 3);
    EnumerationLimits tight;
    tight.max_oracle_codewords = 100;
    CHECK_THROWS_AS(ghw_oracle(fixtures::tb_12_6_3(), 1, tight), LimitExceeded);
}

TEST_CASE("sweep, oracle and brute force agree")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 2 + int(rng() % 5);
        const int k = 1 + int(rng() % unsigned(std::min(n, 4)));
        auto c = random_code(2, n, k, rng()).code;
        const auto h = weight_hierarchy(c);
        for (int i = 1; i <= k; ++i) {
            CHECK(h.d(i) == brute_binary_ghw(c, i));
            CHECK(h.d(i) == ghw_oracle(c, i));
        }
    }
    auto c = random_code(3, 6, 3, 7).code;
    for (int i = 1; i <= 3; ++i) CHECK(weight_hierarchy(c).d(i) == ghw_oracle(c, i));
}

TEST_CASE("wei duality")
{
    CHECK(check_wei_duality(fixtures::tb_12_6_3()).holds);
    CHECK(check_wei_duality(fixtures::self_dual_4_2()).holds);
    CHECK(check_wei_duality(fixtures::repetition3()).holds);
    CHECK(dual_weight_hierarchy(fixtures::repetition3()).values == std::vector<int>{2, 3});

    WeightHierarchy p{4, {2, 4}, {1, 3}, {}};
    WeightHierarchy bad{4, {1, 4}, {2, 3}, {}};
    CHECK_FALSE(check_wei_duality(p, bad).holds);
}

TEST_CASE("g_k of the dual")
{
    CHECK(gk_dual(fixtures::tb_12_6_3()) == 7);
    CHECK(gk_dual(fixtures::self_dual_4_2()) == 3);
    auto mds = reed_solomon(8, 7, 3).code;
    CHECK(gk_dual(mds) == 3);
    CHECK(weight_hierarchy(mds).d(1) == 7 + 1 - gk_dual(mds));
    const GkDual forms = gk_dual_forms({4, 8, 9, 10, 11, 12}, 12, 6);
    CHECK(forms.max_form == 7);
    CHECK(forms.min_form == 7);
    // k = n: empty dual
    const GkDual full = gk_dual_forms({}, 3, 3);
    CHECK(full.max_form == full.min_form);
}
