#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghwlrc/field.hpp"

#include <stdexcept>

using namespace ghwlrc;

TEST_CASE("construction")
{
    CHECK(make_field(2)->q() == 2);
    CHECK(make_field(13)->q() == 13);
    auto f4 = make_field(2, 2, std::vector<unsigned>{1, 1, 1});
    CHECK(f4->q() == 4);
    CHECK(f4->modulus() == std::vector<unsigned>{1, 1, 1});
    CHECK_THROWS(make_field(4));
    CHECK_THROWS(make_field(2, 2, std::vector<unsigned>{1, 0, 1})); // x^2+1 = (x+1)^2
    CHECK_THROWS(make_field(3, 1, std::vector<unsigned>{1, 1}));
    CHECK_THROWS(field_of_order(6));
    CHECK_THROWS(field_of_order(1));
    CHECK(field_of_order(8)->m() == 3);
    CHECK(field_of_order(9)->p() == 3);
}

TEST_CASE("worked values")
{
    auto f2 = make_field(2);
    CHECK(f2->add(1, 1) == 0);
    auto f13 = make_field(13);
    CHECK(f13->inv(5) == 8);
    auto f4 = make_field(2, 2, std::vector<unsigned>{1, 1, 1});
    // x encoded as 2, x + 1 as 3
    CHECK(f4->mul(2, 2) == 3);
    CHECK_THROWS_AS(f13->inv(0), std::domain_error);
}

TEST_CASE("default modulus is the smallest irreducible")
{
    CHECK(default_modulus(2, 2) == std::vector<unsigned>{1, 1, 1});
    CHECK(default_modulus(2, 3) == std::vector<unsigned>{1, 1, 0, 1});
    CHECK(is_irreducible(2, {1, 1, 0, 1}));
    CHECK_FALSE(is_irreducible(2, {1, 0, 0, 1}));
}

TEST_CASE("field axioms exhaustively for q <= 16")
{
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
        CAPTURE(q);
        auto f = field_of_order(q);
        bool ok = true;
        for (unsigned a = 0; a < q; ++a) {
            const Symbol sa = Symbol(a);
            ok = ok && f->add(sa, 0) == sa && f->mul(sa, 1) == sa && f->add(sa, f->neg(sa)) == 0;
            if (a != 0) ok = ok && f->mul(sa, f->inv(sa)) == 1;
            for (unsigned b = 0; b < q; ++b) {
                const Symbol sb = Symbol(b);
                ok = ok && f->add(sa, sb) == f->add(sb, sa) && f->mul(sa, sb) == f->mul(sb, sa);
                ok = ok && f->sub(f->add(sa, sb), sb) == sa;
                if (a != 0 && b != 0) ok = ok && f->mul(sa, sb) != 0;
                for (unsigned c = 0; c < q; ++c) {
                    const Symbol sc = Symbol(c);
                    ok = ok && f->add(f->add(sa, sb), sc) == f->add(sa, f->add(sb, sc));
                    ok = ok && f->mul(f->mul(sa, sb), sc) == f->mul(sa, f->mul(sb, sc));
                    ok = ok && f->mul(sa, f->add(sb, sc)) == f->add(f->mul(sa, sb), f->mul(sa, sc));
                }
            }
        }
        CHECK(ok);
        // primitive element generates the multiplicative group
        const Symbol g = f->primitive_element();
        unsigned order = 1;
        for (Symbol x = g; x != 1; x = f->mul(x, g)) ++order;
        CHECK(order == q - 1);
        CHECK(f->pow(g, q - 1) == 1);
    }
}

TEST_CASE("field elements")
{
    auto f = make_field(13);
    FieldElement a(f, 5), b(f, 8);
    CHECK((a * b).value() == 1);
    CHECK((a / a).value() == 1);
    CHECK((-a + a).is_zero());
    CHECK(a.inv() == b);
    CHECK(a.pow(12).value() == 1);
    FieldElement other(make_field(11), 5);
    CHECK_THROWS(a + other);
    CHECK_THROWS(FieldElement(f, 13));
}
