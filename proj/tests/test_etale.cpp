#include <doctest.h>

#include <random>

#include "tricube/etale.hpp"

using namespace tricube;

namespace {

Poly make(std::vector<long> coeffs) {
    std::vector<Rat> c;
    for (long v : coeffs) c.emplace_back(v);
    return Poly(std::move(c));
}

}  // namespace

TEST_CASE("etale_inverse") {
    Poly m = make({87, 0, 1});  // x^2 + 87
    EtaleElement two = EtaleElement::constant(m, Rat(2));
    CHECK(etale_inverse(two) == EtaleElement::constant(m, make_rat(1, 2)));

    EtaleElement x = EtaleElement::generator(m);
    EtaleElement inv = etale_inverse(x);
    CHECK(inv == EtaleElement(m, Poly(std::vector<Rat>{Rat(0), make_rat(-1, 87)})));
    CHECK(x * inv == EtaleElement::constant(m, Rat(1)));

    Poly split = make({-1, 0, 1});  // x^2 - 1: x-1 is a zero divisor
    EtaleElement zd = EtaleElement(split, make({-1, 1}));
    CHECK_THROWS_AS(etale_inverse(zd), non_invertible_error);
}

TEST_CASE("etale_norm") {
    Poly cubic = make({2, 1, 0, 1});
    CHECK(etale_norm(EtaleElement::constant(cubic, Rat(5))) == Rat(125));
    Poly m = make({87, 0, 1});
    CHECK(etale_norm(EtaleElement::generator(m)) == Rat(87));
    Poly lin = make({3, 1});  // degree-1 residue field
    CHECK(etale_norm(EtaleElement::constant(lin, Rat(-6))) == Rat(-6));
}

TEST_CASE("etale_norm is multiplicative (random)") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<long> coef(-12, 12);
    int done = 0;
    while (done < 300) {
        int deg = 2 + (int)(rng() % 2);
        std::vector<Rat> mc;
        for (int i = 0; i < deg; ++i) mc.emplace_back(coef(rng));
        mc.emplace_back(1);
        Poly m(mc);
        if (m.degree() != deg || !is_squarefree(m)) continue;
        std::vector<Rat> v1, v2;
        for (int i = 0; i < deg; ++i) {
            v1.emplace_back(coef(rng));
            v2.emplace_back(coef(rng));
        }
        EtaleElement e1(m, Poly(v1)), e2(m, Poly(v2));
        CHECK(etale_norm(e1 * e2) == etale_norm(e1) * etale_norm(e2));
        ++done;
    }
}

TEST_CASE("etale_sqrt in quadratic fields") {
    // residue field of the U_50 quadratic singular point
    Poly m(std::vector<Rat>{make_rat(16, 7), make_rat(-10, 7), Rat(1)});
    EtaleElement lam = EtaleElement::generator(m);
    // -6 * a_p with a_p = 144 - 189 lam is the square of +-(12 + 21 lam)
    EtaleElement target =
        EtaleElement(m, Poly(std::vector<Rat>{Rat(-864), Rat(1134)}));
    auto root = etale_sqrt(target);
    REQUIRE(root.has_value());
    CHECK(*root * *root == target);
    // a_p itself is not a square there
    EtaleElement ap = EtaleElement(m, Poly(std::vector<Rat>{Rat(144), Rat(-189)}));
    CHECK(!etale_sqrt(ap).has_value());

    // rational constants inside the field: 49 is a rational square and -87 is
    // D times a square (the field is Q(sqrt(-87))), 3 is neither
    CHECK(etale_sqrt(EtaleElement::constant(m, Rat(49))).has_value());
    CHECK(!etale_sqrt(EtaleElement::constant(m, Rat(3))).has_value());
    EtaleElement c87 = EtaleElement::constant(m, Rat(-87));
    auto r2 = etale_sqrt(c87);
    REQUIRE(r2.has_value());
    CHECK(*r2 * *r2 == c87);

    Poly deg3 = make({2, 1, 0, 1});
    CHECK_THROWS_AS(etale_sqrt(EtaleElement::constant(deg3, Rat(4))),
                    std::invalid_argument);
}

TEST_CASE("etale_sqrt random squares round-trip") {
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<long> coef(-9, 9);
    int done = 0;
    while (done < 200) {
        Rat q(coef(rng)), r(coef(rng));
        Poly m(std::vector<Rat>{r, q, Rat(1)});
        if (!is_squarefree(m) || is_square_rat(q * q - Rat(4) * r)) continue;
        EtaleElement e(m, Poly(std::vector<Rat>{Rat(coef(rng)), Rat(coef(rng))}));
        auto root = etale_sqrt(e * e);
        REQUIRE(root.has_value());
        CHECK(*root * *root == e * e);
        ++done;
    }
}
