#include <doctest.h>

#include <random>

#include "tricube/poly.hpp"

using namespace tricube;

namespace {

Poly make(std::vector<long> coeffs) {
    std::vector<Rat> c;
    for (long v : coeffs) c.emplace_back(v);
    return Poly(std::move(c));
}

}  // namespace

TEST_CASE("cubic discriminants") {
    // tetrahedral f1 at n=1: disc(x^3 - x - 6) = 4(1 - 243)
    CHECK(cubic_discriminant(make({-6, -1, 0, 1})) == Rat(-968));
    CHECK(cubic_discriminant(make({0, 0, 0, 1})) == Rat(0));
    // tetrahedral f2 at n=1: x^3 + 12x^2 + 36x + 968
    CHECK(cubic_discriminant(make({968, 36, 12, 1})) == Rat(-3888) * 242 * 26);
    CHECK_THROWS_AS(cubic_discriminant(make({1, 1})), std::invalid_argument);
}

TEST_CASE("discriminant is invariant under depressing the cubic") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> coef(-50, 50);
    for (int i = 0; i < 200; ++i) {
        Rat p(coef(rng)), q(coef(rng)), r(coef(rng));
        Poly f(std::vector<Rat>{r, q, p, Rat(1)});
        Poly shift(std::vector<Rat>{-p / 3, Rat(1)});  // x -> x - p/3
        Poly depressed = f.compose(shift);
        CHECK(depressed.coeff(2) == 0);
        CHECK(cubic_discriminant(f) == cubic_discriminant(depressed));
    }
}

TEST_CASE("discriminant scaling law") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<long> coef(-30, 30);
    for (int i = 0; i < 200; ++i) {
        Rat a(coef(rng)), c(coef(rng));
        long kk = coef(rng);
        if (kk == 0) continue;
        Rat k(kk);
        Poly f(std::vector<Rat>{c, a, Rat(0), Rat(1)});
        Poly g(std::vector<Rat>{k * k * k * c, k * k * a, Rat(0), Rat(1)});
        Rat k6 = k * k * k * k * k * k;
        CHECK(cubic_discriminant(g) == k6 * cubic_discriminant(f));
    }
}

TEST_CASE("rational roots of monic integer polynomials") {
    CHECK(rational_roots(make({-50, 21, 0, 1})) == std::vector<Int>{Int(2)});
    CHECK(rational_roots(make({0, -1, 0, 1})) ==
          std::vector<Int>{Int(-1), Int(0), Int(1)});
    CHECK(rational_roots(make({19, 19, 0, 1})).empty());
    CHECK_THROWS_AS(rational_roots(make({1, 2})), std::invalid_argument);  // not monic
}

TEST_CASE("factor_cubic") {
    // 7t^3 + 4t^2 - 4t + 32 = 7 (t+2)(t^2 - 10/7 t + 16/7)
    Poly f = make({32, -4, 4, 7});
    CubicFactorization fac = factor_cubic(f);
    CHECK(fac.unit == Rat(7));
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0] == Poly(std::vector<Rat>{Rat(2), Rat(1)}));
    CHECK(fac.factors[1] ==
          Poly(std::vector<Rat>{make_rat(16, 7), make_rat(-10, 7), Rat(1)}));
    CHECK(fac.product() == f);

    fac = factor_cubic(make({0, -1, 0, 1}));  // t^3 - t
    REQUIRE(fac.factors.size() == 3);
    CHECK(fac.product() == make({0, -1, 0, 1}));

    fac = factor_cubic(make({19, 19, 0, 1}));
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].degree() == 3);
    CHECK(cubic_irreducible(make({19, 19, 0, 1})));
}

TEST_CASE("factor_cubic multiplies back (random)") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> coef(-20, 20);
    for (int i = 0; i < 300; ++i) {
        long lc = coef(rng);
        if (lc == 0) continue;
        Poly f(std::vector<Rat>{Rat(coef(rng)), Rat(coef(rng)), Rat(coef(rng)), Rat(lc)});
        CubicFactorization fac = factor_cubic(f);
        CHECK(fac.product() == f);
        for (const auto& g : fac.factors) {
            CHECK(g.is_monic());
            if (g.degree() == 2) {
                Rat disc = g.coeff(1) * g.coeff(1) - Rat(4) * g.coeff(0);
                CHECK(!is_square_rat(disc));
            }
            if (g.degree() == 3) CHECK(rational_roots_q(g).empty());
        }
    }
}

TEST_CASE("resultants") {
    CHECK(resultant(make({1, 0, 1}), make({0, 1})) == Rat(1));
    CHECK(resultant(make({87, 0, 1}), make({-3, 1})) == Rat(96));
    Poly f = make({3, 1, 4, 1});
    CHECK(resultant(f, f) == Rat(0));
    CHECK_THROWS_AS(resultant(f, Poly()), std::invalid_argument);
    // Res(f, g) = lc(f)^deg(g) * prod g(alpha): cross-check against a product
    // of evaluations for split f
    Poly split = make({0, -1, 0, 1});  // roots -1, 0, 1
    Poly g = make({5, 3, 2});
    CHECK(resultant(split, g) == g.eval(Rat(-1)) * g.eval(Rat(0)) * g.eval(Rat(1)));
}

TEST_CASE("poly utilities") {
    Poly f = make({1, 2, 1});
    CHECK(poly_gcd(f, f.derivative()).degree() == 1);
    CHECK(!is_squarefree(f));
    CHECK(is_squarefree(make({-6, -1, 0, 1})));
    CHECK(make({1, 1}).compose(make({2, 3})) == make({3, 3}));
    CHECK(make({1, 0, 1}).to_string() == "x^2 + 1");
}
