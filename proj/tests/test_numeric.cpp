#include <doctest.h>

#include <random>

#include "tricube/numeric.hpp"

using namespace tricube;

TEST_CASE("integer_sqrt floor and exactness") {
    auto r = integer_sqrt(Int(36));
    CHECK(r.root == 6);
    CHECK(r.exact);
    r = integer_sqrt(Int(0));
    CHECK(r.root == 0);
    CHECK(r.exact);
    // 323^2 = 104329 < 104544 < 324^2 = 104976
    r = integer_sqrt(Int(104544));
    CHECK(r.root == 323);
    CHECK(!r.exact);
    CHECK(r.root * r.root < 104544);
    CHECK((r.root + 1) * (r.root + 1) > 104544);
    CHECK_THROWS_AS(integer_sqrt(Int(-1)), std::invalid_argument);
}

TEST_CASE("square_class representatives") {
    // disc of the U_50 fibre conic: 36 - 132 = -96 = 16 * (-6)
    CHECK(square_class(Rat(36 - 132)).value() == -6);
    CHECK(square_class(make_rat(4, 9)).value() == 1);
    CHECK_THROWS_AS(square_class(Rat(0)), std::invalid_argument);
    CHECK(SquareClass::zero().is_zero());

    // 243 * 28519 = 3^5 * 19^2 * 79; trial division shows 28519 = 19^2 * 79,
    // so the squarefree part is 3 * 79 = 237 (and 6930117 / 237 = 171^2).
    Int z = 243 * Int(28519);
    Int small = 28519;
    std::map<Int, int> f;
    for (Int p = 2; p * p <= small; ++p)
        while (small % p == 0) { f[p] += 1; small /= p; }
    if (small > 1) f[small] += 1;
    CHECK(f == std::map<Int, int>{{Int(19), 2}, {Int(79), 1}});
    CHECK(square_class(Rat(z)).value() == 237);
    CHECK(Int(6930117) == 237 * 171 * 171);
}

TEST_CASE("square_class properties") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<long> coef(-1000000, 1000000);
    int done = 0;
    while (done < 1000) {
        long x = coef(rng), y = coef(rng);
        if (x == 0 || y == 0) continue;
        Rat q = make_rat(Int(x), Int(y));
        Rat ratio = q / Rat(square_class(q).value());
        CHECK(is_square_rat(ratio));

        long x2 = coef(rng), y2 = coef(rng);
        if (x2 == 0 || y2 == 0) continue;
        Rat q2 = make_rat(Int(x2), Int(y2));
        Rat lhs(square_class(q * q2).value());
        Rat rhs(square_class(Rat(square_class(q).value()) *
                             Rat(square_class(q2).value()))
                    .value());
        CHECK(lhs == rhs);
        ++done;
    }
}

TEST_CASE("primality and factorization") {
    CHECK(is_prime(Int(2)));
    CHECK(is_prime(Int(1093)));
    CHECK(!is_prime(Int(1)));
    CHECK(!is_prime(Int(561)));  // Carmichael
    CHECK(is_prime(Int("170141183460469231731687303715884105727")));  // 2^127-1

    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        Int n = Int(rng() % 1000000000000UL) + 2;
        Int prod = 1;
        for (const auto& [p, e] : factorize(n)) {
            CHECK(is_prime(p));
            for (int k = 0; k < e; ++k) prod *= p;
        }
        CHECK(prod == n);
    }
    auto d = divisors(Int(12));
    CHECK(d == std::vector<Int>{Int(1), Int(2), Int(3), Int(4), Int(6), Int(12)});
}

TEST_CASE("valuations and rational strings") {
    CHECK(valuation(Int(48), Int(2)) == 4);
    CHECK(valuation(make_rat(3, 8), Int(2)) == -3);
    CHECK(rat_to_string(make_rat(-6, 4)) == "-3/2");
    CHECK(rat_to_string(Rat(7)) == "7");
    CHECK(rat_from_string("-3/2") == make_rat(-3, 2));
}
