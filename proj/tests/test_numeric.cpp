#include "cattab/numeric.hpp"

#include <doctest.h>

using namespace cattab;

TEST_CASE("binomial coefficients") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(25, 8) == 1081575);
    CHECK_THROWS_AS(binomial(3, 4), std::invalid_argument);

    // Pascal identity on a grid.
    for (unsigned n = 1; n <= 20; ++n)
        for (unsigned r = 1; r < n; ++r)
            CHECK(binomial(n, r) == binomial(n - 1, r - 1) + binomial(n - 1, r));
}

TEST_CASE("rational text round-trips") {
    CHECK(to_text(Rational(1, 2)) == "1/2");
    CHECK(to_text(Rational(-4, 8)) == "-1/2");
    CHECK(to_text(Rational(6, 3)) == "2");
    CHECK(to_text(Rational(0)) == "0");
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("42") == Rational(42));
    CHECK(parse_rational(to_text(Rational(-355, 113))) == Rational(-355, 113));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("-"), std::invalid_argument);
}

TEST_CASE("splitmix64 sequence is frozen") {
    // Seeded sampling must be reproducible across platforms; the generator
    // itself is pinned by these values.
    SplitMix64 rng(1);
    CHECK(rng.next() == 0x910a2dec89025cc1ull);
    CHECK(rng.next() == 0xbeeb8da1658eec67ull);
    CHECK(rng.next() == 0xf893a2eefb32555eull);
}

TEST_CASE("sampled rationals stay in range") {
    SplitMix64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const Rational q = sample_rational(rng, true);
        CHECK(q != 0);
        CHECK(abs(numerator(q)) <= 999);
        CHECK(denominator(q) <= 999);
    }
}
