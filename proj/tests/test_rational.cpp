#include <catch2/catch_amalgamated.hpp>

#include "octomod/rational.hpp"
#include "octomod/sampling.hpp"

using octomod::Rational;

TEST_CASE("construction reduces and normalizes signs") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, 4) == Rational(-3, 2));
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(3, 2).denominator() == 2);
    CHECK(Rational(6, -4).denominator() == 2);  // denominator stays positive
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse and format round-trip") {
    CHECK(Rational::parse("3/4").str() == "3/4");
    CHECK(Rational::parse("-3/6").str() == "-1/2");
    CHECK(Rational::parse("+7").str() == "7");
    CHECK(Rational::parse("0").str() == "0");
    CHECK(Rational::parse("12/4").str() == "3");
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("a"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("2/0"), std::domain_error);

    octomod::SampleRng rng(7);
    for (int i = 0; i < 200; ++i) {
        const Rational r(static_cast<long>(rng.uniform(-5000, 5000)),
                         static_cast<long>(rng.uniform(1, 999)));
        CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("field arithmetic is exact") {
    const Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);

    // no drift across a long alternating sum
    Rational acc;
    for (long k = 1; k <= 200; ++k) acc += Rational(k % 2 ? 1 : -1, k);
    Rational acc2;
    for (long k = 200; k >= 1; --k) acc2 += Rational(k % 2 ? 1 : -1, k);
    CHECK(acc == acc2);
}

TEST_CASE("comparisons and helpers") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(-5, 3).abs() == Rational(5, 3));
    CHECK(Rational(-2, 7).signum() == -1);
    CHECK(Rational(0).is_zero());
    CHECK(Rational(4, 2).is_integer());
    CHECK_FALSE(Rational(1, 2).is_integer());
    CHECK(Rational(1, 2).approx() == 0.5);
}

TEST_CASE("no fixed-width overflow in long products") {
    // (2^40 / 3)^4: far past 64-bit in numerator and denominator.
    Rational big(1);
    const Rational x(1099511627776L, 3);
    for (int i = 0; i < 4; ++i) big *= x;
    CHECK(big.denominator() == 81);
    CHECK(big * Rational(81) == big * Rational(81, 1));
    CHECK((big / x / x / x / x) == Rational(1));
}
