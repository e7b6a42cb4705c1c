#include "rbcoalg/rational.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace rbcoalg;

TEST_CASE("parse and format round trip canonically") {
    CHECK(format_rational(parse_rational("2/4")) == "1/2");
    CHECK(format_rational(parse_rational("-4/6")) == "-2/3");
    CHECK(format_rational(parse_rational("7")) == "7");
    CHECK(format_rational(parse_rational("-7")) == "-7");
    CHECK(format_rational(parse_rational("0/5")) == "0");
    CHECK(format_rational(parse_rational("123456789123456789/2")) == "123456789123456789/2");
}

TEST_CASE("malformed scalars are rejected") {
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(" 1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("+1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(make_rational(BigInt(1), BigInt(0)), std::invalid_argument);
}

TEST_CASE("make_rational normalizes sign and gcd") {
    CHECK(make_rational(BigInt(3), BigInt(-9)) == Rational(-1, 3));
    CHECK(format_rational(make_rational(BigInt(-3), BigInt(-9))) == "1/3");
}

TEST_CASE("field laws hold exactly on randomized rationals") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 500; ++trial) {
        const Rational a = testing::random_rational(rng, 99, 99);
        const Rational b = testing::random_rational(rng, 99, 99);
        const Rational c = testing::random_rational(rng, 99, 99);
        Rational lhs = (a + b) + c;
        Rational rhs = a + (b + c);
        CHECK(lhs == rhs);
        lhs = (a * b) * c;
        rhs = a * (b * c);
        CHECK(lhs == rhs);
        lhs = a * (b + c);
        rhs = a * b + a * c;
        CHECK(lhs == rhs);
        if (a != 0) {
            const Rational inv = Rational(1) / a;
            const Rational one = a * inv;
            CHECK(one == 1);
        }
    }
}

TEST_CASE("equality is representation independent") {
    CHECK(parse_rational("10/15") == parse_rational("2/3"));
    CHECK(parse_rational("0/7") == parse_rational("0/13"));
    CHECK(make_rational(BigInt(4), BigInt(-6)) == parse_rational("-2/3"));
}

TEST_CASE("rational_pow") {
    CHECK(rational_pow(Rational(2), 12) == Rational(4096));
    CHECK(rational_pow(Rational(2), 0) == Rational(1));
    CHECK(rational_pow(Rational(1, 2), 3) == Rational(1, 8));
    CHECK(rational_pow(Rational(2), -3) == Rational(1, 8));
    CHECK(rational_pow(Rational(0), 5) == Rational(0));
    CHECK_THROWS_AS(rational_pow(Rational(0), -1), std::invalid_argument);
}
