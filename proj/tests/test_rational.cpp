#include "duffing/rational.hpp"

#include <doctest.h>

#include <stdexcept>

using duffing::Rational;

TEST_CASE("parse_rational accepts fractions, integers and decimals exactly")
{
    CHECK(duffing::parse_rational("3/8") == Rational(3, 8));
    CHECK(duffing::parse_rational("-21/256") == Rational(-21, 256));
    CHECK(duffing::parse_rational("6/8") == Rational(3, 4));
    CHECK(duffing::parse_rational("42") == Rational(42));
    CHECK(duffing::parse_rational("0.1") == Rational(1, 10));
    CHECK(duffing::parse_rational("-1.25e-3") == Rational(-1, 800));
    CHECK(duffing::parse_rational("1e3") == Rational(1000));
    CHECK(duffing::parse_rational(" .5 ") == Rational(1, 2));
}

TEST_CASE("parse_rational rejects malformed text")
{
    CHECK_THROWS_AS(duffing::parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(duffing::parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(duffing::parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(duffing::parse_rational("1.2.3"), std::invalid_argument);
    CHECK_THROWS_AS(duffing::parse_rational("3/-4"), std::invalid_argument);
}

TEST_CASE("to_string is canonical num/den")
{
    CHECK(duffing::to_string(Rational(6, -8)) == "-3/4");
    CHECK(duffing::to_string(Rational(5)) == "5");
}

TEST_CASE("binomial uses the falling factorial")
{
    CHECK(duffing::binomial(Rational(1, 2), 0) == 1);
    CHECK(duffing::binomial(Rational(1, 2), 1) == Rational(1, 2));
    CHECK(duffing::binomial(Rational(1, 2), 2) == Rational(-1, 8));
    CHECK(duffing::binomial(Rational(-1, 2), 3) == Rational(-5, 16));
    CHECK(duffing::binomial(Rational(5), 2) == 10);
    CHECK(duffing::binomial(Rational(2), 3) == 0);
}

TEST_CASE("pow by squaring")
{
    CHECK(duffing::pow(Rational(2, 3), 5) == Rational(32, 243));
    CHECK(duffing::pow(Rational(-7), 0) == 1);
}
