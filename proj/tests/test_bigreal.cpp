#include "duffing/bigreal.hpp"

#include <doctest.h>

using namespace duffing;

TEST_CASE("WorkingPrecision scopes nest and restore")
{
    const unsigned before = working_digits();
    {
        WorkingPrecision outer(60);
        CHECK(working_digits() == std::max(60u, before));
        {
            WorkingPrecision inner(40);
            CHECK(working_digits() == std::max(60u, before));
        }
        BigReal x = 1;
        CHECK(precision_of(x) >= 60);
    }
    CHECK(working_digits() == before);
}

TEST_CASE("mixed-precision arithmetic carries the larger precision")
{
    BigReal coarse;
    BigReal fine;
    {
        WorkingPrecision p(30);
        coarse = BigReal(1) / 3;
    }
    {
        WorkingPrecision p(90);
        fine = BigReal(1) / 7;
    }
    CHECK(precision_of(add(coarse, fine)) == precision_of(fine));
    CHECK(precision_of(mul(fine, coarse)) == precision_of(fine));
}

TEST_CASE("rational conversions")
{
    WorkingPrecision p(50);
    BigReal third = to_bigreal(Rational(1, 3));
    CHECK(third == BigReal(1) / 3);
    // Binary values are dyadic, so the round trip is exact.
    CHECK(to_bigreal(to_rational(third)) == third);
    CHECK(to_rational(BigReal("0.375")) == Rational(3, 8));
    CHECK(parse_bigreal("1/4") == BigReal("0.25"));
}

TEST_CASE("format prints the requested significant digits")
{
    WorkingPrecision p(40);
    CHECK(format(BigReal(1) / 8, 15) == "0.125000000000000");
    CHECK(format(BigReal(1375) / 1000, 5) == "1.3750");
    CHECK(format(BigReal("5.4e-13"), 3) == "5.40e-13");
    CHECK(format(BigReal(0), 20) == "0");
    CHECK(format(BigReal(-2), 3) == "-2.00");
}
