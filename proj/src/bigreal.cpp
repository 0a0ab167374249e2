#include "duffing/bigreal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace duffing {

WorkingPrecision::WorkingPrecision(unsigned digits)
    : saved_(BigReal::default_precision())
    , active_(std::max(digits, saved_))
{
    BigReal::default_precision(active_);
}

WorkingPrecision::~WorkingPrecision() { BigReal::default_precision(saved_); }

unsigned working_digits() { return BigReal::default_precision(); }

unsigned precision_of(const BigReal& x) { return x.precision(); }

BigReal to_bigreal(const Rational& q)
{
    BigReal x;
    mpfr_set_q(x.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return x;
}

Rational to_rational(const BigReal& x)
{
    Rational q;
    mpfr_get_q(q.get_mpq_t(), x.backend().data());
    return q;
}

BigReal parse_bigreal(const std::string& text) { return to_bigreal(parse_rational(text)); }

BigReal pi()
{
    BigReal x;
    mpfr_const_pi(x.backend().data(), MPFR_RNDN);
    return x;
}

BigReal working_epsilon()
{
    BigReal x = 1;
    mpfr_mul_2si(x.backend().data(), x.backend().data(),
                 -static_cast<long>(mpfr_get_prec(x.backend().data())), MPFR_RNDN);
    return x;
}

std::string format(const BigReal& x, unsigned digits)
{
    if (x == 0)
        return "0";
    BigReal mag = abs(x);
    std::ios_base::fmtflags flags = std::ios_base::fmtflags(0);
    if (mag < BigReal("1e-4") || mag >= BigReal("1e15"))
        flags = std::ios_base::scientific;
    if (flags == std::ios_base::scientific)
        return x.str(static_cast<std::streamsize>(digits - 1), flags);
    // Fixed notation: number of fraction digits so that the total number of
    // significant digits equals `digits`.
    long exp10 = static_cast<long>(std::floor(static_cast<double>(log10(mag))));
    long fraction = static_cast<long>(digits) - 1 - exp10;
    if (fraction < 0)
        fraction = 0;
    return x.str(static_cast<std::streamsize>(fraction), std::ios_base::fixed);
}

namespace {

template <class Op>
BigReal at_max_precision(const BigReal& a, const BigReal& b, Op op)
{
    WorkingPrecision scope(std::max(a.precision(), b.precision()));
    BigReal r;
    op(r.backend().data(), a.backend().data(), b.backend().data(), MPFR_RNDN);
    return r;
}

} // namespace

BigReal add(const BigReal& a, const BigReal& b) { return at_max_precision(a, b, mpfr_add); }

BigReal mul(const BigReal& a, const BigReal& b) { return at_max_precision(a, b, mpfr_mul); }

} // namespace duffing
