#pragma once

// Configurable-precision reals on top of MPFR.
//
// New BigReal values take the process-wide default precision, so every
// computation runs inside a WorkingPrecision scope that fixes it. Scopes nest;
// an inner scope never lowers the precision of the enclosing one.

#include "duffing/rational.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace duffing {

using BigReal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                              boost::multiprecision::et_off>;

class WorkingPrecision {
public:
    explicit WorkingPrecision(unsigned digits);
    ~WorkingPrecision();

    WorkingPrecision(const WorkingPrecision&) = delete;
    WorkingPrecision& operator=(const WorkingPrecision&) = delete;

    unsigned digits() const { return active_; }

private:
    unsigned saved_;
    unsigned active_;
};

/// Current default precision in decimal digits.
unsigned working_digits();

/// Precision of an existing value in decimal digits.
unsigned precision_of(const BigReal& x);

/// Correctly rounded conversion at the working precision.
BigReal to_bigreal(const Rational& q);

/// Exact conversion: every binary floating value is a dyadic rational.
Rational to_rational(const BigReal& x);

/// Correctly rounded parse of a decimal or "num/den" string.
BigReal parse_bigreal(const std::string& text);

BigReal pi();

/// 2^(-bits) where bits is the working precision in bits.
BigReal working_epsilon();

/// Decimal text with `digits` significant digits; fixed notation for
/// moderate magnitudes, scientific otherwise. Uses '.' and no grouping.
std::string format(const BigReal& x, unsigned digits);

/// a + b and friends at max(precision(a), precision(b)).
BigReal add(const BigReal& a, const BigReal& b);
BigReal mul(const BigReal& a, const BigReal& b);

} // namespace duffing
