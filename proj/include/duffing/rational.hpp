#pragma once

// Exact rational arithmetic. Rationals are GMP mpq values kept in lowest
// terms with a positive denominator.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace duffing {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical "num/den" text; integers print without a denominator.
std::string to_string(const Rational& q);

/// Parses "num/den", an integer, or a plain decimal such as "-1.25e-3"
/// into an exact rational. Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Generalised binomial coefficient alpha (alpha-1) ... (alpha-k+1) / k!.
Rational binomial(const Rational& alpha, unsigned k);

/// p^e for a non-negative integer exponent.
Rational pow(const Rational& base, unsigned exponent);

inline int sign(const Rational& q) { return sgn(q); }

} // namespace duffing
