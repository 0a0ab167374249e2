#pragma once

#include "duffing/rational.hpp"

#include <map>
#include <string>

namespace duffing {

/// Finite cosine series sum_k c_k cos(k xi) with exact rational coefficients.
///
/// Only non-zero coefficients are stored, so two polynomials compare equal
/// exactly when they represent the same function. Harmonic 0 is the constant
/// term. Sine terms never arise for even solutions and are not representable.
class TrigPoly {
public:
    using Terms = std::map<unsigned, Rational>;

    TrigPoly() = default;

    static TrigPoly cosine(unsigned k, const Rational& c = 1);
    static TrigPoly constant(const Rational& c) { return cosine(0, c); }

    /// Coefficient of cos(k xi), or zero. Negative k throws std::invalid_argument.
    Rational coefficient(long k) const;

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    unsigned max_harmonic() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    /// Value at xi = 0, i.e. the sum of all coefficients.
    Rational value_at_zero() const;

    TrigPoly& operator+=(const TrigPoly& other);
    TrigPoly& operator-=(const TrigPoly& other);
    TrigPoly& operator*=(const Rational& scalar);

    /// Adds scalar * other without forming the scaled temporary.
    TrigPoly& add_scaled(const Rational& scalar, const TrigPoly& other);

    /// this += a * b, accumulating the product directly.
    TrigPoly& add_product(const TrigPoly& a, const TrigPoly& b);

    friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
    friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
    friend TrigPoly operator*(TrigPoly a, const Rational& s) { return a *= s; }
    friend TrigPoly operator*(const Rational& s, TrigPoly a) { return a *= s; }
    friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);
    friend TrigPoly operator-(TrigPoly a) { return a *= Rational(-1); }

    friend bool operator==(const TrigPoly& a, const TrigPoly& b) { return a.terms_ == b.terms_; }

    /// e.g. "3/4 cos(1x) + 1/4 cos(3x)"; "0" for the zero polynomial.
    std::string to_string() const;

private:
    void accumulate(unsigned k, const Rational& c);

    Terms terms_;
};

inline TrigPoly add(const TrigPoly& a, const TrigPoly& b) { return a + b; }
inline TrigPoly mul(const TrigPoly& a, const TrigPoly& b) { return a * b; }

/// d^2/dxi^2: harmonic k is scaled by -k^2.
TrigPoly second_derivative(const TrigPoly& a);

} // namespace duffing
