#pragma once

#include "duffing/bigreal.hpp"
#include "duffing/rational.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace duffing {

/// Arithmetic-geometric mean of two positive reals at the working precision.
/// Throws std::domain_error unless a > 0 and b > 0.
BigReal agm(const BigReal& a, const BigReal& b);

/// Polynomial with rational coefficients in ascending degree order. The
/// leading stored coefficient is never zero; the zero polynomial is empty.
class PolynomialR {
public:
    PolynomialR() = default;
    explicit PolynomialR(std::vector<Rational> coeffs);

    static PolynomialR monomial(unsigned degree, const Rational& c = 1);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coefficient(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

    Rational operator()(const Rational& x) const;
    BigReal operator()(const BigReal& x) const;

    PolynomialR derivative() const;

    PolynomialR& operator+=(const PolynomialR& other);
    PolynomialR& operator*=(const Rational& s);
    friend PolynomialR operator+(PolynomialR a, const PolynomialR& b) { return a += b; }
    friend PolynomialR operator-(PolynomialR a, const PolynomialR& b);
    friend PolynomialR operator*(PolynomialR a, const Rational& s) { return a *= s; }
    friend PolynomialR operator*(const PolynomialR& a, const PolynomialR& b);
    friend bool operator==(const PolynomialR&, const PolynomialR&) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

struct RealRoot {
    BigReal value;
    /// The root has even multiplicity (no sign change); reported, not hidden.
    bool even_multiplicity = false;
    /// The isolation hit its depth limit without separating a cluster.
    bool unresolved_cluster = false;
};

/// All distinct real roots of p in (lo, hi], ascending, refined to `digits`
/// decimal digits. Root existence and isolation are decided with exact
/// rational signs (Descartes' rule on dyadic subintervals); refinement is
/// exact bisection. Throws std::invalid_argument if p is zero or lo >= hi.
std::vector<RealRoot> real_roots(const PolynomialR& p, const Rational& lo, const Rational& hi,
                                 unsigned digits);

/// Power of two bounding the absolute value of every root (Cauchy bound).
Rational root_bound(const PolynomialR& p);

/// Number of sign changes in a coefficient sequence, zeros skipped.
int sign_variations(const std::vector<Rational>& coeffs);

/// Double-exponential (tanh-sinh) quadrature of a function finite on [a, b],
/// halving the step until successive estimates differ by less than tol.
/// Throws std::runtime_error if the level budget is exhausted.
BigReal adaptive_quadrature(const std::function<BigReal(const BigReal&)>& f, const BigReal& a,
                            const BigReal& b, const BigReal& tol);

struct LineFit {
    BigReal alpha; // intercept
    BigReal beta; // slope
    BigReal residual; // root-mean-square deviation
};

/// Ordinary least-squares line y = alpha + beta x.
/// Throws std::invalid_argument for fewer than two distinct abscissae.
LineFit fit_line(const std::vector<std::pair<BigReal, BigReal>>& points);

} // namespace duffing
