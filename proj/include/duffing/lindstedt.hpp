#pragma once

// Poincare-Lindstedt recursion for the Duffing oscillator
//
//     x'' + w0^2 x + g x^3 = 0,   x(0) = 1, x'(0) = 0.
//
// With xi = omega t and q(xi) = x(xi / omega) the frequency and solution are
// expanded in the dimensionless coupling g / w0^2,
//
//     omega = sum_n w_n w0 (g/w0^2)^n,   q(xi) = sum_n q_n(xi) (g/w0^2)^n,
//
// and order n solves q_n'' + q_n = f_n with f_n free of cos(xi). All work is
// done at w0 = 1 in exact rationals.

#include "duffing/bigreal.hpp"
#include "duffing/rational.hpp"
#include "duffing/trig_poly.hpp"

#include <string>
#include <vector>

namespace duffing {

struct WeakSeries {
    std::vector<Rational> omega_coeffs; // w_0 .. w_N
    std::vector<TrigPoly> solution_coeffs; // q_0 .. q_N

    int order() const { return static_cast<int>(omega_coeffs.size()) - 1; }
};

/// f_n split around the single unknown w_n: f_n = known + w_n * w_multiplier.
struct Inhomogeneity {
    TrigPoly known;
    TrigPoly w_multiplier;

    TrigPoly evaluate(const Rational& w) const;
};

/// Recursion state: the series through order n-1 plus the caches the next
/// order needs (second derivatives and the partial squares of q).
class LindstedtRecursion {
public:
    LindstedtRecursion();

    /// Order that the next call to solve_order() produces.
    int next_order() const { return static_cast<int>(series_.omega_coeffs.size()); }

    /// f_n for n = next_order().
    Inhomogeneity inhomogeneity() const;

    struct OrderSolution {
        Rational w;
        TrigPoly q;
    };

    /// Fixes w_n by the secular condition, solves for q_n and appends both.
    /// Throws std::logic_error if an internal identity fails.
    OrderSolution solve_order();

    const WeakSeries& series() const { return series_; }
    const std::vector<TrigPoly>& second_derivatives() const { return q_second_; }

private:
    WeakSeries series_;
    std::vector<TrigPoly> q_second_; // q_n''
    std::vector<TrigPoly> squares_; // S_j = sum_{m+l=j} q_m q_l
};

/// Series through order N (N >= 0). Throws std::invalid_argument for N < 0.
WeakSeries weak_series(int N);

/// sum_{n=0}^{N} w_n w0^(1-2n) g^n at the working precision.
BigReal frequency_partial_sum(const WeakSeries& series, int N, const BigReal& g,
                              const BigReal& omega0);

/// JSON array of {"n": int, "w": "num/den", "q": [{"k": int, "c": "num/den"}]}.
std::string series_to_json(const WeakSeries& series, bool include_solution = true);
WeakSeries series_from_json(const std::string& text);

} // namespace duffing
