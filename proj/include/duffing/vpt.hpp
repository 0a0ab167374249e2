#pragma once

// Variational resummation of the weak-coupling frequency series.
//
// Substituting w0 = Omega sqrt(1 + g r), r = (w0^2/Omega^2 - 1)/g, into the
// order-N truncation and re-expanding (1 + g r)^(1/2 - n) to order N - n gives
//
//     omega^(N)(g, Omega) = sum_n sum_k c[n][k] Omega^(1-2n) (w0^2/Omega^2 - 1)^k g^n,
//     c[n][k] = w_n binom(1/2 - n, k).
//
// Omega is then fixed where omega^(N) is least sensitive to it: the lowest
// Omega-derivative that has a real positive zero. With u = Omega^-2 every
// such condition is an ordinary polynomial in u with rational coefficients.

#include "duffing/bigreal.hpp"
#include "duffing/lindstedt.hpp"
#include "duffing/numerics.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace duffing {

class OptimizationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct VariationalPolynomial {
    int order = 0;
    std::vector<std::vector<Rational>> c; // c[n][k], 0 <= k <= order - n

    BigReal evaluate(const BigReal& g, const BigReal& omega0, const BigReal& Omega) const;
    Rational evaluate(const Rational& g, const Rational& omega0, const Rational& Omega) const;

    /// P(u) with omega^(N)(g, Omega) = Omega P(Omega^-2).
    PolynomialR reduced(const Rational& g, const Rational& omega0) const;
};

VariationalPolynomial reexpand(const WeakSeries& series, int N);

/// Level-L Omega-derivative of Omega^s P(u), u = Omega^-2, written as
/// Omega^(s-L) Q_L(u); returns Q_L. Positive zeros of Q_L in u are the
/// stationary points of level L.
PolynomialR stationarity_condition(const PolynomialR& P, int level, const Rational& power = 1);

struct VariationalRecord {
    int order = 0;
    BigReal omega_opt; // Omega^(N)(g), or Omega_0^(N) for the b_0 problem
    BigReal value; // omega^(N)(g), or b_0^(N)
    int derivative_level = 0; // 1 extremum, 2 saddle, ...
    std::optional<BigReal> rel_error;
    bool failed = false;
    bool flagged = false;
    std::string note;
};

/// Minimal-sensitivity optimum of omega^(N)(g, Omega). Among several stationary
/// points the one closest to `prev` wins; without `prev` the first-order
/// optimum w0 sqrt(1 + 3g/(4 w0^2)) is the reference. rel_error is against
/// the exact frequency. Throws OptimizationError if no level up to N has a
/// real positive zero.
VariationalRecord optimize_omega(const VariationalPolynomial& poly, const BigReal& g, const BigReal& omega0,
                                 const std::optional<BigReal>& prev = std::nullopt);

/// Runs orders 1..N with continuation and returns the order-N record.
VariationalRecord variational_frequency(const WeakSeries& series, int N, const BigReal& g,
                                        const BigReal& omega0);

/// d[n] = (-1)^(N-n) binom(-1/2 - n, N - n) w_n, so that
/// b_0^(N)(Omega_0) = sum_n d[n] Omega_0^(1-2n).
std::vector<Rational> b0_polynomial(const WeakSeries& series, int N);

/// Optimises b_0^(N)(Omega_0) at `digits` decimal digits. The record is
/// flagged when the level found differs from the usual pattern (extremum for
/// odd N, saddle for even N). rel_error is against pi / (2 K(1/2)).
VariationalRecord optimize_b0(const WeakSeries& series, int N, const std::optional<BigReal>& prev,
                              unsigned digits);

/// Decimal digits used for order-N strong-coupling work: 30 + 2N.
unsigned precision_for_order(int N);

struct ConvergenceFit {
    BigReal alpha;
    BigReal beta;
    int first_order = 0;
    int last_order = 0;
    BigReal residual;
};

struct ConvergenceStudy {
    std::vector<VariationalRecord> records; // orders 1..maxN
    std::optional<ConvergenceFit> fit; // ln(rel_error) = alpha + beta N
    unsigned digits = 0;
};

/// b_0^(N) for N = 1..maxN with continuation in Omega_0, relative errors
/// against the closed-form b_0, and a least-squares line in ln(rel_error)
/// over orders maxN - fit_last .. maxN. Failed orders are recorded, not fatal.
ConvergenceStudy convergence_study(const WeakSeries& series, int maxN, int fit_last = 10,
                                   unsigned min_digits = 0);

/// CSV: N,omega0_opt,b0_N,rel_error,ln_rel_error,derivative_level
std::string study_to_csv(const ConvergenceStudy& study, unsigned digits);

/// {"alpha":..,"beta":..,"range":[lo,hi],"residual":..,"digits":..}; "null"
/// when the study has no fit.
std::string fit_to_json(const ConvergenceStudy& study);

} // namespace duffing
