#pragma once

#include "duffing/bigreal.hpp"
#include "duffing/lindstedt.hpp"

#include <string>
#include <vector>

namespace duffing {

/// Complete elliptic integral of the first kind K(m), m = k^2, by the AGM:
/// K = pi / (2 agm(1, sqrt(1 - m))). Throws std::domain_error unless 0 <= m < 1.
BigReal elliptic_K(const BigReal& k_sq);

struct ExactFrequency {
    BigReal g;
    BigReal omega0;
    BigReal omega;
    BigReal modulus_sq; // g / (2 (omega0^2 + g)), in [0, 1/2)
};

/// omega = pi sqrt(omega0^2 + g) / (2 K(g / (2 (omega0^2 + g)))).
/// Throws std::invalid_argument for g < 0 or omega0 <= 0.
ExactFrequency omega_exact(const BigReal& g, const BigReal& omega0);

/// pi / (2 K(1/2)), the limit of omega / sqrt(g) as g grows.
BigReal strong_coupling_b0();

inline constexpr int max_strong_order = 4;

struct StrongCoefficients {
    std::vector<BigReal> b; // b_0 .. b_M
};

/// Coefficients of omega = sqrt(g) sum_m b_m (omega0^2/g)^m. b_0 is the closed
/// form; higher ones come from Richardson extrapolation of omega / sqrt(g) in
/// eps = omega0^2 / g. Throws std::invalid_argument for M outside [0, 4].
StrongCoefficients strong_coefficients(int M, unsigned digits);

/// omega(g = omega0^2 / eps) / sqrt(g) evaluated directly in eps (> -1/2).
BigReal scaled_strong_frequency(const BigReal& eps);

struct OracleResult {
    BigReal omega;
    long double period = 0;
    long double max_energy_error = 0; // over accepted steps, absolute
    long steps = 0;
    long rejected = 0;
};

/// Independent frequency estimate: integrates x'' + omega0^2 x + g x^3 = 0
/// from (1, 0) with an embedded Dormand-Prince 5(4) pair, locates the first
/// return of x' to zero from above with x > 0 by dense-output root finding,
/// and returns 2 pi / period. Throws std::runtime_error if the step size
/// underflows.
OracleResult ode_period_oracle(const BigReal& g, const BigReal& omega0, const BigReal& tol);

struct EnvelopeTable {
    std::vector<std::string> header;
    std::vector<std::vector<BigReal>> rows;
};

/// Exact frequency, weak partial sums and strong partial sums on a log grid
/// gmin .. gmax (inclusive). Throws std::invalid_argument for strong orders
/// above 4 or a malformed grid.
EnvelopeTable envelope_data(const BigReal& gmin, const BigReal& gmax, int samples,
                            const std::vector<int>& weak_orders, const std::vector<int>& strong_orders,
                            const WeakSeries& series, const BigReal& omega0 = 1);

/// Header line plus one line per row; LF endings, '.' decimal point.
std::string to_csv(const EnvelopeTable& table, unsigned digits);

} // namespace duffing
