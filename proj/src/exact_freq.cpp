#include "duffing/exact_freq.hpp"

#include "duffing/numerics.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace duffing {

BigReal elliptic_K(const BigReal& k_sq)
{
    if (k_sq < 0 || k_sq >= 1)
        throw std::domain_error("elliptic_K needs 0 <= k^2 < 1");
    return pi() / (2 * agm(BigReal(1), sqrt(1 - k_sq)));
}

ExactFrequency omega_exact(const BigReal& g, const BigReal& omega0)
{
    if (g < 0)
        throw std::invalid_argument("coupling g must be non-negative");
    if (omega0 <= 0)
        throw std::invalid_argument("omega0 must be positive");
    ExactFrequency r{g, omega0, 0, 0};
    BigReal stiffness = omega0 * omega0 + g;
    r.modulus_sq = g / (2 * stiffness);
    r.omega = pi() * sqrt(stiffness) / (2 * elliptic_K(r.modulus_sq));
    return r;
}

BigReal strong_coupling_b0() { return pi() / (2 * elliptic_K(BigReal(1) / 2)); }

BigReal scaled_strong_frequency(const BigReal& eps)
{
    // omega / sqrt(g) = pi sqrt(1 + eps) / (2 K(1 / (2 (1 + eps)))) at omega0 = 1.
    return pi() * sqrt(1 + eps) / (2 * elliptic_K(1 / (2 * (1 + eps))));
}

StrongCoefficients strong_coefficients(int M, unsigned digits)
{
    if (M < 0 || M > max_strong_order)
        throw std::invalid_argument("strong-coupling order must lie in [0, 4]");

    StrongCoefficients out;
    {
        WorkingPrecision outer(digits);
        out.b.push_back(strong_coupling_b0());
    }
    if (M == 0)
        return out;

    // Samples eps_i = h / 2^i; the Richardson table is Neville's scheme for
    // the value at eps = 0 of the interpolating polynomial. The remainder
    // r_m(eps) = (f(eps) - sum_{j<m} b_j eps^j) / eps^m has b_m as its limit.
    constexpr int levels = 24;
    WorkingPrecision inner(digits + 40 * static_cast<unsigned>(M) + 40);
    const BigReal h = BigReal(1) / 8;
    std::vector<BigReal> eps(levels + 1);
    std::vector<BigReal> f(levels + 1);
    for (int i = 0; i <= levels; ++i) {
        eps[i] = h / pow(BigReal(2), i);
        f[i] = scaled_strong_frequency(eps[i]);
    }
    std::vector<BigReal> b = {strong_coupling_b0()};
    for (int m = 1; m <= M; ++m) {
        std::vector<BigReal> table(levels + 1);
        for (int i = 0; i <= levels; ++i) {
            BigReal partial = 0;
            for (int j = m - 1; j >= 0; --j)
                partial = partial * eps[i] + b[j];
            table[i] = (f[i] - partial) / pow(eps[i], m);
        }
        for (int j = 1; j <= levels; ++j) {
            BigReal factor = pow(BigReal(2), j) - 1;
            for (int i = levels; i >= j; --i)
                table[i] = table[i] + (table[i] - table[i - 1]) / factor;
        }
        b.push_back(table[levels]);
    }
    WorkingPrecision outer(digits);
    for (int m = 1; m <= M; ++m) {
        BigReal rounded = b[m];
        rounded.precision(digits);
        out.b.push_back(rounded);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dormand-Prince 5(4) with Hairer's dense output.

namespace {

using real = long double;

struct State {
    real x;
    real v;
};

struct DuffingRhs {
    real omega0_sq;
    real g;
    State operator()(const State& s) const { return {s.v, -omega0_sq * s.x - g * s.x * s.x * s.x}; }
    real energy(const State& s) const
    {
        return s.v * s.v / 2 + omega0_sq * s.x * s.x / 2 + g * s.x * s.x * s.x * s.x / 4;
    }
};

State axpy(const State& y, real h, std::initializer_list<std::pair<real, const State*>> terms)
{
    State out = y;
    for (const auto& [c, k] : terms) {
        out.x += h * c * k->x;
        out.v += h * c * k->v;
    }
    return out;
}

struct Step {
    State y1;
    std::array<State, 7> k;
    real error; // scaled, <= 1 means accepted
};

Step dopri_step(const DuffingRhs& f, const State& y0, const State& k1, real h, real tol)
{
    constexpr real a21 = 1.0L / 5;
    constexpr real a31 = 3.0L / 40, a32 = 9.0L / 40;
    constexpr real a41 = 44.0L / 45, a42 = -56.0L / 15, a43 = 32.0L / 9;
    constexpr real a51 = 19372.0L / 6561, a52 = -25360.0L / 2187, a53 = 64448.0L / 6561,
                   a54 = -212.0L / 729;
    constexpr real a61 = 9017.0L / 3168, a62 = -355.0L / 33, a63 = 46732.0L / 5247, a64 = 49.0L / 176,
                   a65 = -5103.0L / 18656;
    constexpr real a71 = 35.0L / 384, a73 = 500.0L / 1113, a74 = 125.0L / 192, a75 = -2187.0L / 6784,
                   a76 = 11.0L / 84;
    constexpr real e1 = 71.0L / 57600, e3 = -71.0L / 16695, e4 = 71.0L / 1920, e5 = -17253.0L / 339200,
                   e6 = 22.0L / 525, e7 = -1.0L / 40;

    Step s;
    s.k[0] = k1;
    s.k[1] = f(axpy(y0, h, {{a21, &s.k[0]}}));
    s.k[2] = f(axpy(y0, h, {{a31, &s.k[0]}, {a32, &s.k[1]}}));
    s.k[3] = f(axpy(y0, h, {{a41, &s.k[0]}, {a42, &s.k[1]}, {a43, &s.k[2]}}));
    s.k[4] = f(axpy(y0, h, {{a51, &s.k[0]}, {a52, &s.k[1]}, {a53, &s.k[2]}, {a54, &s.k[3]}}));
    s.k[5] = f(axpy(y0, h,
                    {{a61, &s.k[0]}, {a62, &s.k[1]}, {a63, &s.k[2]}, {a64, &s.k[3]}, {a65, &s.k[4]}}));
    s.y1 = axpy(y0, h, {{a71, &s.k[0]}, {a73, &s.k[2]}, {a74, &s.k[3]}, {a75, &s.k[4]}, {a76, &s.k[5]}});
    s.k[6] = f(s.y1);

    State err = axpy(State{0, 0}, h,
                     {{e1, &s.k[0]}, {e3, &s.k[2]}, {e4, &s.k[3]}, {e5, &s.k[4]}, {e6, &s.k[5]}, {e7, &s.k[6]}});
    real sx = tol * std::max<real>(1, std::max(std::fabs(y0.x), std::fabs(s.y1.x)));
    real sv = tol * std::max<real>(1, std::max(std::fabs(y0.v), std::fabs(s.y1.v)));
    s.error = std::max(std::fabs(err.x) / sx, std::fabs(err.v) / sv);
    return s;
}

// Continuous extension on [t0, t0 + h], theta in [0, 1].
struct DenseSegment {
    std::array<State, 5> r;

    DenseSegment(const State& y0, const Step& s, real h)
    {
        constexpr real d1 = -12715105075.0L / 11282082432, d3 = 87487479700.0L / 32700410799,
                       d4 = -10690763975.0L / 1880347072, d5 = 701980252875.0L / 199316789632,
                       d6 = -1453857185.0L / 822651844, d7 = 69997945.0L / 29380423;
        r[0] = y0;
        r[1] = {s.y1.x - y0.x, s.y1.v - y0.v};
        r[2] = {h * s.k[0].x - r[1].x, h * s.k[0].v - r[1].v};
        r[3] = {r[1].x - h * s.k[6].x - r[2].x, r[1].v - h * s.k[6].v - r[2].v};
        State d = axpy(State{0, 0}, h,
                       {{d1, &s.k[0]}, {d3, &s.k[2]}, {d4, &s.k[3]}, {d5, &s.k[4]}, {d6, &s.k[5]}, {d7, &s.k[6]}});
        r[4] = d;
    }

    State at(real theta) const
    {
        real om = 1 - theta;
        auto eval = [&](real State::*m) {
            return r[0].*m + theta * (r[1].*m + om * (r[2].*m + theta * (r[3].*m + om * r[4].*m)));
        };
        return {eval(&State::x), eval(&State::v)};
    }
};

} // namespace

OracleResult ode_period_oracle(const BigReal& g, const BigReal& omega0, const BigReal& tol)
{
    if (g < 0)
        throw std::invalid_argument("coupling g must be non-negative");
    if (omega0 <= 0)
        throw std::invalid_argument("omega0 must be positive");
    if (tol <= 0)
        throw std::invalid_argument("tolerance must be positive");

    const real w0 = omega0.convert_to<real>();
    const DuffingRhs f{w0 * w0, g.convert_to<real>()};
    const real tolerance = tol.convert_to<real>();
    const State start{1, 0};
    const real e0 = f.energy(start);

    OracleResult result;
    real t = 0;
    State y = start;
    State k1 = f(y);
    real h = std::pow(tolerance, 0.2L) / std::sqrt(f.omega0_sq + f.g);
    bool left_start = false;

    for (long guard = 0; guard < 50'000'000; ++guard) {
        Step s = dopri_step(f, y, k1, h, tolerance);
        if (!(s.error <= 1)) {
            ++result.rejected;
            real factor = std::max<real>(0.2L, 0.9L * std::pow(s.error, -0.2L));
            h *= std::isfinite(factor) ? factor : 0.2L;
            if (h <= std::numeric_limits<real>::epsilon() * std::max<real>(1, t))
                throw std::runtime_error("ODE step size underflow");
            continue;
        }
        ++result.steps;
        real drift = std::fabs(f.energy(s.y1) - e0);
        if (drift > result.max_energy_error)
            result.max_energy_error = drift;

        // Full period: x' changes sign from + to - while x > 0.
        if (left_start && y.v > 0 && s.y1.v <= 0 && s.y1.x > 0) {
            DenseSegment dense(y, s, h);
            real lo = 0, hi = 1;
            for (int it = 0; it < 200 && hi - lo > std::numeric_limits<real>::epsilon(); ++it) {
                real mid = (lo + hi) / 2;
                if (dense.at(mid).v > 0)
                    lo = mid;
                else
                    hi = mid;
            }
            // Polish with genuine RK steps from the start of the segment.
            real tau0 = lo * h, tau1 = hi * h;
            auto velocity_after = [&](real tau) {
                if (tau == 0)
                    return y.v;
                return dopri_step(f, y, k1, tau, tolerance).y1.v;
            };
            real v0 = velocity_after(tau0), v1 = velocity_after(tau1);
            real tau = (lo + hi) / 2 * h;
            for (int it = 0; it < 8 && v1 != v0; ++it) {
                tau = tau1 - v1 * (tau1 - tau0) / (v1 - v0);
                tau0 = tau1;
                v0 = v1;
                tau1 = tau;
                v1 = velocity_after(tau);
                if (std::fabs(tau1 - tau0) <= 4 * std::numeric_limits<real>::epsilon() * (t + h))
                    break;
            }
            result.period = t + tau;
            {
                WorkingPrecision scope(std::max(working_digits(), 20u));
                result.omega = 2 * pi() / BigReal(result.period);
            }
            return result;
        }
        if (s.y1.v < 0)
            left_start = true;

        t += h;
        y = s.y1;
        k1 = s.k[6];
        real factor = std::min<real>(5, 0.9L * std::pow(std::max(s.error, 1e-10L), -0.2L));
        h *= factor;
    }
    throw std::runtime_error("ODE integration did not complete a period");
}

// ---------------------------------------------------------------------------

EnvelopeTable envelope_data(const BigReal& gmin, const BigReal& gmax, int samples,
                            const std::vector<int>& weak_orders, const std::vector<int>& strong_orders,
                            const WeakSeries& series, const BigReal& omega0)
{
    if (!(gmin > 0) || !(gmax >= gmin))
        throw std::invalid_argument("envelope grid needs 0 < gmin <= gmax");
    if (samples < 1 || (samples == 1 && gmax != gmin))
        throw std::invalid_argument("envelope grid needs at least two samples for a range");
    int max_strong = -1;
    for (int m : strong_orders) {
        if (m < 0 || m > max_strong_order)
            throw std::invalid_argument("strong-coupling orders above 4 are not available: only b_0 is "
                                        "known in closed form and b_1..b_4 are extrapolated numerically");
        max_strong = std::max(max_strong, m);
    }
    for (int n : weak_orders)
        if (n < 0 || n > series.order())
            throw std::invalid_argument("weak order " + std::to_string(n) + " exceeds the series order");

    EnvelopeTable table;
    table.header.push_back("g");
    table.header.push_back("omega_exact");
    for (int n : weak_orders)
        table.header.push_back("weak_" + std::to_string(n));
    for (int m : strong_orders)
        table.header.push_back("strong_" + std::to_string(m));

    StrongCoefficients strong;
    if (max_strong >= 0)
        strong = strong_coefficients(max_strong, working_digits());

    const BigReal ratio = samples > 1 ? BigReal(gmax / gmin) : BigReal(1);
    for (int i = 0; i < samples; ++i) {
        BigReal g = samples > 1 ? BigReal(gmin * pow(ratio, BigReal(i) / (samples - 1))) : gmin;
        if (i == samples - 1)
            g = gmax;
        std::vector<BigReal> row;
        row.push_back(g);
        row.push_back(omega_exact(g, omega0).omega);
        for (int n : weak_orders)
            row.push_back(frequency_partial_sum(series, n, g, omega0));
        BigReal eps = omega0 * omega0 / g;
        for (int m : strong_orders) {
            BigReal sum = 0;
            for (int j = m; j >= 0; --j)
                sum = sum * eps + strong.b[j];
            row.push_back(sqrt(g) * sum);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::string to_csv(const EnvelopeTable& table, unsigned digits)
{
    std::string out;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (i)
            out += ',';
        out += table.header[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                out += ',';
            out += format(row[i], digits);
        }
        out += '\n';
    }
    return out;
}

} // namespace duffing
