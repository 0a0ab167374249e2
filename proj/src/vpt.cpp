#include "duffing/vpt.hpp"

#include "duffing/exact_freq.hpp"

#include <json.hpp>

#include <cmath>
#include <sstream>

namespace duffing {

VariationalPolynomial reexpand(const WeakSeries& series, int N)
{
    if (N < 0 || N > series.order())
        throw std::invalid_argument("re-expansion order outside the series");
    VariationalPolynomial poly;
    poly.order = N;
    poly.c.resize(N + 1);
    for (int n = 0; n <= N; ++n) {
        const Rational alpha = Rational(1, 2) - n;
        for (int k = 0; k <= N - n; ++k)
            poly.c[n].push_back(series.omega_coeffs[n] * binomial(alpha, static_cast<unsigned>(k)));
    }
    return poly;
}

BigReal VariationalPolynomial::evaluate(const BigReal& g, const BigReal& omega0, const BigReal& Omega) const
{
    const BigReal u = 1 / (Omega * Omega);
    const BigReal x = omega0 * omega0 * u - 1;
    BigReal total = 0;
    BigReal g_pow_u = 1; // (g u)^n
    for (int n = 0; n <= order; ++n) {
        BigReal inner = 0;
        for (int k = static_cast<int>(c[n].size()) - 1; k >= 0; --k)
            inner = inner * x + to_bigreal(c[n][k]);
        total += inner * g_pow_u;
        g_pow_u *= g * u;
    }
    return Omega * total;
}

Rational VariationalPolynomial::evaluate(const Rational& g, const Rational& omega0, const Rational& Omega) const
{
    return Omega * reduced(g, omega0)(Rational(1 / (Omega * Omega)));
}

PolynomialR VariationalPolynomial::reduced(const Rational& g, const Rational& omega0) const
{
    // sum_n sum_k c[n][k] g^n u^n (w0^2 u - 1)^k
    const PolynomialR shift(std::vector<Rational>{Rational(-1), omega0 * omega0});
    PolynomialR total;
    Rational g_pow = 1;
    for (int n = 0; n <= order; ++n) {
        PolynomialR inner;
        for (int k = static_cast<int>(c[n].size()) - 1; k >= 0; --k)
            inner = inner * shift + PolynomialR({c[n][k]});
        total += PolynomialR::monomial(static_cast<unsigned>(n), g_pow) * inner;
        g_pow *= g;
    }
    return total;
}

PolynomialR stationarity_condition(const PolynomialR& P, int level, const Rational& power)
{
    // d/dOmega [Omega^s u^i] = (s - 2i) Omega^(s-1) u^i, so each level scales
    // coefficient i by (s - j - 2i).
    std::vector<Rational> q = P.coeffs();
    for (std::size_t i = 0; i < q.size(); ++i)
        for (int j = 0; j < level; ++j)
            q[i] *= power - j - 2 * static_cast<long>(i);
    return PolynomialR(std::move(q));
}

namespace {

struct Optimum {
    BigReal omega_opt;
    int level = 0;
};

// Lowest level with a positive zero in u; candidate nearest `reference`.
Optimum minimal_sensitivity(const PolynomialR& P, int max_level, const BigReal& reference, unsigned digits)
{
    for (int level = 1; level <= std::max(max_level, 1); ++level) {
        PolynomialR condition = stationarity_condition(P, level);
        if (condition.degree() < 1)
            continue;
        auto roots = real_roots(condition, Rational(0), root_bound(condition), digits);
        if (roots.empty())
            continue;
        Optimum best;
        best.level = level;
        std::optional<BigReal> best_distance;
        for (const auto& root : roots) {
            BigReal Omega = 1 / sqrt(root.value);
            BigReal distance = abs(Omega - reference);
            if (!best_distance || distance < *best_distance) {
                best_distance = distance;
                best.omega_opt = Omega;
            }
        }
        return best;
    }
    throw OptimizationError("no real positive stationary point at any derivative level up to "
                            + std::to_string(std::max(max_level, 1)));
}

} // namespace

VariationalRecord optimize_omega(const VariationalPolynomial& poly, const BigReal& g, const BigReal& omega0,
                                 const std::optional<BigReal>& prev)
{
    if (g < 0)
        throw std::invalid_argument("coupling g must be non-negative");
    if (omega0 <= 0)
        throw std::invalid_argument("omega0 must be positive");

    VariationalRecord record;
    record.order = poly.order;
    if (g == 0 || poly.order == 0) {
        // Nothing to vary: the re-expansion collapses onto the bare frequency.
        record.omega_opt = omega0;
        record.value = poly.order == 0 ? poly.evaluate(g, omega0, omega0) : omega0;
        record.derivative_level = poly.order == 0 ? 0 : 1;
    } else {
        const unsigned digits = working_digits();
        BigReal reference = prev ? *prev : BigReal(omega0 * sqrt(1 + 3 * g / (4 * omega0 * omega0)));
        PolynomialR P = poly.reduced(to_rational(g), to_rational(omega0));
        Optimum opt = minimal_sensitivity(P, poly.order, reference, digits);
        record.omega_opt = opt.omega_opt;
        record.derivative_level = opt.level;
        record.value = poly.evaluate(g, omega0, opt.omega_opt);
    }
    BigReal exact = omega_exact(g, omega0).omega;
    record.rel_error = abs(record.value - exact) / exact;
    return record;
}

VariationalRecord variational_frequency(const WeakSeries& series, int N, const BigReal& g, const BigReal& omega0)
{
    if (N < 1 || N > series.order())
        throw std::invalid_argument("variational order must lie in [1, series order]");
    std::optional<BigReal> prev;
    VariationalRecord record;
    for (int order = 1; order <= N; ++order) {
        record = optimize_omega(reexpand(series, order), g, omega0, prev);
        prev = record.omega_opt;
    }
    return record;
}

std::vector<Rational> b0_polynomial(const WeakSeries& series, int N)
{
    if (N < 0 || N > series.order())
        throw std::invalid_argument("b0 polynomial order outside the series");
    std::vector<Rational> d(N + 1);
    for (int n = 0; n <= N; ++n) {
        Rational term = binomial(Rational(-1, 2) - n, static_cast<unsigned>(N - n)) * series.omega_coeffs[n];
        d[n] = (N - n) % 2 == 0 ? term : Rational(-term);
    }
    return d;
}

unsigned precision_for_order(int N) { return 30 + 2 * static_cast<unsigned>(std::max(N, 0)); }

VariationalRecord optimize_b0(const WeakSeries& series, int N, const std::optional<BigReal>& prev, unsigned digits)
{
    if (N < 1)
        throw std::invalid_argument("b0 optimisation needs N >= 1");
    WorkingPrecision precision(digits);
    const std::vector<Rational> d = b0_polynomial(series, N);
    const PolynomialR P{std::vector<Rational>(d)};

    VariationalRecord record;
    record.order = N;
    BigReal reference = prev ? *prev : BigReal(sqrt(BigReal(3)) / 2);
    Optimum opt = minimal_sensitivity(P, N, reference, precision.digits());
    record.omega_opt = opt.omega_opt;
    record.derivative_level = opt.level;
    record.value = record.omega_opt * P(BigReal(1 / (record.omega_opt * record.omega_opt)));

    const int expected = N % 2 == 1 ? 1 : 2;
    if (opt.level != expected) {
        record.flagged = true;
        record.note = "stationary point found at derivative level " + std::to_string(opt.level) + ", expected "
                      + std::to_string(expected);
    }
    BigReal b0 = strong_coupling_b0();
    record.rel_error = abs(record.value - b0) / b0;
    return record;
}

ConvergenceStudy convergence_study(const WeakSeries& series, int maxN, int fit_last, unsigned min_digits)
{
    if (maxN < 1 || maxN > series.order())
        throw std::invalid_argument("convergence study order must lie in [1, series order]");
    ConvergenceStudy study;
    study.digits = std::max(min_digits, precision_for_order(maxN));
    WorkingPrecision precision(study.digits);

    std::optional<BigReal> prev;
    for (int N = 1; N <= maxN; ++N) {
        try {
            VariationalRecord record = optimize_b0(series, N, prev, study.digits);
            prev = record.omega_opt;
            study.records.push_back(std::move(record));
        } catch (const OptimizationError& e) {
            VariationalRecord record;
            record.order = N;
            record.failed = true;
            record.flagged = true;
            record.note = e.what();
            study.records.push_back(std::move(record));
        }
    }

    // The window spans fit_last order steps, i.e. orders maxN - fit_last .. maxN.
    std::vector<std::pair<BigReal, BigReal>> points;
    for (const auto& r : study.records) {
        if (r.order < maxN - fit_last || r.failed || !r.rel_error || *r.rel_error <= 0)
            continue;
        points.emplace_back(BigReal(r.order), log(*r.rel_error));
    }
    if (fit_last >= 1 && points.size() >= 2) {
        LineFit line = fit_line(points);
        study.fit = ConvergenceFit{line.alpha, line.beta, points.front().first.convert_to<int>(),
                                   points.back().first.convert_to<int>(), line.residual};
    }
    return study;
}

std::string study_to_csv(const ConvergenceStudy& study, unsigned digits)
{
    std::string out = "N,omega0_opt,b0_N,rel_error,ln_rel_error,derivative_level\n";
    for (const auto& r : study.records) {
        out += std::to_string(r.order);
        if (r.failed) {
            out += ",nan,nan,nan,nan,0\n";
            continue;
        }
        out += ',' + format(r.omega_opt, digits);
        out += ',' + format(r.value, digits);
        if (r.rel_error && *r.rel_error > 0) {
            out += ',' + format(*r.rel_error, digits);
            out += ',' + format(BigReal(log(*r.rel_error)), digits);
        } else {
            out += ",0,-inf";
        }
        out += ',' + std::to_string(r.derivative_level) + '\n';
    }
    return out;
}

std::string fit_to_json(const ConvergenceStudy& study)
{
    if (!study.fit)
        return "null";
    const auto& fit = *study.fit;
    nlohmann::ordered_json j;
    j["alpha"] = fit.alpha.convert_to<double>();
    j["beta"] = fit.beta.convert_to<double>();
    j["range"] = {fit.first_order, fit.last_order};
    j["residual"] = fit.residual.convert_to<double>();
    j["digits"] = study.digits;
    return j.dump();
}

} // namespace duffing
