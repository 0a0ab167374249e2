// Acceptance matrix: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include "duffing/exact_freq.hpp"
#include "duffing/lindstedt.hpp"
#include "duffing/reference_values.hpp"
#include "duffing/vpt.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace duffing;

namespace {

Rational frac(long a, long b)
{
    Rational r(a, b);
    r.canonicalize();
    return r;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail)
{
    std::printf("[%s] %d. %s: %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok)
        ++failures;
}

BigReal rel(const BigReal& a, const BigReal& b) { return abs(a - b) / abs(b); }

BigReal bigger(const BigReal& a, const BigReal& b) { return a < b ? b : a; }

std::string sci(const BigReal& x, unsigned digits = 3) { return format(x, digits); }

Rational rpow(const Rational& x, int e) { return e >= 0 ? pow(x, e) : 1 / pow(x, -e); }

// f_n from explicit triple sums over the final series.
TrigPoly naive_forcing(const WeakSeries& s, int n)
{
    TrigPoly f;
    for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b) {
            const int c = n - a - b;
            if (c != n)
                f.add_scaled(-s.omega_coeffs[a] * s.omega_coeffs[b], second_derivative(s.solution_coeffs[c]));
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; a + b < n; ++b)
            f -= s.solution_coeffs[a] * s.solution_coeffs[b] * s.solution_coeffs[n - 1 - a - b];
    return f;
}

} // namespace

int main()
{
    WorkingPrecision base(30);

    // 1
    {
        auto t0 = Clock::now();
        WeakSeries s = weak_series(20);
        const double dt = seconds_since(t0);
        int matched = 0;
        for (int n = 1; n <= 20; ++n)
            if (s.omega_coeffs[n] == parse_rational(std::string(reference::weak_coefficients[n - 1])))
                ++matched;
        std::ostringstream d;
        d << matched << "/20 exact, " << dt << " s";
        report(1, "weak coefficients w_1..w_20", matched == 20 && dt < 5.0, d.str());
    }

    const WeakSeries series = weak_series(20);

    // 2
    {
        const TrigPoly q1 = TrigPoly::cosine(1, Rational(-1, 32)) + TrigPoly::cosine(3, Rational(1, 32));
        const TrigPoly q2 = TrigPoly::cosine(1, Rational(23, 1024)) + TrigPoly::cosine(3, Rational(-3, 128)) +
                            TrigPoly::cosine(5, Rational(1, 1024));
        const bool ok = series.solution_coeffs[1] == q1 && series.solution_coeffs[2] == q2;
        report(2, "solution coefficients q_1, q_2", ok,
               "q1 = " + series.solution_coeffs[1].to_string() + "; q2 = " + series.solution_coeffs[2].to_string());
    }

    // 3
    {
        WorkingPrecision p(30);
        BigReal b0 = strong_coupling_b0();
        BigReal err = abs(b0 - parse_bigreal(std::string(reference::strong_b0)));
        report(3, "b_0 = pi/(2K(1/2))", err < BigReal("0.5e-19"),
               format(b0, 25) + ", deviation " + sci(err));
    }

    // 4
    {
        WorkingPrecision p(40);
        VariationalRecord r1 = optimize_b0(series, 1, std::nullopt, 40);
        VariationalRecord r2 = optimize_b0(series, 2, r1.omega_opt, 40);
        BigReal c1 = sqrt(BigReal(3)) / 2, c2 = 51 * sqrt(BigReal(14)) / 224;
        BigReal e1 = *r1.rel_error * 100, e2 = *r2.rel_error * 100;
        const bool ok = rel(r1.value, c1) < BigReal("1e-38") && rel(r2.value, c2) < BigReal("1e-38") &&
                        abs(e1 - BigReal("2.2")) <= BigReal("0.05") && abs(e2 - BigReal("0.55")) <= BigReal("0.05");
        report(4, "closed-form b_0^(1), b_0^(2)", ok,
               "errors " + format(e1, 4) + "% and " + format(e2, 4) + "%");
    }

    // 5
    {
        auto t0 = Clock::now();
        ConvergenceStudy st = convergence_study(series, 20, 10);
        const double dt = seconds_since(t0);
        WorkingPrecision p(st.digits);
        BigReal worst = 0;
        for (const auto& r : st.records) {
            BigReal ref = to_bigreal(parse_rational(std::string(reference::variational_b0[r.order - 1])));
            worst = bigger(worst, BigReal(abs(r.value - ref)));
        }
        const BigReal b0 = strong_coupling_b0();
        const std::string a11 = format(st.records.back().value, 11), b11 = format(b0, 11);
        std::ostringstream d;
        d << "max deviation " << sci(worst) << ", b_0^(20) " << a11 << " vs " << b11 << ", " << dt << " s";
        report(5, "variational b_0^(1..20)", worst < BigReal("1e-19") && a11 == b11 && dt < 60.0, d.str());
    }

    // 6
    {
        auto t0 = Clock::now();
        WeakSeries s100 = weak_series(100);
        ConvergenceStudy st = convergence_study(s100, 100, 10);
        const double dt = seconds_since(t0);
        bool ok = st.fit.has_value();
        std::ostringstream d;
        if (ok) {
            const double alpha = st.fit->alpha.convert_to<double>();
            const double beta = st.fit->beta.convert_to<double>();
            ok = std::abs(beta - reference::fit_beta) <= 0.01 && std::abs(alpha - reference::fit_alpha) <= 0.1;
            d << "alpha " << alpha << ", beta " << beta << " over N = " << st.fit->first_order << ".."
              << st.fit->last_order << ", " << dt << " s";
        } else {
            d << "no fit";
        }
        report(6, "convergence law to N = 100", ok && dt < 1800.0, d.str());
    }

    // 7 and the energy part of 9
    bool energy_ok = true;
    BigReal worst_energy = 0;
    {
        WorkingPrecision p(30);
        BigReal worst = 0;
        for (const char* g_text : {"0.1", "1", "10"}) {
            BigReal g(g_text);
            OracleResult o = ode_period_oracle(g, 1, BigReal("1e-12"));
            worst = bigger(worst, rel(o.omega, omega_exact(g, 1).omega));
            worst_energy = bigger(worst_energy, BigReal(o.max_energy_error));
            energy_ok = energy_ok && o.max_energy_error <= 100 * 1e-12L;
        }
        report(7, "ODE oracle vs elliptic formula", worst < BigReal("0.5e-10"), "max relative deviation " + sci(worst));
    }

    // 8
    {
        WorkingPrecision p(40);
        const VariationalPolynomial p1 = reexpand(series, 1), p2 = reexpand(series, 2);
        BigReal m1 = 0, m2 = 0;
        for (int i = 0; i <= 120; ++i) {
            BigReal g = pow(BigReal(10), -2 + BigReal(i) / 20);
            VariationalRecord r1 = optimize_omega(p1, g, 1);
            VariationalRecord r2 = optimize_omega(p2, g, 1, r1.omega_opt);
            m1 = bigger(m1, *r1.rel_error);
            m2 = bigger(m2, *r2.rel_error);
        }
        const bool ok = m1 <= BigReal("0.023") && m2 < m1 && m2 <= BigReal("0.006");
        report(8, "variational accuracy on g in [1e-2, 1e4]", ok,
               "max error N=1 " + format(m1 * 100, 4) + "%, N=2 " + format(m2 * 100, 4) + "%");
    }

    // 9
    {
        bool secular = true, residual = true;
        for (int n = 1; n <= 20; ++n) {
            TrigPoly f = naive_forcing(series, n);
            const TrigPoly& q = series.solution_coeffs[n];
            secular = secular && f.coefficient(1) == 0;
            residual = residual && (second_derivative(q) + q - f).is_zero() && q.value_at_zero() == 0;
        }

        bool omega_independent = true;
        std::mt19937 rng(7);
        std::uniform_int_distribution<int> num(1, 50);
        for (int N = 0; N <= 20; ++N) {
            const VariationalPolynomial poly = reexpand(series, N);
            for (int i = 0; i < 3; ++i) {
                Rational g = frac(num(rng), 9), w0 = frac(num(rng), 7);
                Rational truncated = 0;
                for (int n = 0; n <= N; ++n)
                    truncated += series.omega_coeffs[n] * rpow(w0, 1 - 2 * n) * rpow(g, n);
                omega_independent = omega_independent && poly.evaluate(g, w0, w0) == truncated;
            }
        }

        bool b0_forms = true;
        for (int N = 0; N <= 20; ++N) {
            const VariationalPolynomial poly = reexpand(series, N);
            const std::vector<Rational> d = b0_polynomial(series, N);
            for (int n = 0; n <= N; ++n) {
                Rational sum = 0;
                for (int k = 0; k <= N - n; ++k)
                    sum += poly.c[n][k] * (k % 2 ? -1 : 1);
                b0_forms = b0_forms && d[n] == sum;
            }
        }

        auto mark = [](bool b) { return b ? "ok" : "FAILED"; };
        std::ostringstream d;
        d << "secular-freedom " << mark(secular) << ", ODE residual " << mark(residual) << ", Omega-independence "
          << mark(omega_independent) << ", double sum = closed form " << mark(b0_forms) << ", energy drift "
          << sci(worst_energy) << " " << mark(energy_ok);
        report(9, "property suites", secular && residual && omega_independent && b0_forms && energy_ok, d.str());
    }

    std::printf("%s\n", failures == 0 ? "all acceptance criteria passed" : "acceptance criteria failed");
    return failures == 0 ? 0 : 1;
}
