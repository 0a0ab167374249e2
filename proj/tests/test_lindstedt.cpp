#include "duffing/lindstedt.hpp"
#include "duffing/reference_values.hpp"

#include <doctest.h>

#include <stdexcept>
#include <string>

using duffing::Rational;
using duffing::TrigPoly;
using duffing::WeakSeries;

namespace {

const WeakSeries& series20()
{
    static const WeakSeries s = duffing::weak_series(20);
    return s;
}

// f_n rebuilt from the full equation omega^2 q'' + q + g q^3 = 0 by explicit
// triple sums, with no caches and no split around w_n.
TrigPoly naive_forcing(const WeakSeries& s, int n)
{
    TrigPoly f;
    for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b) {
            const int c = n - a - b;
            if (c == n)
                continue; // the q_n'' term belongs on the left
            f.add_scaled(-s.omega_coeffs[a] * s.omega_coeffs[b], second_derivative(s.solution_coeffs[c]));
        }
    for (int a = 0; a <= n - 1; ++a)
        for (int b = 0; a + b <= n - 1; ++b) {
            const int c = n - 1 - a - b;
            f -= s.solution_coeffs[a] * s.solution_coeffs[b] * s.solution_coeffs[c];
        }
    return f;
}

bool is_power_of_two(const mpz_class& z)
{
    return z > 0 && mpz_popcount(z.get_mpz_t()) == 1;
}

} // namespace

TEST_CASE("first orders")
{
    duffing::LindstedtRecursion rec;
    CHECK(rec.next_order() == 1);
    duffing::Inhomogeneity f1 = rec.inhomogeneity();
    CHECK(f1.w_multiplier == TrigPoly::cosine(1, 2));
    CHECK(f1.evaluate(Rational(3, 8)) == TrigPoly::cosine(3, Rational(-1, 4)));

    auto o1 = rec.solve_order();
    CHECK(o1.w == Rational(3, 8));
    CHECK(o1.q == TrigPoly::cosine(1, Rational(-1, 32)) + TrigPoly::cosine(3, Rational(1, 32)));

    auto o2 = rec.solve_order();
    CHECK(o2.w == Rational(-21, 256));
    CHECK(o2.q == TrigPoly::cosine(1, Rational(23, 1024)) + TrigPoly::cosine(3, Rational(-3, 128)) +
                      TrigPoly::cosine(5, Rational(1, 1024)));
    CHECK(rec.series().order() == 2);
}

TEST_CASE("weak_series edge cases")
{
    WeakSeries s0 = duffing::weak_series(0);
    CHECK(s0.order() == 0);
    CHECK(s0.omega_coeffs[0] == 1);
    CHECK(s0.solution_coeffs[0] == TrigPoly::cosine(1));
    CHECK_THROWS_AS(duffing::weak_series(-1), std::invalid_argument);
}

TEST_CASE("coefficients through order 20")
{
    const WeakSeries& s = series20();
    REQUIRE(s.order() == 20);
    for (int n = 1; n <= 20; ++n) {
        CAPTURE(n);
        CHECK(s.omega_coeffs[n] == duffing::parse_rational(std::string(duffing::reference::weak_coefficients[n - 1])));
    }
}

TEST_CASE("each order solves the full equation")
{
    const WeakSeries& s = series20();
    for (int n = 1; n <= 20; ++n) {
        CAPTURE(n);
        const TrigPoly& q = s.solution_coeffs[n];
        const TrigPoly f = naive_forcing(s, n);
        CHECK((second_derivative(q) + q - f).is_zero());
        // Secular freedom: w_n removes the resonant harmonic.
        CHECK(f.coefficient(1) == 0);
        CHECK(q.value_at_zero() == 0);
        // Only odd harmonics 1 .. 2n+1 appear.
        CHECK(q.max_harmonic() == static_cast<unsigned>(2 * n + 1));
        for (const auto& [k, c] : q.terms())
            CHECK(k % 2 == 1);
    }
}

TEST_CASE("sign alternation and power-of-two denominators")
{
    const WeakSeries& s = series20();
    for (int n = 1; n <= 20; ++n) {
        CAPTURE(n);
        const Rational& w = s.omega_coeffs[n];
        CHECK(duffing::sign(w) == (n % 2 == 1 ? 1 : -1));
        CHECK(is_power_of_two(w.get_den()));
    }
}

TEST_CASE("partial sums")
{
    duffing::WorkingPrecision p(40);
    const WeakSeries& s = series20();
    CHECK(duffing::frequency_partial_sum(s, 0, 1, 1) == 1);
    CHECK(duffing::frequency_partial_sum(s, 1, 1, 1) == duffing::BigReal("1.375"));
    // omega0 scaling: w_n omega0^(1-2n) g^n.
    duffing::BigReal v = duffing::frequency_partial_sum(s, 2, 1, 2);
    duffing::BigReal expected = duffing::BigReal(2) + duffing::BigReal(3) / 16 - duffing::BigReal(21) / 2048;
    CHECK(abs(v - expected) < duffing::BigReal("1e-38"));
    CHECK_THROWS(duffing::frequency_partial_sum(s, 21, 1, 1));
}

TEST_CASE("JSON round trip")
{
    const WeakSeries& s = series20();
    const std::string text = duffing::series_to_json(s);
    WeakSeries back = duffing::series_from_json(text);
    CHECK(back.omega_coeffs == s.omega_coeffs);
    REQUIRE(back.solution_coeffs.size() == s.solution_coeffs.size());
    for (std::size_t i = 0; i < s.solution_coeffs.size(); ++i)
        CHECK(back.solution_coeffs[i] == s.solution_coeffs[i]);
    CHECK(duffing::series_to_json(back) == text);

    CHECK_THROWS(duffing::series_from_json("not json"));
    CHECK_THROWS(duffing::series_from_json(R"([{"n": 0, "w": "1/0"}])"));
}
