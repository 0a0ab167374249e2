#include "duffing/lindstedt.hpp"

#include <json.hpp>

#include <stdexcept>

namespace duffing {

TrigPoly Inhomogeneity::evaluate(const Rational& w) const
{
    TrigPoly f = known;
    f.add_scaled(w, w_multiplier);
    return f;
}

LindstedtRecursion::LindstedtRecursion()
{
    TrigPoly q0 = TrigPoly::cosine(1);
    series_.omega_coeffs.push_back(Rational(1));
    series_.solution_coeffs.push_back(q0);
    q_second_.push_back(second_derivative(q0));
    squares_.push_back(q0 * q0);
}

Inhomogeneity LindstedtRecursion::inhomogeneity() const
{
    const int n = next_order();
    const auto& w = series_.omega_coeffs;
    const auto& q = series_.solution_coeffs;

    Inhomogeneity f;
    f.w_multiplier = q_second_[0] * Rational(-2);

    // -2 sum_{l=1}^{n-1} w_l q_{n-l}''
    for (int l = 1; l < n; ++l)
        f.known.add_scaled(Rational(-2) * w[l], q_second_[n - l]);

    // -sum_{m=1}^{n-1} sum_{l=1}^{n-m} w_m w_l q_{n-m-l}'', grouped by j = m + l
    for (int j = 2; j <= n; ++j) {
        Rational pair_sum = 0;
        for (int m = 1; m < j; ++m)
            pair_sum += w[m] * w[j - m];
        f.known.add_scaled(-pair_sum, q_second_[n - j]);
    }

    // -sum_{m+l+i=n-1} q_m q_l q_i = -sum_j S_j q_{n-1-j}
    TrigPoly cubic;
    for (int j = 0; j < n; ++j)
        cubic.add_product(squares_[j], q[n - 1 - j]);
    f.known -= cubic;
    return f;
}

LindstedtRecursion::OrderSolution LindstedtRecursion::solve_order()
{
    const int n = next_order();
    Inhomogeneity parts = inhomogeneity();

    Rational slope = parts.w_multiplier.coefficient(1);
    if (slope == 0)
        throw std::logic_error("secular condition is degenerate");
    Rational w_n = -parts.known.coefficient(1) / slope;
    TrigPoly f = parts.evaluate(w_n);
    if (f.coefficient(1) != 0)
        throw std::logic_error("secular term survived");

    // q_n = sum_{h != 1} f_h/(1-h^2) cos(h xi) + c cos(xi), c fixed by q_n(0) = 0.
    TrigPoly q_n;
    Rational at_zero = 0;
    for (const auto& [h, fh] : f.terms()) {
        if (h % 2 == 0)
            throw std::logic_error("even harmonic in inhomogeneity at order " + std::to_string(n));
        Rational c = fh / Rational(1 - static_cast<long>(h) * static_cast<long>(h));
        q_n += TrigPoly::cosine(h, c);
        at_zero += c;
    }
    q_n += TrigPoly::cosine(1, -at_zero);

    TrigPoly q_n_second = second_derivative(q_n);
    if (q_n.value_at_zero() != 0 || q_n_second + q_n != f)
        throw std::logic_error("order " + std::to_string(n) + " solution fails its equation");

    series_.omega_coeffs.push_back(w_n);
    series_.solution_coeffs.push_back(q_n);
    q_second_.push_back(std::move(q_n_second));

    // S_n = sum_{m=0}^{n} q_m q_{n-m}, using the symmetry of the sum.
    const auto& q = series_.solution_coeffs;
    TrigPoly s;
    for (int m = 0; 2 * m < n; ++m)
        s.add_product(q[m], q[n - m]);
    s *= Rational(2);
    if (n % 2 == 0)
        s.add_product(q[n / 2], q[n / 2]);
    squares_.push_back(std::move(s));

    return {w_n, q_n};
}

WeakSeries weak_series(int N)
{
    if (N < 0)
        throw std::invalid_argument("series order must be non-negative");
    LindstedtRecursion recursion;
    while (recursion.series().order() < N)
        recursion.solve_order();
    return recursion.series();
}

BigReal frequency_partial_sum(const WeakSeries& series, int N, const BigReal& g,
                              const BigReal& omega0)
{
    if (N < 0 || N > series.order())
        throw std::invalid_argument("partial sum order outside the series");
    if (omega0 <= 0)
        throw std::invalid_argument("omega0 must be positive");
    // omega0 * sum_n w_n x^n with x = g / omega0^2, by Horner.
    BigReal x = g / (omega0 * omega0);
    BigReal sum = 0;
    for (int n = N; n >= 0; --n)
        sum = sum * x + to_bigreal(series.omega_coeffs[n]);
    return omega0 * sum;
}

std::string series_to_json(const WeakSeries& series, bool include_solution)
{
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (int n = 0; n <= series.order(); ++n) {
        nlohmann::ordered_json row;
        row["n"] = n;
        row["w"] = to_string(series.omega_coeffs[n]);
        if (include_solution) {
            nlohmann::ordered_json terms = nlohmann::ordered_json::array();
            for (const auto& [k, c] : series.solution_coeffs[n].terms())
                terms.push_back({{"k", k}, {"c", to_string(c)}});
            row["q"] = std::move(terms);
        }
        out.push_back(std::move(row));
    }
    return out.dump();
}

WeakSeries series_from_json(const std::string& text)
{
    auto doc = nlohmann::json::parse(text);
    if (!doc.is_array())
        throw std::invalid_argument("series JSON must be an array");
    WeakSeries series;
    for (const auto& row : doc) {
        if (row.at("n").get<int>() != static_cast<int>(series.omega_coeffs.size()))
            throw std::invalid_argument("series JSON orders must be consecutive from 0");
        series.omega_coeffs.push_back(parse_rational(row.at("w").get<std::string>()));
        TrigPoly q;
        if (row.contains("q")) {
            for (const auto& term : row.at("q")) {
                long k = term.at("k").get<long>();
                if (k < 0)
                    throw std::invalid_argument("negative harmonic in series JSON");
                q += TrigPoly::cosine(static_cast<unsigned>(k),
                                      parse_rational(term.at("c").get<std::string>()));
            }
        }
        series.solution_coeffs.push_back(std::move(q));
    }
    return series;
}

} // namespace duffing
