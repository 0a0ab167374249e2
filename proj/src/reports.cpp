#include "duffing/reports.hpp"

#include "duffing/exact_freq.hpp"
#include "duffing/reference_values.hpp"
#include "duffing/vpt.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace duffing {

namespace {

using Table = std::vector<std::vector<std::string>>; // first row is the header

std::string render_csv(const Table& table)
{
    std::string out;
    for (const auto& row : table) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                out += ',';
            out += row[i];
        }
        out += '\n';
    }
    return out;
}

std::string render_pretty(const Table& table)
{
    std::vector<std::size_t> width;
    for (const auto& row : table) {
        width.resize(std::max(width.size(), row.size()), 0);
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    }
    std::string out;
    for (std::size_t r = 0; r < table.size(); ++r) {
        std::string line;
        for (std::size_t i = 0; i < table[r].size(); ++i) {
            if (i)
                line += "  ";
            line += table[r][i];
            if (i + 1 < table[r].size())
                line.append(width[i] - table[r][i].size(), ' ');
        }
        out += line + '\n';
        if (r == 0) {
            std::size_t total = 0;
            for (std::size_t w : width)
                total += w;
            out.append(total + 2 * (width.size() - 1), '-');
            out += '\n';
        }
    }
    return out;
}

// JSON array of objects keyed by the header; cells stay strings so no
// precision is lost.
std::string render_json(const Table& table)
{
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (std::size_t r = 1; r < table.size(); ++r) {
        nlohmann::ordered_json row;
        for (std::size_t i = 0; i < table[r].size(); ++i)
            row[table[0][i]] = table[r][i];
        out.push_back(std::move(row));
    }
    return out.dump(1) + '\n';
}

std::string render(const Table& table, OutputFormat output)
{
    switch (output) {
    case OutputFormat::csv:
        return render_csv(table);
    case OutputFormat::json:
        return render_json(table);
    case OutputFormat::pretty:
        return render_pretty(table);
    }
    return {};
}

void check_digits(unsigned digits)
{
    if (digits < min_report_digits)
        throw std::invalid_argument("digits must be at least " + std::to_string(min_report_digits));
}

void check_order(const WeakSeries& series, int N, int min_order)
{
    if (N < min_order || N > series.order())
        throw std::invalid_argument("order " + std::to_string(N) + " outside [" + std::to_string(min_order) + ", "
                                    + std::to_string(series.order()) + "]");
}

// Extra digits carried internally beyond what is printed.
constexpr unsigned guard_digits = 10;

} // namespace

std::string report_coeffs(const WeakSeries& series, int N, bool full, OutputFormat output)
{
    check_order(series, N, 0);
    WeakSeries head;
    head.omega_coeffs.assign(series.omega_coeffs.begin(), series.omega_coeffs.begin() + N + 1);
    head.solution_coeffs.assign(series.solution_coeffs.begin(), series.solution_coeffs.begin() + N + 1);
    if (output == OutputFormat::json)
        return series_to_json(head, full) + '\n';

    Table table;
    table.push_back(full ? std::vector<std::string>{"n", "w", "q"} : std::vector<std::string>{"n", "w"});
    for (int n = 0; n <= N; ++n) {
        std::vector<std::string> row{std::to_string(n), to_string(head.omega_coeffs[n])};
        if (full) {
            std::string q;
            for (const auto& [k, c] : head.solution_coeffs[n].terms()) {
                if (!q.empty())
                    q += ' ';
                q += std::to_string(k) + ':' + to_string(c);
            }
            row.push_back(q);
        }
        table.push_back(std::move(row));
    }
    return render(table, output);
}

FreqReport report_freq(const WeakSeries& series, const std::string& g_text, const std::string& omega0_text,
                       const std::string& methods, int N, unsigned digits, OutputFormat output)
{
    check_digits(digits);
    WorkingPrecision precision(digits + guard_digits);
    const BigReal g = parse_bigreal(g_text);
    const BigReal omega0 = parse_bigreal(omega0_text);
    if (g < 0)
        throw std::invalid_argument("coupling g must be non-negative");
    if (omega0 <= 0)
        throw std::invalid_argument("omega0 must be positive");

    std::vector<std::string> wanted;
    {
        std::stringstream ss(methods);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item != "exact" && item != "weak" && item != "variational" && item != "oracle")
                throw std::invalid_argument("unknown method '" + item + "'");
            wanted.push_back(item);
        }
    }
    if (wanted.empty())
        throw std::invalid_argument("no methods requested");
    const bool wants_order = std::find(wanted.begin(), wanted.end(), "weak") != wanted.end()
                             || std::find(wanted.begin(), wanted.end(), "variational") != wanted.end();
    if (wants_order)
        check_order(series, N, std::find(wanted.begin(), wanted.end(), "variational") != wanted.end() ? 1 : 0);

    const BigReal exact = omega_exact(g, omega0).omega;
    const bool show_deviation = std::find(wanted.begin(), wanted.end(), "exact") != wanted.end();

    FreqReport report;
    Table table;
    table.push_back({"method", "order", "omega", "rel_deviation", "status"});
    auto deviation = [&](const BigReal& v) {
        return show_deviation ? format(BigReal(abs(v - exact) / exact), digits) : std::string();
    };
    for (const auto& method : wanted) {
        if (method == "exact") {
            table.push_back({method, "", format(exact, digits), deviation(exact), "ok"});
        } else if (method == "weak") {
            BigReal v = frequency_partial_sum(series, N, g, omega0);
            table.push_back({method, std::to_string(N), format(v, digits), deviation(v), "ok"});
        } else if (method == "variational") {
            try {
                VariationalRecord r = variational_frequency(series, N, g, omega0);
                std::string status = "ok level=" + std::to_string(r.derivative_level);
                if (r.flagged) {
                    status = "flagged: " + r.note;
                    report.flagged = true;
                }
                table.push_back({method, std::to_string(N), format(r.value, digits), deviation(r.value), status});
            } catch (const OptimizationError& e) {
                report.flagged = true;
                table.push_back({method, std::to_string(N), "nan", "", std::string("failed: ") + e.what()});
            }
        } else {
            OracleResult r = ode_period_oracle(g, omega0, BigReal("1e-12"));
            table.push_back({method, "", format(r.omega, digits), deviation(r.omega), "ok"});
        }
    }
    report.text = render(table, output);
    return report;
}

std::string report_b0(const WeakSeries& series, int N, unsigned digits, OutputFormat output)
{
    check_digits(digits);
    check_order(series, N, 1);
    const unsigned work = std::max(digits + guard_digits, precision_for_order(N));
    WorkingPrecision precision(work);
    std::optional<BigReal> prev;
    VariationalRecord r;
    for (int order = 1; order <= N; ++order) {
        r = optimize_b0(series, order, prev, work);
        prev = r.omega_opt;
    }
    Table table;
    table.push_back({"N", "omega0_opt", "b0_N", "b0_exact", "rel_error", "derivative_level"});
    table.push_back({std::to_string(N), format(r.omega_opt, digits), format(r.value, digits),
                     format(strong_coupling_b0(), digits), format(*r.rel_error, digits),
                     std::to_string(r.derivative_level)});
    return render(table, output);
}

ConvergenceReport report_convergence(const WeakSeries& series, int maxN, int fit_last, unsigned digits,
                                     OutputFormat output)
{
    check_digits(digits);
    check_order(series, maxN, 1);
    if (fit_last < 1)
        throw std::invalid_argument("fit window must span at least one order step");
    ConvergenceStudy study = convergence_study(series, maxN, fit_last, digits + guard_digits);
    WorkingPrecision precision(study.digits);

    ConvergenceReport report;
    for (const auto& r : study.records)
        report.flagged = report.flagged || r.flagged;
    report.fit_json = fit_to_json(study);
    if (output == OutputFormat::csv) {
        report.records = study_to_csv(study, digits);
        return report;
    }
    // Reuse the CSV cells for the other renderings.
    Table table;
    std::stringstream ss(study_to_csv(study, digits));
    std::string line;
    while (std::getline(ss, line)) {
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ','))
            cells.push_back(cell);
        table.push_back(std::move(cells));
    }
    if (output == OutputFormat::json) {
        nlohmann::ordered_json doc;
        doc["records"] = nlohmann::ordered_json::parse(render_json(table));
        doc["fit"] = nlohmann::ordered_json::parse(report.fit_json);
        report.records = doc.dump(1) + '\n';
    } else {
        report.records = render_pretty(table);
    }
    return report;
}

std::string report_envelope(const WeakSeries& series, const std::string& gmin, const std::string& gmax,
                            int samples, const std::vector<int>& weak_orders,
                            const std::vector<int>& strong_orders, const std::string& omega0, unsigned digits)
{
    check_digits(digits);
    WorkingPrecision precision(digits + guard_digits);
    EnvelopeTable table = envelope_data(parse_bigreal(gmin), parse_bigreal(gmax), samples, weak_orders,
                                        strong_orders, series, parse_bigreal(omega0));
    return to_csv(table, digits);
}

// ---------------------------------------------------------------------------

SelfTestResult run_selftest(bool inject_fault)
{
    std::vector<std::pair<std::string, bool>> checks;
    auto check = [&](std::string name, auto&& body) {
        bool ok = false;
        try {
            ok = body();
        } catch (const std::exception&) {
            ok = false;
        }
        checks.emplace_back(std::move(name), ok);
    };

    WeakSeries series = weak_series(20);
    if (inject_fault)
        series.omega_coeffs[7] += Rational(1, 1 << 20);

    check("weak coefficients w_1..w_20 exact", [&] {
        for (int n = 1; n <= 20; ++n)
            if (series.omega_coeffs[n] != parse_rational(reference::weak_coefficients[n - 1]))
                return false;
        return true;
    });
    check("solution q_1, q_2 exact", [&] {
        TrigPoly q1 = TrigPoly::cosine(1, Rational(-1, 32)) + TrigPoly::cosine(3, Rational(1, 32));
        TrigPoly q2 = TrigPoly::cosine(1, Rational(23, 1024)) + TrigPoly::cosine(3, Rational(-3, 128))
                      + TrigPoly::cosine(5, Rational(1, 1024));
        return series.solution_coeffs[1] == q1 && series.solution_coeffs[2] == q2;
    });
    check("b_0 = pi/(2K(1/2)) to 19 digits", [&] {
        WorkingPrecision p(30);
        return abs(strong_coupling_b0() - parse_bigreal(std::string(reference::strong_b0))) < BigReal("1e-19");
    });
    check("b_0^(N), N=1..20, within 1e-19", [&] {
        unsigned digits = precision_for_order(20);
        WorkingPrecision p(digits);
        std::optional<BigReal> prev;
        for (int N = 1; N <= 20; ++N) {
            VariationalRecord r = optimize_b0(series, N, prev, digits);
            prev = r.omega_opt;
            if (abs(r.value - parse_bigreal(std::string(reference::variational_b0[N - 1]))) >= BigReal("1e-19"))
                return false;
        }
        return true;
    });
    check("ODE oracle vs exact, 10 digits", [&] {
        WorkingPrecision p(30);
        for (const char* g : {"0.1", "1", "10"}) {
            BigReal exact = omega_exact(parse_bigreal(g), BigReal(1)).omega;
            BigReal oracle = ode_period_oracle(parse_bigreal(g), BigReal(1), BigReal("1e-12")).omega;
            if (abs(oracle - exact) / exact >= BigReal("1e-10"))
                return false;
        }
        return true;
    });

    SelfTestResult result;
    result.passed = true;
    for (const auto& [name, ok] : checks) {
        result.report += std::string(ok ? "PASS  " : "FAIL  ") + name + '\n';
        result.passed = result.passed && ok;
    }
    result.report += result.passed ? "selftest: all checks passed\n" : "selftest: FAILED\n";
    return result;
}

} // namespace duffing
