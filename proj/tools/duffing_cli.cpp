// duffing: command-line front end over the C API.
//
//   duffing coeffs -N 20
//   duffing freq -g 1 --methods exact,weak,variational -N 2
//   duffing b0 -N 20
//   duffing convergence -N 100 --fit-last 10 -o study.csv --fit-out fit.json
//   duffing envelope --gmin 1e-3 --gmax 1e3 --weak 1,2,3 --strong 0,1
//   duffing selftest

#include "duffing/duffing.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

constexpr int exit_usage = 1;
constexpr int max_order = 120;

struct StringDeleter {
    void operator()(char* s) const { duffing_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct SeriesDeleter {
    void operator()(duffing_series* s) const { duffing_series_destroy(s); }
};
using OwnedSeries = std::unique_ptr<duffing_series, SeriesDeleter>;

struct Failure {
    int code;
};

void check(duffing_status status)
{
    if (status != DUFFING_OK) {
        std::cerr << "error: " << duffing_last_error() << '\n';
        throw Failure{static_cast<int>(status)};
    }
}

OwnedSeries make_series(int order)
{
    duffing_series* raw = nullptr;
    check(duffing_series_create(order, &raw));
    return OwnedSeries(raw);
}

void emit(const std::string& path, const char* text)
{
    if (path.empty() || path == "-") {
        std::fwrite(text, 1, std::char_traits<char>::length(text), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open '" << path << "' for writing\n";
        throw Failure{exit_usage};
    }
    out << text;
}

duffing_format parse_format(const std::string& name)
{
    if (name == "json")
        return DUFFING_FORMAT_JSON;
    if (name == "pretty")
        return DUFFING_FORMAT_PRETTY;
    return DUFFING_FORMAT_CSV;
}

std::vector<int> parse_orders(const std::string& list)
{
    std::vector<int> out;
    std::size_t start = 0;
    while (start < list.size()) {
        std::size_t comma = list.find(',', start);
        std::string item = list.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (auto dash = item.find('-'); dash != std::string::npos && dash > 0) {
            int lo = std::stoi(item.substr(0, dash));
            int hi = std::stoi(item.substr(dash + 1));
            for (int n = lo; n <= hi; ++n)
                out.push_back(n);
        } else if (!item.empty()) {
            out.push_back(std::stoi(item));
        }
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Duffing oscillator frequency: perturbation series, exact elliptic formula and variational "
                 "resummation"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(duffing_version()));

    int order = -1;
    std::string g = "1";
    std::string omega0 = "1";
    unsigned digits = 30;
    std::string format_name = "csv";
    std::string out_path;
    std::string methods = "exact,weak,variational";
    int fit_last = 10;
    bool full = false;
    std::string fit_out;
    std::string gmin = "1e-3";
    std::string gmax = "1e3";
    int samples = 61;
    std::string weak_list = "1-9";
    std::string strong_list = "0-4";
    bool inject_fault = false;

    auto add_common = [&](CLI::App* cmd, bool with_format) {
        cmd->add_option("-o,--out", out_path, "Output file (default stdout)");
        if (with_format)
            cmd->add_option("--format", format_name, "Output format")
                ->check(CLI::IsMember({"csv", "json", "pretty"}));
    };
    auto add_digits = [&](CLI::App* cmd) {
        cmd->add_option("--digits", digits, "Significant decimal digits in the output")->check(CLI::Range(15u, 2000u));
    };

    auto* coeffs = app.add_subcommand("coeffs", "Exact weak-coupling coefficients w_0..w_N");
    coeffs->add_option("-N,--order", order, "Highest order (default 20)")->check(CLI::Range(0, max_order));
    coeffs->add_flag("--full", full, "Include the solution harmonics q_n");
    add_common(coeffs, true);

    auto* freq = app.add_subcommand("freq", "Frequency at one coupling by several methods");
    freq->add_option("-g", g, "Coupling constant g >= 0")->required();
    freq->add_option("--omega0", omega0, "Harmonic frequency omega0 > 0");
    freq->add_option("--methods", methods, "Comma list of exact,weak,variational,oracle");
    freq->add_option("-N,--order", order, "Perturbative order (default 2)")->check(CLI::Range(0, max_order));
    add_digits(freq);
    add_common(freq, true);

    auto* b0 = app.add_subcommand("b0", "Variational strong-coupling coefficient b_0^(N)");
    b0->add_option("-N,--order", order, "Variational order (default 20)")->check(CLI::Range(1, max_order));
    add_digits(b0);
    add_common(b0, true);

    auto* convergence = app.add_subcommand("convergence", "b_0^(N) for N = 1..maxN and the exponential fit");
    convergence->add_option("-N,--order", order, "Highest order maxN (default 20)")->check(CLI::Range(1, max_order));
    convergence->add_option("--fit-last", fit_last, "Fit window in order steps, ending at maxN")
        ->check(CLI::PositiveNumber);
    convergence->add_option("--fit-out", fit_out, "Write the fit summary JSON here (default stderr)");
    add_digits(convergence);
    add_common(convergence, true);

    auto* envelope = app.add_subcommand("envelope", "Exact, weak and strong-coupling curves on a log grid (CSV)");
    envelope->add_option("--gmin", gmin, "Smallest coupling");
    envelope->add_option("--gmax", gmax, "Largest coupling");
    envelope->add_option("--samples", samples, "Number of log-spaced samples")->check(CLI::PositiveNumber);
    envelope->add_option("--weak", weak_list, "Weak orders, e.g. 1-9 or 1,3,5");
    envelope->add_option("--strong", strong_list, "Strong orders 0..4, e.g. 0-4");
    envelope->add_option("--omega0", omega0, "Harmonic frequency omega0 > 0");
    add_digits(envelope);
    add_common(envelope, false);

    auto* selftest = app.add_subcommand("selftest", "Run the embedded acceptance checks");
    selftest->add_flag("--inject-fault", inject_fault, "Corrupt one coefficient (negative control)")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        const duffing_format fmt = parse_format(format_name);
        if (coeffs->parsed()) {
            int n = order < 0 ? 20 : order;
            auto series = make_series(n);
            char* text = nullptr;
            check(duffing_report_coeffs(series.get(), n, full ? 1 : 0, fmt, &text));
            emit(out_path, OwnedString(text).get());
        } else if (freq->parsed()) {
            int n = order < 0 ? 2 : order;
            auto series = make_series(n);
            char* text = nullptr;
            int flagged = 0;
            check(duffing_report_freq(series.get(), g.c_str(), omega0.c_str(), methods.c_str(), n, digits, fmt, &text,
                                      &flagged));
            emit(out_path, OwnedString(text).get());
            if (flagged)
                std::cerr << "warning: variational optimisation flagged; see status column\n";
        } else if (b0->parsed()) {
            int n = order < 0 ? 20 : order;
            auto series = make_series(n);
            char* text = nullptr;
            check(duffing_report_b0(series.get(), n, digits, fmt, &text));
            emit(out_path, OwnedString(text).get());
        } else if (convergence->parsed()) {
            int n = order < 0 ? 20 : order;
            auto series = make_series(n);
            char* records = nullptr;
            char* fit = nullptr;
            int flagged = 0;
            check(duffing_report_convergence(series.get(), n, fit_last, digits, fmt, &records, &fit, &flagged));
            OwnedString records_owned(records);
            OwnedString fit_owned(fit);
            emit(out_path, records);
            if (fmt != DUFFING_FORMAT_JSON && std::string(fit) != "null") {
                std::string doc = std::string(fit) + '\n';
                if (fit_out.empty())
                    std::cerr << doc;
                else
                    emit(fit_out, doc.c_str());
            }
            if (flagged)
                std::cerr << "warning: some orders were flagged; see derivative_level column\n";
        } else if (envelope->parsed()) {
            std::vector<int> weak;
            std::vector<int> strong;
            try {
                weak = parse_orders(weak_list);
                strong = parse_orders(strong_list);
            } catch (const std::exception&) {
                std::cerr << "error: malformed order list\n";
                return exit_usage;
            }
            int needed = 0;
            for (int n : weak)
                needed = std::max(needed, n);
            if (needed > max_order) {
                std::cerr << "error: weak order above " << max_order << '\n';
                return exit_usage;
            }
            auto series = make_series(needed);
            char* csv = nullptr;
            check(duffing_report_envelope(series.get(), gmin.c_str(), gmax.c_str(), samples, weak.data(), weak.size(),
                                          strong.data(), strong.size(), omega0.c_str(), digits, &csv));
            emit(out_path, OwnedString(csv).get());
        } else if (selftest->parsed()) {
            char* report = nullptr;
            duffing_status status = duffing_selftest(inject_fault ? 1 : 0, &report);
            if (report)
                std::fputs(OwnedString(report).get(), stdout);
            if (status != DUFFING_OK && status != DUFFING_SELFTEST_FAILED)
                std::cerr << "error: " << duffing_last_error() << '\n';
            return static_cast<int>(status);
        }
    } catch (const Failure& f) {
        return f.code;
    }
    return 0;
}
