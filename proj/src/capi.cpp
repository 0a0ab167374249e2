#include "duffing/duffing.h"

#include "duffing/exact_freq.hpp"
#include "duffing/lindstedt.hpp"
#include "duffing/reports.hpp"
#include "duffing/vpt.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>

struct duffing_series {
    duffing::WeakSeries series;
};

namespace {

thread_local std::string last_error;

char* duplicate(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void assign(char** out, const std::string& s)
{
    if (out)
        *out = duplicate(s);
}

template <class Body>
duffing_status guarded(Body&& body)
{
    last_error.clear();
    try {
        return body();
    } catch (const std::invalid_argument& e) {
        last_error = e.what();
        return DUFFING_USAGE_ERROR;
    } catch (const std::domain_error& e) {
        last_error = e.what();
        return DUFFING_USAGE_ERROR;
    } catch (const std::out_of_range& e) {
        last_error = e.what();
        return DUFFING_USAGE_ERROR;
    } catch (const std::exception& e) {
        last_error = e.what();
        return DUFFING_NUMERICAL_ERROR;
    } catch (...) {
        last_error = "unknown error";
        return DUFFING_NUMERICAL_ERROR;
    }
}

const duffing::WeakSeries& unwrap(const duffing_series* s)
{
    if (!s)
        throw std::invalid_argument("null series handle");
    return s->series;
}

std::string text(const char* s, const char* what)
{
    if (!s)
        throw std::invalid_argument(std::string("missing ") + what);
    return s;
}

duffing::OutputFormat to_format(duffing_format f)
{
    switch (f) {
    case DUFFING_FORMAT_CSV:
        return duffing::OutputFormat::csv;
    case DUFFING_FORMAT_JSON:
        return duffing::OutputFormat::json;
    case DUFFING_FORMAT_PRETTY:
        return duffing::OutputFormat::pretty;
    }
    throw std::invalid_argument("unknown output format");
}

void check_digits(unsigned digits)
{
    if (digits < duffing::min_report_digits)
        throw std::invalid_argument("digits must be at least " + std::to_string(duffing::min_report_digits));
}

} // namespace

extern "C" {

const char* duffing_version(void) { return "1.0.0"; }

const char* duffing_last_error(void) { return last_error.c_str(); }

void duffing_string_free(char* s) { std::free(s); }

duffing_status duffing_series_create(int order, duffing_series** out)
{
    return guarded([&] {
        if (!out)
            throw std::invalid_argument("null output handle");
        auto* handle = new duffing_series{duffing::weak_series(order)};
        *out = handle;
        return DUFFING_OK;
    });
}

duffing_status duffing_series_from_json(const char* json, duffing_series** out)
{
    return guarded([&] {
        if (!out)
            throw std::invalid_argument("null output handle");
        duffing::WeakSeries series;
        try {
            series = duffing::series_from_json(text(json, "JSON text"));
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument(e.what());
        }
        if (series.omega_coeffs.empty())
            throw std::invalid_argument("series JSON is empty");
        *out = new duffing_series{std::move(series)};
        return DUFFING_OK;
    });
}

void duffing_series_destroy(duffing_series* series) { delete series; }

int duffing_series_order(const duffing_series* series) { return series ? series->series.order() : -1; }

duffing_status duffing_series_omega_coeff(const duffing_series* series, int n, char** out)
{
    return guarded([&] {
        const auto& s = unwrap(series);
        if (n < 0 || n > s.order())
            throw std::out_of_range("coefficient index outside the series");
        assign(out, duffing::to_string(s.omega_coeffs[n]));
        return DUFFING_OK;
    });
}

duffing_status duffing_series_to_json(const duffing_series* series, int include_solution, char** out)
{
    return guarded([&] {
        assign(out, duffing::series_to_json(unwrap(series), include_solution != 0));
        return DUFFING_OK;
    });
}

duffing_status duffing_omega_exact(const char* g, const char* omega0, unsigned digits, char** out)
{
    return guarded([&] {
        check_digits(digits);
        duffing::WorkingPrecision p(digits + 10);
        auto r = duffing::omega_exact(duffing::parse_bigreal(text(g, "g")),
                                      duffing::parse_bigreal(text(omega0, "omega0")));
        assign(out, duffing::format(r.omega, digits));
        return DUFFING_OK;
    });
}

duffing_status duffing_omega_weak(const duffing_series* series, int order, const char* g, const char* omega0,
                                  unsigned digits, char** out)
{
    return guarded([&] {
        check_digits(digits);
        duffing::WorkingPrecision p(digits + 10);
        auto v = duffing::frequency_partial_sum(unwrap(series), order, duffing::parse_bigreal(text(g, "g")),
                                                duffing::parse_bigreal(text(omega0, "omega0")));
        assign(out, duffing::format(v, digits));
        return DUFFING_OK;
    });
}

duffing_status duffing_omega_oracle(const char* g, const char* omega0, const char* tol, unsigned digits,
                                    char** out)
{
    return guarded([&] {
        check_digits(digits);
        duffing::WorkingPrecision p(digits + 10);
        auto r = duffing::ode_period_oracle(duffing::parse_bigreal(text(g, "g")),
                                            duffing::parse_bigreal(text(omega0, "omega0")),
                                            duffing::parse_bigreal(text(tol, "tolerance")));
        assign(out, duffing::format(r.omega, digits));
        return DUFFING_OK;
    });
}

duffing_status duffing_omega_variational(const duffing_series* series, int order, const char* g,
                                         const char* omega0, unsigned digits, char** value, char** omega_opt,
                                         int* level)
{
    return guarded([&] {
        check_digits(digits);
        duffing::WorkingPrecision p(digits + 10);
        auto r = duffing::variational_frequency(unwrap(series), order, duffing::parse_bigreal(text(g, "g")),
                                                duffing::parse_bigreal(text(omega0, "omega0")));
        assign(value, duffing::format(r.value, digits));
        assign(omega_opt, duffing::format(r.omega_opt, digits));
        if (level)
            *level = r.derivative_level;
        return DUFFING_OK;
    });
}

duffing_status duffing_b0_exact(unsigned digits, char** out)
{
    return guarded([&] {
        check_digits(digits);
        duffing::WorkingPrecision p(digits + 10);
        assign(out, duffing::format(duffing::strong_coupling_b0(), digits));
        return DUFFING_OK;
    });
}

duffing_status duffing_b0_variational(const duffing_series* series, int order, unsigned digits, char** value,
                                      char** omega0_opt, int* level)
{
    return guarded([&] {
        check_digits(digits);
        const auto& s = unwrap(series);
        if (order < 1 || order > s.order())
            throw std::invalid_argument("order outside [1, series order]");
        const unsigned work = std::max(digits + 10, duffing::precision_for_order(order));
        duffing::WorkingPrecision p(work);
        std::optional<duffing::BigReal> prev;
        duffing::VariationalRecord r;
        for (int n = 1; n <= order; ++n) {
            r = duffing::optimize_b0(s, n, prev, work);
            prev = r.omega_opt;
        }
        assign(value, duffing::format(r.value, digits));
        assign(omega0_opt, duffing::format(r.omega_opt, digits));
        if (level)
            *level = r.derivative_level;
        return DUFFING_OK;
    });
}

duffing_status duffing_report_coeffs(const duffing_series* series, int order, int full, duffing_format format,
                                     char** out)
{
    return guarded([&] {
        assign(out, duffing::report_coeffs(unwrap(series), order, full != 0, to_format(format)));
        return DUFFING_OK;
    });
}

duffing_status duffing_report_freq(const duffing_series* series, const char* g, const char* omega0,
                                   const char* methods, int order, unsigned digits, duffing_format format,
                                   char** out, int* flagged)
{
    return guarded([&] {
        auto r = duffing::report_freq(unwrap(series), text(g, "g"), text(omega0, "omega0"),
                                      text(methods, "methods"), order, digits, to_format(format));
        assign(out, r.text);
        if (flagged)
            *flagged = r.flagged ? 1 : 0;
        return DUFFING_OK;
    });
}

duffing_status duffing_report_b0(const duffing_series* series, int order, unsigned digits, duffing_format format,
                                 char** out)
{
    return guarded([&] {
        assign(out, duffing::report_b0(unwrap(series), order, digits, to_format(format)));
        return DUFFING_OK;
    });
}

duffing_status duffing_report_convergence(const duffing_series* series, int max_order, int fit_last,
                                          unsigned digits, duffing_format format, char** records,
                                          char** fit_json, int* flagged)
{
    return guarded([&] {
        auto r = duffing::report_convergence(unwrap(series), max_order, fit_last, digits, to_format(format));
        assign(records, r.records);
        assign(fit_json, r.fit_json);
        if (flagged)
            *flagged = r.flagged ? 1 : 0;
        return DUFFING_OK;
    });
}

duffing_status duffing_report_envelope(const duffing_series* series, const char* gmin, const char* gmax,
                                       int samples, const int* weak_orders, size_t n_weak,
                                       const int* strong_orders, size_t n_strong, const char* omega0,
                                       unsigned digits, char** csv)
{
    return guarded([&] {
        if ((n_weak && !weak_orders) || (n_strong && !strong_orders))
            throw std::invalid_argument("null order list");
        std::vector<int> weak(weak_orders, weak_orders + n_weak);
        std::vector<int> strong(strong_orders, strong_orders + n_strong);
        assign(csv, duffing::report_envelope(unwrap(series), text(gmin, "gmin"), text(gmax, "gmax"), samples, weak,
                                             strong, text(omega0, "omega0"), digits));
        return DUFFING_OK;
    });
}

duffing_status duffing_selftest(int inject_fault, char** report)
{
    return guarded([&] {
        auto r = duffing::run_selftest(inject_fault != 0);
        assign(report, r.report);
        return r.passed ? DUFFING_OK : DUFFING_SELFTEST_FAILED;
    });
}

} // extern "C"
