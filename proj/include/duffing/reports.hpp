#pragma once

// Text renderings of the pipeline stages (CSV, JSON, aligned tables) and the
// embedded self-test. These back the C API report functions and the CLI.

#include "duffing/lindstedt.hpp"

#include <string>
#include <vector>

namespace duffing {

enum class OutputFormat { csv, json, pretty };

/// Minimum decimal digits accepted by any report.
inline constexpr unsigned min_report_digits = 15;

std::string report_coeffs(const WeakSeries& series, int N, bool full, OutputFormat output);

struct FreqReport {
    std::string text;
    bool flagged = false;
};

/// methods: comma-separated subset of exact, weak, variational, oracle.
FreqReport report_freq(const WeakSeries& series, const std::string& g, const std::string& omega0,
                       const std::string& methods, int N, unsigned digits, OutputFormat output);

std::string report_b0(const WeakSeries& series, int N, unsigned digits, OutputFormat output);

struct ConvergenceReport {
    std::string records;
    std::string fit_json; // "null" without a fit
    bool flagged = false;
};

ConvergenceReport report_convergence(const WeakSeries& series, int maxN, int fit_last, unsigned digits,
                                     OutputFormat output);

std::string report_envelope(const WeakSeries& series, const std::string& gmin, const std::string& gmax,
                            int samples, const std::vector<int>& weak_orders,
                            const std::vector<int>& strong_orders, const std::string& omega0, unsigned digits);

struct SelfTestResult {
    std::string report;
    bool passed = false;
};

/// inject_fault corrupts one computed weak coefficient before the checks run.
SelfTestResult run_selftest(bool inject_fault);

} // namespace duffing
