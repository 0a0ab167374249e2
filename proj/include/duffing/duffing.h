/*
 * C interface to the Duffing frequency library.
 *
 * Every function returns a duffing_status. On failure the message is
 * available from duffing_last_error() until the next call on the same
 * thread. Strings returned through char** are allocated by the library and
 * released with duffing_string_free(). Real-valued inputs are decimal or
 * "num/den" strings and are converted exactly.
 */
#ifndef DUFFING_H
#define DUFFING_H

#include <stddef.h>

#if defined(_WIN32)
#  define DUFFING_API __declspec(dllexport)
#elif defined(__GNUC__)
#  define DUFFING_API __attribute__((visibility("default")))
#else
#  define DUFFING_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum duffing_status {
    DUFFING_OK = 0,
    DUFFING_USAGE_ERROR = 1,
    DUFFING_NUMERICAL_ERROR = 2,
    DUFFING_SELFTEST_FAILED = 3
} duffing_status;

typedef enum duffing_format {
    DUFFING_FORMAT_CSV = 0,
    DUFFING_FORMAT_JSON = 1,
    DUFFING_FORMAT_PRETTY = 2
} duffing_format;

/* Weak-coupling series w_n, q_n(xi) through a fixed order; immutable. */
typedef struct duffing_series duffing_series;

DUFFING_API const char* duffing_version(void);
DUFFING_API const char* duffing_last_error(void);
DUFFING_API void duffing_string_free(char* s);

DUFFING_API duffing_status duffing_series_create(int order, duffing_series** out);
DUFFING_API duffing_status duffing_series_from_json(const char* json, duffing_series** out);
DUFFING_API void duffing_series_destroy(duffing_series* series);
DUFFING_API int duffing_series_order(const duffing_series* series);
/* w_n as "num/den". */
DUFFING_API duffing_status duffing_series_omega_coeff(const duffing_series* series, int n, char** out);
DUFFING_API duffing_status duffing_series_to_json(const duffing_series* series, int include_solution,
                                                  char** out);

DUFFING_API duffing_status duffing_omega_exact(const char* g, const char* omega0, unsigned digits, char** out);
DUFFING_API duffing_status duffing_omega_weak(const duffing_series* series, int order, const char* g,
                                              const char* omega0, unsigned digits, char** out);
DUFFING_API duffing_status duffing_omega_oracle(const char* g, const char* omega0, const char* tol,
                                                unsigned digits, char** out);
/* Any of value, omega_opt, level may be NULL. */
DUFFING_API duffing_status duffing_omega_variational(const duffing_series* series, int order, const char* g,
                                                     const char* omega0, unsigned digits, char** value,
                                                     char** omega_opt, int* level);
DUFFING_API duffing_status duffing_b0_exact(unsigned digits, char** out);
DUFFING_API duffing_status duffing_b0_variational(const duffing_series* series, int order, unsigned digits,
                                                  char** value, char** omega0_opt, int* level);

DUFFING_API duffing_status duffing_report_coeffs(const duffing_series* series, int order, int full,
                                                 duffing_format format, char** out);
/* methods: comma-separated subset of exact,weak,variational,oracle. *flagged
 * is set when a variational row could not be optimised cleanly. */
DUFFING_API duffing_status duffing_report_freq(const duffing_series* series, const char* g, const char* omega0,
                                               const char* methods, int order, unsigned digits,
                                               duffing_format format, char** out, int* flagged);
DUFFING_API duffing_status duffing_report_b0(const duffing_series* series, int order, unsigned digits,
                                             duffing_format format, char** out);
/* fit_json receives "null" when fewer than two orders fall in the window. */
DUFFING_API duffing_status duffing_report_convergence(const duffing_series* series, int max_order,
                                                      int fit_last, unsigned digits, duffing_format format,
                                                      char** records, char** fit_json, int* flagged);
DUFFING_API duffing_status duffing_report_envelope(const duffing_series* series, const char* gmin,
                                                   const char* gmax, int samples, const int* weak_orders,
                                                   size_t n_weak, const int* strong_orders, size_t n_strong,
                                                   const char* omega0, unsigned digits, char** csv);

/* Returns DUFFING_SELFTEST_FAILED if any check fails; report lists each check. */
DUFFING_API duffing_status duffing_selftest(int inject_fault, char** report);

#ifdef __cplusplus
}
#endif

#endif /* DUFFING_H */
