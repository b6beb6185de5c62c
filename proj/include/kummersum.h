/* kummersum: positive-series summation with zeta-sequence remainder tests.
 *
 * C interface to the shared library. All handles are opaque and must be
 * released with the matching *_close function. Every fallible call returns a
 * ks_status; on failure ks_last_error() gives a human-readable detail string
 * (thread-local, valid until the next failing call on the same thread).
 */
#ifndef KUMMERSUM_H
#define KUMMERSUM_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ks_status {
    KS_OK = 0,
    KS_ERR_INVALID_ARGUMENT = 1,
    KS_ERR_UNKNOWN_SERIES = 2,
    KS_ERR_PARSE = 3,
    KS_ERR_NON_POSITIVE_TERM = 4,
    KS_ERR_INDEX_BEFORE_START = 5,
    KS_ERR_MISSING_TAIL_INTEGRAL = 6,
    KS_ERR_MISSING_DERIVATIVE = 7,
    KS_ERR_PRECONDITION = 8,
    KS_ERR_BUDGET_EXHAUSTED = 9,
    KS_ERR_ZETA_OVERFLOW = 10,
    KS_ERR_SHAPE_CHECK = 11,
    KS_ERR_INTERNAL = 12
} ks_status;

typedef struct ks_series ks_series;
typedef struct ks_sum_state ks_sum_state;
typedef struct ks_test_outcome ks_test_outcome;
typedef struct ks_search_report ks_search_report;

const char* ks_status_name(ks_status status);
const char* ks_last_error(void);

/* ---- series ---------------------------------------------------------- */

/* Catalog names: logA, logB, boasC, loglogD, invsq, telescope, geom(r). */
ks_status ks_series_open_catalog(const char* name, ks_series** out);
/* Term expression in the variable n (see the CLI docs for the grammar). */
ks_status ks_series_open_expression(const char* text, int64_t n0, ks_series** out);
void ks_series_close(ks_series* series);

const char* ks_series_name(const ks_series* series);
int64_t ks_series_first_index(const ks_series* series);
/* 1 = verified increasing, 0 = verified not, -1 = unknown. */
int ks_series_ratio_monotone_flag(const ks_series* series);
int ks_series_has_tail_integral(const ks_series* series);
int ks_series_has_derivative(const ks_series* series);

ks_status ks_series_term(const ks_series* series, int64_t n, double* out);
/* b_n = a_{n+1}/a_n */
ks_status ks_series_ratio(const ks_series* series, int64_t n, double* out);
/* Scans j in [n_lo, n_hi); *violation_at = first j with b_{j+1} <= b_j, or -1. */
ks_status ks_series_scan_ratio_monotone(const ks_series* series, int64_t n_lo,
                                        int64_t n_hi, int64_t* violation_at);

/* ---- compensated summation ------------------------------------------- */

/* S_N = a_{n0} + ... + a_N. budget <= 0 selects the default (2e10 terms). */
ks_status ks_partial_sum(const ks_series* series, int64_t upto, int64_t budget,
                         ks_sum_state** out);
ks_status ks_sum_range(const ks_series* series, int64_t from, int64_t to, double* out);
void ks_sum_state_close(ks_sum_state* state);

double ks_sum_state_value(const ks_sum_state* state);
double ks_sum_state_compensation(const ks_sum_state* state);
int64_t ks_sum_state_last_index(const ks_sum_state* state);
int64_t ks_sum_state_terms_added(const ks_sum_state* state);

/* Extends until value >= threshold (minimal crossing index) or `budget` more
 * terms were added; KS_ERR_BUDGET_EXHAUSTED keeps the partial progress. */
ks_status ks_extend_to_threshold(ks_sum_state* state, double threshold, int64_t budget);
ks_status ks_extend_to_index(ks_sum_state* state, int64_t n, int64_t budget);

/* ---- zeta test -------------------------------------------------------- */

typedef struct ks_test_config {
    double epsilon;
    int64_t horizon;   /* zeta values inspected, seed included (default 1e9) */
    int trace;         /* 0 none, 1 boundary (last 4), 2 full */
    double decrease_tolerance;
} ks_test_config;

void ks_test_config_init(ks_test_config* config);

ks_status ks_seed_zeta(const ks_series* series, int64_t at, double epsilon, double* out);
ks_status ks_zeta_step(const ks_series* series, int64_t n, double zeta_n, double* out);
ks_status ks_run_test(const ks_series* series, int64_t at, const ks_test_config* config,
                      ks_test_outcome** out);
void ks_test_outcome_close(ks_test_outcome* outcome);

/* 1 = accepted at horizon, 0 = rejected */
int ks_test_outcome_accepted(const ks_test_outcome* outcome);
int64_t ks_test_outcome_iterations(const ks_test_outcome* outcome);
/* Peak index before the first decrease; -1 when accepted. */
int64_t ks_test_outcome_break_index(const ks_test_outcome* outcome);
double ks_test_outcome_seed_zeta(const ks_test_outcome* outcome);
int ks_test_outcome_negative_hit(const ks_test_outcome* outcome);
int ks_test_outcome_boundary_count(const ks_test_outcome* outcome);
ks_status ks_test_outcome_boundary(const ks_test_outcome* outcome, int i,
                                   int64_t* index, double* zeta);
int64_t ks_test_outcome_trace_count(const ks_test_outcome* outcome);
ks_status ks_test_outcome_trace(const ks_test_outcome* outcome, int64_t i,
                                int64_t* index, double* zeta);

/* ---- step-forward search ---------------------------------------------- */

typedef struct ks_search_config {
    double epsilon;
    int modified;          /* 0 plain, 1 modified */
    int64_t m;             /* interrupt window (modified), default 2 */
    double k;              /* refinement divisor (modified), default 10 */
    int64_t refine_depth;  /* total refinements allowed, default 1 */
    int64_t horizon;       /* per-test inspection cap, default 1e9 */
    int64_t total_budget;  /* cap on the highest index touched, default 1e9 */
} ks_search_config;

void ks_search_config_init(ks_search_config* config);

/* Streaming callback: fired once per completed step, in order. */
typedef void (*ks_step_fn)(void* user, int64_t step, int64_t iterations, int64_t n,
                           double s, double epsilon);

/* Sums a_{n0..start} first, then runs the search from there. */
ks_status ks_search_run(const ks_series* series, int64_t start,
                        const ks_search_config* config, ks_step_fn callback, void* user,
                        ks_search_report** out);
void ks_search_report_close(ks_search_report* report);

/* 0 accepted-hypothesis, 1 cap-reached, 2 budget-exhausted */
int ks_search_report_termination(const ks_search_report* report);
int64_t ks_search_report_step_count(const ks_search_report* report);
ks_status ks_search_report_step(const ks_search_report* report, int64_t i, int64_t* step,
                                int64_t* iterations, int64_t* n, double* s, double* epsilon);
int64_t ks_search_report_final_index(const ks_search_report* report);
double ks_search_report_final_sum(const ks_search_report* report);
double ks_search_report_final_epsilon(const ks_search_report* report);
void ks_search_report_interval(const ks_search_report* report, double* lo, double* hi);

/* ---- remainder brackets ------------------------------------------------ */

/* method: 0 integral, 1 morley, 2 nelsen, 3 boas; target: 0 remainder, 1 sum */
typedef struct ks_bracket {
    double lower;
    double upper;
    int64_t at_index;
    int method;
    int target;
} ks_bracket;

ks_status ks_remainder_bracket(const ks_series* series, int64_t n, int method,
                               ks_bracket* out);
ks_status ks_estimate_sum(const ks_series* series, int64_t upto, int method,
                          ks_bracket* out);

#ifdef __cplusplus
}
#endif

#endif /* KUMMERSUM_H */
