#include "kummersum.h"

#include <memory>
#include <new>
#include <string>

#include "core/bounds.hpp"
#include "core/errors.hpp"
#include "core/kummer.hpp"
#include "core/search.hpp"
#include "core/series.hpp"
#include "core/summation.hpp"

using namespace kummersum;

struct ks_series {
    std::shared_ptr<const Series> impl;
};
struct ks_sum_state {
    std::unique_ptr<SumState> impl;
};
struct ks_test_outcome {
    TestOutcome impl;
};
struct ks_search_report {
    SearchReport impl;
};

namespace {

thread_local std::string g_last_error;

ks_status set_error(ks_status code, const char* what) {
    g_last_error = what ? what : "";
    return code;
}

BracketMethod to_method(int m) {
    switch (m) {
        case 0: return BracketMethod::Integral;
        case 1: return BracketMethod::Morley;
        case 2: return BracketMethod::Nelsen;
        case 3: return BracketMethod::Boas;
    }
    throw PreconditionError("bracket method must be 0..3");
}

template <typename Fn>
ks_status guarded(Fn&& fn) {
    try {
        fn();
        return KS_OK;
    } catch (const Error& e) {
        return set_error(static_cast<ks_status>(static_cast<int>(e.code())), e.what());
    } catch (const std::bad_alloc&) {
        return set_error(KS_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return set_error(KS_ERR_INTERNAL, e.what());
    }
}

}  // namespace

extern "C" {

const char* ks_status_name(ks_status status) {
    switch (status) {
        case KS_OK: return "ok";
        case KS_ERR_INVALID_ARGUMENT: return "invalid argument";
        case KS_ERR_UNKNOWN_SERIES: return "unknown series";
        case KS_ERR_PARSE: return "parse error";
        case KS_ERR_NON_POSITIVE_TERM: return "non-positive term";
        case KS_ERR_INDEX_BEFORE_START: return "index before series start";
        case KS_ERR_MISSING_TAIL_INTEGRAL: return "missing tail integral";
        case KS_ERR_MISSING_DERIVATIVE: return "missing derivative";
        case KS_ERR_PRECONDITION: return "precondition violated";
        case KS_ERR_BUDGET_EXHAUSTED: return "budget exhausted";
        case KS_ERR_ZETA_OVERFLOW: return "zeta overflow";
        case KS_ERR_SHAPE_CHECK: return "shape check failed";
        case KS_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* ks_last_error(void) { return g_last_error.c_str(); }

/* ---- series ---- */

ks_status ks_series_open_catalog(const char* name, ks_series** out) {
    if (!name || !out) return set_error(KS_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        auto s = std::make_shared<const Series>(Series::catalog(name));
        *out = new ks_series{std::move(s)};
    });
}

ks_status ks_series_open_expression(const char* text, int64_t n0, ks_series** out) {
    if (!text || !out) return set_error(KS_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        auto s = std::make_shared<const Series>(Series::from_expression(text, n0));
        *out = new ks_series{std::move(s)};
    });
}

void ks_series_close(ks_series* series) { delete series; }

const char* ks_series_name(const ks_series* series) { return series->impl->name().c_str(); }

int64_t ks_series_first_index(const ks_series* series) { return series->impl->first_index(); }

int ks_series_ratio_monotone_flag(const ks_series* series) {
    switch (series->impl->ratio_monotone()) {
        case RatioMonotone::VerifiedIncreasing: return 1;
        case RatioMonotone::VerifiedNot: return 0;
        case RatioMonotone::Unknown: return -1;
    }
    return -1;
}

int ks_series_has_tail_integral(const ks_series* series) {
    return series->impl->has_tail_integral() ? 1 : 0;
}

int ks_series_has_derivative(const ks_series* series) {
    return series->impl->has_term_derivative() ? 1 : 0;
}

ks_status ks_series_term(const ks_series* series, int64_t n, double* out) {
    if (!series || !out) return set_error(KS_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = series->impl->term(n); });
}

ks_status ks_series_ratio(const ks_series* series, int64_t n, double* out) {
    if (!series || !out) return set_error(KS_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = series->impl->ratio(n); });
}

ks_status ks_series_scan_ratio_monotone(const ks_series* series, int64_t n_lo,
                                        int64_t n_hi, int64_t* violation_at) {
    if (!series || !violation_at) return set_error(KS_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        RatioProbe probe = series->impl->check_ratio_monotone(n_lo, n_hi);
        *violation_at = probe.increasing ? -1 : probe.violation_at;
    });
}

/* ---- summation ---- */

ks_status ks_partial_sum(const ks_series* series, int64_t upto, int64_t budget,
                         ks_sum_state** out) {
    if (!series || !out) return set_error(KS_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        std::int64_t b = budget > 0 ? budget : kDefaultTermBudget;
        auto state = std::make_unique<SumState>(partial_sum(series->impl, upto, b));
        *out = new ks_sum_state{std::move(state)};
    });
}

ks_status ks_sum_range(const ks_series* series, int64_t from, int64_t to, double* out) {
    if (!series || !out) return set_error(KS_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = sum_range(*series->impl, from, to); });
}

void ks_sum_state_close(ks_sum_state* state) { delete state; }

double ks_sum_state_value(const ks_sum_state* state) { return state->impl->value(); }
double ks_sum_state_compensation(const ks_sum_state* state) {
    return state->impl->compensation();
}
int64_t ks_sum_state_last_index(const ks_sum_state* state) { return state->impl->last_index(); }
int64_t ks_sum_state_terms_added(const ks_sum_state* state) {
    return state->impl->terms_added();
}

ks_status ks_extend_to_threshold(ks_sum_state* state, double threshold, int64_t budget) {
    if (!state) return set_error(KS_ERR_INVALID_ARGUMENT, "null argument");
    ks_status rc = KS_OK;
    ks_status guard_rc = guarded([&] {
        if (extend_to_threshold(*state->impl, threshold, budget) ==
            ExtendStatus::BudgetExhausted)
            rc = set_error(KS_ERR_BUDGET_EXHAUSTED,
                           "term budget exhausted before the threshold; progress retained");
    });
    return guard_rc != KS_OK ? guard_rc : rc;
}

ks_status ks_extend_to_index(ks_sum_state* state, int64_t n, int64_t budget) {
    if (!state) return set_error(KS_ERR_INVALID_ARGUMENT, "null argument");
    ks_status rc = KS_OK;
    ks_status guard_rc = guarded([&] {
        if (extend_to_index(*state->impl, n, budget) == ExtendStatus::BudgetExhausted)
            rc = set_error(KS_ERR_BUDGET_EXHAUSTED,
                           "term budget exhausted before the index; progress retained");
    });
    return guard_rc != KS_OK ? guard_rc : rc;
}

/* ---- zeta test ---- */

void ks_test_config_init(ks_test_config* config) {
    config->epsilon = 0.0;
    config->horizon = 1'000'000'000LL;
    config->trace = 1;
    config->decrease_tolerance = 0.0;
}

ks_status ks_seed_zeta(const ks_series* series, int64_t at, double epsilon, double* out) {
    if (!series || !out) return set_error(KS_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = seed_zeta(*series->impl, at, epsilon); });
}

ks_status ks_zeta_step(const ks_series* series, int64_t n, double zeta_n, double* out) {
    if (!series || !out) return set_error(KS_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = zeta_step(*series->impl, n, zeta_n); });
}

ks_status ks_run_test(const ks_series* series, int64_t at, const ks_test_config* config,
                      ks_test_outcome** out) {
    if (!series || !config || !out) return set_error(KS_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        TestConfig tc;
        tc.epsilon = config->epsilon;
        tc.horizon = config->horizon;
        tc.trace = config->trace == 0   ? TraceKeep::None
                   : config->trace == 2 ? TraceKeep::Full
                                        : TraceKeep::Boundary;
        tc.decrease_tolerance = config->decrease_tolerance;
        *out = new ks_test_outcome{run_test(*series->impl, at, tc)};
    });
}

void ks_test_outcome_close(ks_test_outcome* outcome) { delete outcome; }

int ks_test_outcome_accepted(const ks_test_outcome* o) { return o->impl.accepted() ? 1 : 0; }
int64_t ks_test_outcome_iterations(const ks_test_outcome* o) { return o->impl.iterations; }
int64_t ks_test_outcome_break_index(const ks_test_outcome* o) {
    return o->impl.break_index.value_or(-1);
}
double ks_test_outcome_seed_zeta(const ks_test_outcome* o) { return o->impl.seed_zeta; }
int ks_test_outcome_negative_hit(const ks_test_outcome* o) {
    return o->impl.negative_hit ? 1 : 0;
}
int ks_test_outcome_boundary_count(const ks_test_outcome* o) {
    return static_cast<int>(o->impl.boundary.size());
}

ks_status ks_test_outcome_boundary(const ks_test_outcome* o, int i, int64_t* index,
                                   double* zeta) {
    if (!o || !index || !zeta || i < 0 || i >= static_cast<int>(o->impl.boundary.size()))
        return set_error(KS_ERR_INVALID_ARGUMENT, "boundary index out of range");
    *index = o->impl.boundary[i].index;
    *zeta = o->impl.boundary[i].zeta;
    return KS_OK;
}

int64_t ks_test_outcome_trace_count(const ks_test_outcome* o) {
    return static_cast<int64_t>(o->impl.trace.size());
}

ks_status ks_test_outcome_trace(const ks_test_outcome* o, int64_t i, int64_t* index,
                                double* zeta) {
    if (!o || !index || !zeta || i < 0 || i >= static_cast<int64_t>(o->impl.trace.size()))
        return set_error(KS_ERR_INVALID_ARGUMENT, "trace index out of range");
    *index = o->impl.trace[i].index;
    *zeta = o->impl.trace[i].zeta;
    return KS_OK;
}

/* ---- search ---- */

void ks_search_config_init(ks_search_config* config) {
    config->epsilon = 0.0;
    config->modified = 0;
    config->m = 2;
    config->k = 10.0;
    config->refine_depth = 1;
    config->horizon = 1'000'000'000LL;
    config->total_budget = 1'000'000'000LL;
}

ks_status ks_search_run(const ks_series* series, int64_t start,
                        const ks_search_config* config, ks_step_fn callback, void* user,
                        ks_search_report** out) {
    if (!series || !config || !out) return set_error(KS_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        SearchConfig sc;
        sc.epsilon = config->epsilon;
        sc.mode = config->modified ? SearchMode::Modified : SearchMode::Plain;
        sc.m = config->m;
        sc.k = config->k;
        sc.refine_depth = config->refine_depth;
        sc.horizon = config->horizon;
        sc.total_budget = config->total_budget;
        SumState state = partial_sum(series->impl, start);
        StepCallback cb;
        if (callback)
            cb = [callback, user](const StepRecord& r) {
                callback(user, r.step_number, r.iterations_in_step, r.reached_index,
                         r.partial_sum, r.epsilon_in_force);
            };
        *out = new ks_search_report{run_search(std::move(state), sc, cb)};
    });
}

void ks_search_report_close(ks_search_report* report) { delete report; }

int ks_search_report_termination(const ks_search_report* r) {
    switch (r->impl.termination) {
        case Termination::AcceptedHypothesis: return 0;
        case Termination::CapReached: return 1;
        case Termination::BudgetExhausted: return 2;
    }
    return 2;
}

int64_t ks_search_report_step_count(const ks_search_report* r) {
    return static_cast<int64_t>(r->impl.records.size());
}

ks_status ks_search_report_step(const ks_search_report* r, int64_t i, int64_t* step,
                                int64_t* iterations, int64_t* n, double* s, double* epsilon) {
    if (!r || i < 0 || i >= static_cast<int64_t>(r->impl.records.size()))
        return set_error(KS_ERR_INVALID_ARGUMENT, "step index out of range");
    const StepRecord& rec = r->impl.records[i];
    if (step) *step = rec.step_number;
    if (iterations) *iterations = rec.iterations_in_step;
    if (n) *n = rec.reached_index;
    if (s) *s = rec.partial_sum;
    if (epsilon) *epsilon = rec.epsilon_in_force;
    return KS_OK;
}

int64_t ks_search_report_final_index(const ks_search_report* r) { return r->impl.final_index; }
double ks_search_report_final_sum(const ks_search_report* r) { return r->impl.final_sum; }
double ks_search_report_final_epsilon(const ks_search_report* r) {
    return r->impl.final_epsilon;
}

void ks_search_report_interval(const ks_search_report* r, double* lo, double* hi) {
    if (lo) *lo = r->impl.interval_lo;
    if (hi) *hi = r->impl.interval_hi;
}

/* ---- bounds ---- */

ks_status ks_remainder_bracket(const ks_series* series, int64_t n, int method,
                               ks_bracket* out) {
    if (!series || !out) return set_error(KS_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        Bracket b = remainder_bracket(*series->impl, n, to_method(method));
        *out = {b.lower, b.upper, b.at_index, method, 0};
    });
}

ks_status ks_estimate_sum(const ks_series* series, int64_t upto, int method,
                          ks_bracket* out) {
    if (!series || !out) return set_error(KS_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        Bracket b = estimate_sum(*series->impl, upto, to_method(method));
        *out = {b.lower, b.upper, b.at_index, method, 1};
    });
}

}  // extern "C"
