// Exercises the shared-library surface through the public C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <vector>

#include "kummersum.h"

TEST_CASE("catalog open, term, ratio, close") {
    ks_series* s = nullptr;
    REQUIRE(ks_series_open_catalog("logA", &s) == KS_OK);
    CHECK(ks_series_first_index(s) == 1);
    CHECK(std::strcmp(ks_series_name(s), "logA") == 0);
    CHECK(ks_series_ratio_monotone_flag(s) == 1);
    CHECK(ks_series_has_tail_integral(s) == 1);
    CHECK(ks_series_has_derivative(s) == 0);
    double a = 0.0;
    REQUIRE(ks_series_term(s, 1, &a) == KS_OK);
    CHECK(a == std::log(2.0));
    REQUIRE(ks_series_ratio(s, 1, &a) == KS_OK);
    CHECK(a == doctest::Approx(0.560353).epsilon(1e-6));
    CHECK(ks_series_term(s, 0, &a) == KS_ERR_INDEX_BEFORE_START);
    CHECK(std::strlen(ks_last_error()) > 0);
    ks_series_close(s);
}

TEST_CASE("error codes for bad inputs") {
    ks_series* s = nullptr;
    CHECK(ks_series_open_catalog("nosuch", &s) == KS_ERR_UNKNOWN_SERIES);
    CHECK(ks_series_open_expression("pow(n,)", 1, &s) == KS_ERR_PARSE);
    CHECK(ks_series_open_expression("sin(n)", 1, &s) == KS_ERR_PARSE);

    REQUIRE(ks_series_open_expression("log(n)", 1, &s) == KS_OK);
    double a = 0.0;
    CHECK(ks_series_term(s, 1, &a) == KS_ERR_NON_POSITIVE_TERM);
    CHECK(std::strstr(ks_last_error(), "n=1") != nullptr);
    ks_series_close(s);
}

TEST_CASE("partial sums and threshold extension") {
    ks_series* s = nullptr;
    REQUIRE(ks_series_open_catalog("logA", &s) == KS_OK);
    ks_sum_state* st = nullptr;
    REQUIRE(ks_partial_sum(s, 10000, 0, &st) == KS_OK);
    CHECK(std::abs(ks_sum_state_value(st) - 4.692955) < 1e-6);
    CHECK(ks_sum_state_last_index(st) == 10000);
    CHECK(ks_sum_state_terms_added(st) == 10000);

    double threshold = ks_sum_state_value(st) + 0.1;
    REQUIRE(ks_extend_to_threshold(st, threshold, 1000000) == KS_OK);
    CHECK(ks_sum_state_last_index(st) == 41363);

    // budget exhaustion keeps progress
    CHECK(ks_extend_to_threshold(st, ks_sum_state_value(st) + 1.0, 50) ==
          KS_ERR_BUDGET_EXHAUSTED);
    CHECK(ks_sum_state_last_index(st) == 41413);

    ks_sum_state_close(st);

    double range = 0.0;
    REQUIRE(ks_sum_range(s, 1, 1, &range) == KS_OK);
    CHECK(range == std::log(2.0));
    ks_series_close(s);
}

TEST_CASE("zeta test through the C API") {
    ks_series* s = nullptr;
    REQUIRE(ks_series_open_catalog("logA", &s) == KS_OK);

    double seed = 0.0;
    REQUIRE(ks_seed_zeta(s, 10000, 0.1, &seed) == KS_OK);
    CHECK(std::abs(seed - 10857.244172) < 1e-3);

    ks_test_config cfg;
    ks_test_config_init(&cfg);
    CHECK(cfg.horizon == 1000000000LL);
    cfg.epsilon = 0.1;
    cfg.horizon = 50000;

    ks_test_outcome* out = nullptr;
    REQUIRE(ks_run_test(s, 10000, &cfg, &out) == KS_OK);
    CHECK(ks_test_outcome_accepted(out) == 0);
    CHECK(ks_test_outcome_break_index(out) == 17804);
    CHECK(ks_test_outcome_iterations(out) == 7805);
    CHECK(ks_test_outcome_negative_hit(out) == 0);
    REQUIRE(ks_test_outcome_boundary_count(out) == 4);
    int64_t idx = 0;
    double z = 0.0;
    REQUIRE(ks_test_outcome_boundary(out, 2, &idx, &z) == KS_OK);
    CHECK(idx == 17804);
    CHECK(std::abs(z - 12736.509554) < 1e-3);
    CHECK(ks_test_outcome_boundary(out, 9, &idx, &z) == KS_ERR_INVALID_ARGUMENT);
    ks_test_outcome_close(out);

    cfg.trace = 2;
    REQUIRE(ks_run_test(s, 10000, &cfg, &out) == KS_OK);
    CHECK(ks_test_outcome_trace_count(out) == 7806);  // seed + iterations
    REQUIRE(ks_test_outcome_trace(out, 0, &idx, &z) == KS_OK);
    CHECK(idx == 10000);
    CHECK(z == seed);
    ks_test_outcome_close(out);
    ks_series_close(s);
}

namespace {
struct Collected {
    std::vector<int64_t> steps;
    std::vector<int64_t> ns;
};
void collect(void* user, int64_t step, int64_t, int64_t n, double, double) {
    auto* c = static_cast<Collected*>(user);
    c->steps.push_back(step);
    c->ns.push_back(n);
}
}  // namespace

TEST_CASE("search with streaming callback") {
    ks_series* s = nullptr;
    REQUIRE(ks_series_open_catalog("logA", &s) == KS_OK);

    ks_search_config cfg;
    ks_search_config_init(&cfg);
    CHECK(cfg.m == 2);
    CHECK(cfg.k == 10.0);
    cfg.epsilon = 0.01;
    cfg.total_budget = 1'000'000;

    Collected got;
    ks_search_report* rep = nullptr;
    REQUIRE(ks_search_run(s, 100000, &cfg, collect, &got, &rep) == KS_OK);
    int64_t count = ks_search_report_step_count(rep);
    REQUIRE(count == static_cast<int64_t>(got.steps.size()));
    for (int64_t i = 0; i < count; ++i) {
        int64_t step, iters, n;
        double sv, eps;
        REQUIRE(ks_search_report_step(rep, i, &step, &iters, &n, &sv, &eps) == KS_OK);
        CHECK(step == got.steps[i]);
        CHECK(n == got.ns[i]);
    }
    CHECK(ks_search_report_termination(rep) == 1);  // cap
    CHECK(ks_search_report_final_index(rep) == 1'000'000);
    double lo = 0.0, hi = 0.0;
    ks_search_report_interval(rep, &lo, &hi);
    CHECK(lo == ks_search_report_final_sum(rep));
    CHECK(hi == lo + ks_search_report_final_epsilon(rep));
    ks_search_report_close(rep);
    ks_series_close(s);
}

TEST_CASE("search acceptance through the C API") {
    ks_series* s = nullptr;
    REQUIRE(ks_series_open_catalog("telescope", &s) == KS_OK);
    ks_search_config cfg;
    ks_search_config_init(&cfg);
    cfg.epsilon = 0.2;
    cfg.horizon = 100000;
    ks_search_report* rep = nullptr;
    REQUIRE(ks_search_run(s, 9, &cfg, nullptr, nullptr, &rep) == KS_OK);
    CHECK(ks_search_report_termination(rep) == 0);
    CHECK(ks_search_report_step_count(rep) == 0);
    double lo = 0.0, hi = 0.0;
    ks_search_report_interval(rep, &lo, &hi);
    CHECK(lo <= 1.0);
    CHECK(1.0 <= hi);
    ks_search_report_close(rep);
    ks_series_close(s);
}

TEST_CASE("brackets through the C API") {
    ks_series* s = nullptr;
    REQUIRE(ks_series_open_catalog("invsq", &s) == KS_OK);
    ks_bracket b;
    REQUIRE(ks_remainder_bracket(s, 10, 0, &b) == KS_OK);
    CHECK(std::abs(b.lower - 1.0 / 11.0) < 1e-12);
    CHECK(std::abs(b.upper - 0.1) < 1e-12);
    CHECK(b.target == 0);
    REQUIRE(ks_estimate_sum(s, 10, 3, &b) == KS_OK);
    CHECK(b.target == 1);
    CHECK(b.lower <= 1.6449340668482264);
    CHECK(1.6449340668482264 <= b.upper);
    CHECK(ks_remainder_bracket(s, 10, 7, &b) == KS_ERR_PRECONDITION);
    ks_series_close(s);

    REQUIRE(ks_series_open_catalog("telescope", &s) == KS_OK);
    CHECK(ks_remainder_bracket(s, 10, 0, &b) == KS_ERR_MISSING_TAIL_INTEGRAL);
    ks_series_close(s);
}

TEST_CASE("expression series via the C API") {
    ks_series* s = nullptr;
    REQUIRE(ks_series_open_expression("2^(-n)", 0, &s) == KS_OK);
    CHECK(ks_series_first_index(s) == 0);
    CHECK(ks_series_ratio_monotone_flag(s) == -1);
    ks_test_config cfg;
    ks_test_config_init(&cfg);
    cfg.epsilon = 2.0;
    cfg.horizon = 400;
    ks_test_outcome* out = nullptr;
    REQUIRE(ks_run_test(s, 0, &cfg, &out) == KS_OK);
    CHECK(ks_test_outcome_accepted(out) == 1);
    ks_test_outcome_close(out);
    ks_series_close(s);
}
