#include "core/search.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace kummersum {

namespace {

void validate(const SearchConfig& cfg, const SumState& start) {
    if (!(cfg.epsilon > 0.0)) throw PreconditionError("search needs epsilon > 0");
    if (cfg.mode == SearchMode::Modified) {
        if (cfg.m < 2) throw PreconditionError("modified search needs M >= 2");
        if (!(cfg.k > 1.0)) throw PreconditionError("modified search needs K > 1");
        if (cfg.refine_depth < 1) throw PreconditionError("modified search needs refine_depth >= 1");
    }
    if (cfg.horizon < 2) throw PreconditionError("search needs a per-test horizon >= 2");
    if (cfg.total_budget <= start.last_index())
        throw PreconditionError("total_budget must exceed the start index");
}

}  // namespace

SearchReport run_search(SumState state, const SearchConfig& cfg, const StepCallback& on_step) {
    validate(cfg, state);
    const Series& series = state.series();
    const std::int64_t cap = cfg.total_budget;

    SearchReport report;
    double eps = cfg.epsilon;
    std::int64_t depth_left = cfg.mode == SearchMode::Modified ? cfg.refine_depth : 0;
    std::int64_t step = 0;
    std::int64_t last_test_iterations = 0;
    // Crossing targets live on the nominal grid S_start + sum of epsilons, not
    // on the achieved sums; this keeps a refined run's crossings aligned with
    // the plain run's wherever the grids coincide (overshoot does not compound).
    double target = state.value();

    auto finish = [&](Termination t) {
        report.termination = t;
        report.final_index = state.last_index();
        report.final_sum = state.value();
        report.final_epsilon = eps;
        report.interval_lo = report.final_sum;
        report.interval_hi = report.final_sum + eps;
        return report;
    };

    auto emit = [&](const StepRecord& rec) {
        report.records.push_back(rec);
        if (on_step) on_step(rec);
    };

    // Terminal bookkeeping when the index cap cuts a scan or an extension:
    // advance the sum to the cap so the reported S is the cap-index partial sum.
    auto cap_out = [&]() {
        if (state.last_index() < cap)
            extend_to_index(state, cap, cap - state.last_index());
        if (report.records.empty() || report.records.back().reached_index != state.last_index()) {
            StepRecord rec{step + 1, last_test_iterations, state.last_index(), state.value(), eps};
            emit(rec);
        }
        return finish(Termination::CapReached);
    };

    while (true) {
        const std::int64_t at = state.last_index();
        if (at >= cap) return cap_out();

        // Bound the scan by the per-test horizon, the index cap, and (while
        // refinements remain) the interrupt window M.
        const std::int64_t h_cap = cap - at + 1;
        const std::int64_t h_m = depth_left > 0 ? cfg.m : cfg.horizon;
        TestConfig tc;
        tc.epsilon = eps;
        tc.horizon = std::min({cfg.horizon, h_cap, h_m});
        tc.trace = TraceKeep::None;

        TestOutcome outcome = run_test(series, at, tc);
        last_test_iterations = outcome.iterations;

        if (outcome.verdict == Verdict::AcceptedAtHorizon) {
            if (tc.horizon == cfg.horizon)
                return finish(Termination::AcceptedHypothesis);
            if (h_cap <= h_m)  // the cap truncated the scan: inconclusive
                return cap_out();
            // The interrupt window: discard this test and refine epsilon.
            eps /= cfg.k;
            --depth_left;
            continue;
        }

        // Rejected: the remainder at `at` is >= eps, so push the sum up by eps.
        target += eps;
        if (target > state.value()) {
            ExtendStatus st = extend_to_threshold(state, target, cap - state.last_index());
            if (st == ExtendStatus::BudgetExhausted) {
                if (state.last_index() >= cap) return cap_out();
                return finish(Termination::BudgetExhausted);
            }
        }
        // else: a previous overshoot already crossed this grid point (only
        // possible when eps is not larger than a single term).
        ++step;
        StepRecord rec{step, outcome.iterations, state.last_index(), state.value(), eps};
        emit(rec);
    }
}

}  // namespace kummersum
