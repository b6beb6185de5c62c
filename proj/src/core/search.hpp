#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "core/kummer.hpp"
#include "core/summation.hpp"

namespace kummersum {

enum class SearchMode { Plain, Modified };
enum class Termination { AcceptedHypothesis, CapReached, BudgetExhausted };

struct SearchConfig {
    double epsilon = 0.0;
    SearchMode mode = SearchMode::Plain;
    std::int64_t m = 2;            // modified only: interrupt window
    double k = 10.0;               // modified only: refinement divisor
    std::int64_t refine_depth = 1; // modified only: total refinements allowed
    std::int64_t horizon = 1'000'000'000LL;      // per-test inspection cap
    std::int64_t total_budget = 1'000'000'000LL; // cap on the highest index touched
};

struct StepRecord {
    std::int64_t step_number = 0;
    std::int64_t iterations_in_step = 0;  // the rejecting test's iterations
    std::int64_t reached_index = 0;
    double partial_sum = 0.0;
    double epsilon_in_force = 0.0;
};

struct SearchReport {
    std::vector<StepRecord> records;
    Termination termination = Termination::AcceptedHypothesis;
    std::int64_t final_index = 0;
    double final_sum = 0.0;
    double final_epsilon = 0.0;
    double interval_lo = 0.0;  // = final_sum
    double interval_hi = 0.0;  // = final_sum + final_epsilon (untrusted unless accepted)
};

using StepCallback = std::function<void(const StepRecord&)>;

// Alternates hypothesis tests with threshold-crossing extensions, starting
// from `start` (consumed). Each completed crossing appends one StepRecord and
// fires the callback; a run truncated by the index cap appends a terminal
// record positioned at the cap. Plain mode never refines; modified mode
// interrupts any test that has not rejected within m-1 iterations, divides
// epsilon by k, and resumes at the same index (at most refine_depth times).
SearchReport run_search(SumState start, const SearchConfig& config,
                        const StepCallback& on_step = {});

}  // namespace kummersum
