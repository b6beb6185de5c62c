#pragma once

#include <cmath>
#include <cstdint>
#include <memory>

#include "core/series.hpp"

namespace kummersum {

// Neumaier's variant of compensated summation: the carry also absorbs the
// error when the incoming term dominates the running sum.
struct NeumaierAccumulator {
    double sum = 0.0;
    double compensation = 0.0;

    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            compensation += (sum - t) + x;
        else
            compensation += (x - t) + sum;
        sum = t;
    }

    double value() const { return sum + compensation; }
};

constexpr std::int64_t kDefaultTermBudget = 20'000'000'000LL;  // 2e10

// Resumable compensated partial sum S_N, positioned at last_index.
// The accumulation path is canonical: increasing n, one term at a time,
// so resumed and from-scratch sums are bitwise identical.
class SumState {
public:
    SumState(std::shared_ptr<const Series> series, std::int64_t position)
        : series_(std::move(series)), last_index_(position) {}

    const Series& series() const { return *series_; }
    std::shared_ptr<const Series> series_ptr() const { return series_; }
    std::int64_t last_index() const { return last_index_; }
    std::int64_t terms_added() const { return terms_added_; }
    double value() const { return acc_.value(); }
    double compensation() const { return acc_.compensation; }

    void add_term(double a) {
        acc_.add(a);
        ++last_index_;
        ++terms_added_;
    }

private:
    std::shared_ptr<const Series> series_;
    NeumaierAccumulator acc_;
    std::int64_t last_index_ = 0;
    std::int64_t terms_added_ = 0;
};

enum class ExtendStatus { Reached, BudgetExhausted };

// S_N = sum of a_{n0..N}. Throws BudgetExceeded when N - n0 exceeds budget.
SumState partial_sum(std::shared_ptr<const Series> series, std::int64_t upto,
                     std::int64_t budget = kDefaultTermBudget);

// Appends terms until value() >= threshold (the returned index is the minimal
// such m) or until `budget` more terms were added; progress stays in `state`.
ExtendStatus extend_to_threshold(SumState& state, double threshold, std::int64_t budget);

// Appends terms up to index `n` exactly.
ExtendStatus extend_to_index(SumState& state, std::int64_t n, std::int64_t budget);

// Compensated sum of a_from..a_to.
double sum_range(const Series& series, std::int64_t from, std::int64_t to);

}  // namespace kummersum
