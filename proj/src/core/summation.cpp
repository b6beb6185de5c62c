#include "core/summation.hpp"

#include "core/errors.hpp"

namespace kummersum {

SumState partial_sum(std::shared_ptr<const Series> series, std::int64_t upto,
                     std::int64_t budget) {
    const Series& s = *series;
    if (upto < s.first_index())
        throw IndexBeforeStartError(upto, s.first_index());
    if (upto - s.first_index() >= budget)
        throw BudgetExceededError("partial_sum to N=" + std::to_string(upto) +
                                  " exceeds the term budget " + std::to_string(budget));
    SumState state(std::move(series), s.first_index() - 1);
    for (std::int64_t n = s.first_index(); n <= upto; ++n)
        state.add_term(s.term(n));
    return state;
}

ExtendStatus extend_to_threshold(SumState& state, double threshold, std::int64_t budget) {
    if (!(threshold > state.value()))
        throw PreconditionError("extend_to_threshold needs threshold > current value");
    if (budget < 1)
        throw PreconditionError("extend_to_threshold needs budget >= 1");
    const Series& s = state.series();
    std::int64_t added = 0;
    while (state.value() < threshold) {
        if (added == budget) return ExtendStatus::BudgetExhausted;
        state.add_term(s.term(state.last_index() + 1));
        ++added;
    }
    return ExtendStatus::Reached;
}

ExtendStatus extend_to_index(SumState& state, std::int64_t n, std::int64_t budget) {
    const Series& s = state.series();
    std::int64_t added = 0;
    while (state.last_index() < n) {
        if (added == budget) return ExtendStatus::BudgetExhausted;
        state.add_term(s.term(state.last_index() + 1));
        ++added;
    }
    return ExtendStatus::Reached;
}

double sum_range(const Series& series, std::int64_t from, std::int64_t to) {
    if (from < series.first_index())
        throw IndexBeforeStartError(from, series.first_index());
    if (to < from) throw PreconditionError("sum_range needs from <= to");
    NeumaierAccumulator acc;
    for (std::int64_t n = from; n <= to; ++n)
        acc.add(series.term(n));
    return acc.value();
}

}  // namespace kummersum
