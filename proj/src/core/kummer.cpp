#include "core/kummer.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace kummersum {

double seed_zeta(const Series& series, std::int64_t at, double epsilon) {
    if (!(epsilon > 0.0)) throw PreconditionError("seed_zeta needs epsilon > 0");
    return epsilon / series.term(at);
}

double zeta_step(const Series& series, std::int64_t n, double zeta_n) {
    double ratio = series.term(n) / series.term(n + 1);
    return zeta_n * ratio - 1.0;
}

TestOutcome run_test(const Series& series, std::int64_t at, const TestConfig& config) {
    if (!(config.epsilon > 0.0)) throw PreconditionError("run_test needs epsilon > 0");
    if (config.horizon < 1) throw PreconditionError("run_test needs horizon >= 1");

    TestOutcome out;
    out.seed_index = at;

    double a_cur = series.term(at);
    double zeta = config.epsilon / a_cur;
    out.seed_zeta = zeta;

    auto record = [&](std::int64_t index, double z) {
        if (config.trace == TraceKeep::None) return;
        if (config.trace == TraceKeep::Full) out.trace.push_back({index, z});
        if (out.boundary.size() == 4) out.boundary.erase(out.boundary.begin());
        out.boundary.push_back({index, z});
    };
    record(at, zeta);

    std::int64_t n = at;
    double prev = zeta;
    std::int64_t inspected = 1;
    while (inspected < config.horizon) {
        // One new term per step: the previous step's a_{n+1} is this step's a_n.
        double a_next = series.term(n + 1);
        double z = prev * (a_cur / a_next) - 1.0;
        ++n;
        ++inspected;
        ++out.iterations;
        if (!std::isfinite(z)) throw ZetaOverflowError(n);
        record(n, z);
        if (z <= 0.0 || z < prev - config.decrease_tolerance) {
            out.verdict = Verdict::Rejected;
            out.break_index = n - 1;
            out.negative_hit = z <= 0.0;
            return out;
        }
        prev = z;
        a_cur = a_next;
    }
    out.verdict = Verdict::AcceptedAtHorizon;
    return out;
}

double zeta_closed_form(const Series& series, std::int64_t at, double epsilon,
                        std::int64_t j, double tail_j, double tail_at) {
    if (j < at) throw PreconditionError("zeta_closed_form needs j >= at");
    double c = epsilon - tail_at;
    return (c + tail_j) / series.term(j);
}

}  // namespace kummersum
