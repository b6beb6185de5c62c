#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/series.hpp"

namespace kummersum {

enum class TraceKeep { None, Boundary, Full };
enum class Verdict { AcceptedAtHorizon, Rejected };

struct TestConfig {
    double epsilon = 0.0;
    // Maximum number of zeta values inspected, seed included: the scan covers
    // indices N .. N+horizon-1, i.e. at most horizon-1 recurrence steps.
    std::int64_t horizon = 1'000'000'000LL;
    TraceKeep trace = TraceKeep::Boundary;
    // Decrease detection is strict by default; a tolerance band is available
    // but the reported break indices assume 0.
    double decrease_tolerance = 0.0;
};

struct ZetaSample {
    std::int64_t index = 0;
    double zeta = 0.0;
};

struct TestOutcome {
    Verdict verdict = Verdict::Rejected;
    std::int64_t seed_index = 0;
    double seed_zeta = 0.0;
    std::int64_t iterations = 0;  // zeta values computed after the seed
    std::optional<std::int64_t> break_index;  // peak j: last index before the decrease
    bool negative_hit = false;    // zeta crossed <= 0
    // Last up-to-4 inspected (index, zeta) pairs, oldest first (trace != None).
    std::vector<ZetaSample> boundary;
    // Whole inspected sequence including the seed (trace == Full).
    std::vector<ZetaSample> trace;

    bool accepted() const { return verdict == Verdict::AcceptedAtHorizon; }
};

// zeta_N = epsilon / a_N.
double seed_zeta(const Series& series, std::int64_t at, double epsilon);

// zeta_{n+1} = zeta_n * (a_n / a_{n+1}) - 1, ratio formed first.
double zeta_step(const Series& series, std::int64_t n, double zeta_n);

// The hypothesis test for "R_N < epsilon": seed at N and scan the recurrence.
// Rejected at the first strict decrease or at zeta <= 0; accepted once
// `horizon` values (seed included) were inspected without either.
// Acceptance is horizon-limited and can be wrong; rejection is sound.
TestOutcome run_test(const Series& series, std::int64_t at, const TestConfig& config);

// Eq-style closed form (c + R_j) / a_j with c = epsilon - R_N, where the
// remainders R_j = sum_{k>j} a_k come from an external oracle. Test-oracle
// companion to the recurrence, not used on any computational path.
double zeta_closed_form(const Series& series, std::int64_t at, double epsilon,
                        std::int64_t j, double tail_j, double tail_at);

}  // namespace kummersum
