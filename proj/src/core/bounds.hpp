#pragma once

#include <cstdint>

#include "core/series.hpp"

namespace kummersum {

enum class BracketMethod { Integral, Morley, Nelsen, Boas };
enum class BracketTarget { Remainder, FullSum };

// Lower/upper interval for R_n = sum_{k>n} a_k (or for the full sum s),
// tagged with the classical integral-test variant that produced it.
struct Bracket {
    double lower = 0.0;
    double upper = 0.0;
    BracketMethod method = BracketMethod::Integral;
    BracketTarget target = BracketTarget::Remainder;
    std::int64_t at_index = 0;

    bool contains(double x) const { return lower <= x && x <= upper; }
    double width() const { return upper - lower; }
    double midpoint() const { return 0.5 * (lower + upper); }
};

// [I(n+1), I(n)]; requires f positive and decreasing on [n, inf).
Bracket integral_bracket(const Series& series, std::int64_t n);

// [I(n) - a_n/2, I(n) - a_{n+1}/2]; additionally requires f convex.
Bracket morley_bracket(const Series& series, std::int64_t n);

// [a_{n+1}/2 + I(n+1), I(n+1/2)]; same hypotheses as Morley, sharper.
Bracket nelsen_bracket(const Series& series, std::int64_t n);

// [I(n+1/2) + f'(n+1/2)/8, I(n+1/2)]; requires the closed-form derivative.
Bracket boas_bracket(const Series& series, std::int64_t n);

Bracket remainder_bracket(const Series& series, std::int64_t n, BracketMethod method);

// Bracket for the full sum: S_N + remainder bracket at N.
Bracket estimate_sum(const Series& series, std::int64_t upto, BracketMethod method);

// Sampled hypothesis checks used as preconditions (no symbolic engine):
// f decreasing over [from, from*10^6] on a geometric grid of 64 sample pairs,
// convexity via 64 nonnegative second differences. Throws ShapeCheck on failure.
void require_decreasing(const Series& series, double from);
void require_convex(const Series& series, double from);

}  // namespace kummersum
