#include "core/bounds.hpp"

#include <cmath>

#include "core/errors.hpp"
#include "core/summation.hpp"

namespace kummersum {

void require_decreasing(const Series& series, double from) {
    double ratio = std::pow(1.0e6, 1.0 / 64.0);
    double x = from;
    double prev = series.continuous_term(x);
    for (int i = 0; i < 64; ++i) {
        x *= ratio;
        double cur = series.continuous_term(x);
        if (!(cur < prev))
            throw ShapeCheckError("f is not decreasing near x=" + std::to_string(x) +
                                  " for series " + series.name());
        prev = cur;
    }
}

void require_convex(const Series& series, double from) {
    // Second differences on a local arithmetic grid, then on a widening one.
    for (double h : {1.0, from > 64.0 ? from / 64.0 : 1.0}) {
        double x = from;
        for (int i = 0; i < 32; ++i) {
            double f0 = series.continuous_term(x);
            double f1 = series.continuous_term(x + h);
            double f2 = series.continuous_term(x + 2.0 * h);
            if (f0 + f2 - 2.0 * f1 < 0.0)
                throw ShapeCheckError("f is not convex near x=" + std::to_string(x) +
                                      " for series " + series.name());
            x += h;
        }
    }
}

namespace {

void require_tail(const Series& s) {
    if (!s.has_tail_integral()) throw MissingTailIntegralError(s.name());
}

}  // namespace

Bracket integral_bracket(const Series& series, std::int64_t n) {
    require_tail(series);
    if (n < series.first_index()) throw IndexBeforeStartError(n, series.first_index());
    require_decreasing(series, static_cast<double>(n));
    Bracket b;
    b.method = BracketMethod::Integral;
    b.at_index = n;
    b.lower = series.tail_integral(static_cast<double>(n + 1));
    b.upper = series.tail_integral(static_cast<double>(n));
    return b;
}

Bracket morley_bracket(const Series& series, std::int64_t n) {
    require_tail(series);
    if (n < series.first_index()) throw IndexBeforeStartError(n, series.first_index());
    require_decreasing(series, static_cast<double>(n));
    require_convex(series, static_cast<double>(n));
    Bracket b;
    b.method = BracketMethod::Morley;
    b.at_index = n;
    double In = series.tail_integral(static_cast<double>(n));
    b.lower = In - series.term(n) / 2.0;
    b.upper = In - series.term(n + 1) / 2.0;
    return b;
}

Bracket nelsen_bracket(const Series& series, std::int64_t n) {
    require_tail(series);
    if (n < series.first_index()) throw IndexBeforeStartError(n, series.first_index());
    require_decreasing(series, static_cast<double>(n));
    require_convex(series, static_cast<double>(n));
    Bracket b;
    b.method = BracketMethod::Nelsen;
    b.at_index = n;
    b.lower = series.term(n + 1) / 2.0 + series.tail_integral(static_cast<double>(n + 1));
    b.upper = series.tail_integral(static_cast<double>(n) + 0.5);
    return b;
}

Bracket boas_bracket(const Series& series, std::int64_t n) {
    require_tail(series);
    if (!series.has_term_derivative()) throw MissingDerivativeError(series.name());
    if (n < series.first_index()) throw IndexBeforeStartError(n, series.first_index());
    require_decreasing(series, static_cast<double>(n));
    Bracket b;
    b.method = BracketMethod::Boas;
    b.at_index = n;
    double Ih = series.tail_integral(static_cast<double>(n) + 0.5);
    b.lower = Ih + series.term_derivative(static_cast<double>(n) + 0.5) / 8.0;
    b.upper = Ih;
    return b;
}

Bracket remainder_bracket(const Series& series, std::int64_t n, BracketMethod method) {
    switch (method) {
        case BracketMethod::Integral: return integral_bracket(series, n);
        case BracketMethod::Morley: return morley_bracket(series, n);
        case BracketMethod::Nelsen: return nelsen_bracket(series, n);
        case BracketMethod::Boas: return boas_bracket(series, n);
    }
    throw PreconditionError("unknown bracket method");
}

Bracket estimate_sum(const Series& series, std::int64_t upto, BracketMethod method) {
    Bracket rem = remainder_bracket(series, upto, method);
    auto ptr = std::make_shared<const Series>(series);
    double s = partial_sum(ptr, upto).value();
    Bracket b = rem;
    b.target = BracketTarget::FullSum;
    b.lower = s + rem.lower;
    b.upper = s + rem.upper;
    return b;
}

}  // namespace kummersum
