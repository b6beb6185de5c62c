#include "core/series.hpp"

#include <cmath>
#include <cstdlib>

#include "core/errors.hpp"

namespace kummersum {

namespace {

// r^n by binary exponentiation. For dyadic r every multiply is exact in
// double, so geom terms and ratios are exact until underflow.
double geom_pow(double r, std::int64_t n) {
    double result = 1.0;
    double base = r;
    while (n > 0) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

}  // namespace

Series Series::catalog(const std::string& name) {
    Series s;
    s.name_ = name;
    if (name == "logA") {
        s.kind_ = Kind::LogA;
        s.n0_ = 1;
        s.expr_text_ = "log(n+1)/n^1.5";
        s.has_tail_ = true;  // 2*log(n+1)/sqrt(n) + 4*atan(n^-1/2), checked against quadrature
        s.ratio_monotone_ = RatioMonotone::VerifiedIncreasing;
        return s;
    }
    if (name == "logB") {
        s.kind_ = Kind::LogB;
        s.n0_ = 1;
        s.expr_text_ = "log(n+1)/n^1.75";
        s.ratio_monotone_ = RatioMonotone::VerifiedIncreasing;
        return s;
    }
    if (name == "boasC") {
        s.kind_ = Kind::BoasC;
        s.n0_ = 2;
        s.expr_text_ = "1/(n*log(n)^2)";
        s.has_tail_ = true;   // 1/log(n)
        s.has_deriv_ = true;  // -(log x + 2) / (x^2 log^3 x)
        s.ratio_monotone_ = RatioMonotone::VerifiedIncreasing;
        return s;
    }
    if (name == "loglogD") {
        s.kind_ = Kind::LogLogD;
        s.n0_ = 3;
        s.expr_text_ = "1/(n*log(n)*loglog(n)^2)";
        s.has_tail_ = true;  // 1/loglog(n)
        s.ratio_monotone_ = RatioMonotone::VerifiedIncreasing;
        return s;
    }
    if (name == "invsq") {
        s.kind_ = Kind::InvSq;
        s.n0_ = 1;
        s.expr_text_ = "1/n^2";
        s.has_tail_ = true;   // 1/n
        s.has_deriv_ = true;  // -2/x^3
        s.ratio_monotone_ = RatioMonotone::VerifiedIncreasing;
        return s;
    }
    if (name == "telescope") {
        s.kind_ = Kind::Telescope;
        s.n0_ = 1;
        s.expr_text_ = "1/(n*(n+1))";
        s.ratio_monotone_ = RatioMonotone::VerifiedIncreasing;
        return s;
    }
    if (name.size() > 6 && name.compare(0, 5, "geom(") == 0 && name.back() == ')') {
        std::string arg = name.substr(5, name.size() - 6);
        char* end = nullptr;
        double r = std::strtod(arg.c_str(), &end);
        if (end != arg.c_str() + arg.size() || !(r > 0.0) || !(r < 1.0))
            throw UnknownSeriesError(name + " (geom needs 0 < r < 1)");
        s.kind_ = Kind::Geom;
        s.n0_ = 0;
        s.geom_r_ = r;
        s.ratio_monotone_ = RatioMonotone::VerifiedNot;  // constant ratio, not strictly increasing
        return s;
    }
    throw UnknownSeriesError(name);
}

Series Series::from_expression(const std::string& text, std::int64_t n0) {
    Series s;
    s.kind_ = Kind::UserExpr;
    s.name_ = text;
    s.expr_text_ = text;
    s.n0_ = n0;
    s.expr_ = std::make_shared<const Expr>(Expr::parse(text));
    s.ratio_monotone_ = RatioMonotone::Unknown;
    return s;
}

double Series::raw_term(double nd) const {
    switch (kind_) {
        case Kind::LogA:
            return std::log(nd + 1.0) / pow_real(nd, 1.5);
        case Kind::LogB:
            return std::log(nd + 1.0) / pow_real(nd, 1.75);
        case Kind::BoasC:
            return 1.0 / (nd * pow_real(std::log(nd), 2.0));
        case Kind::LogLogD:
            return 1.0 / (nd * std::log(nd) * pow_real(std::log(std::log(nd)), 2.0));
        case Kind::InvSq:
            return 1.0 / pow_real(nd, 2.0);
        case Kind::Telescope:
            return 1.0 / (nd * (nd + 1.0));
        case Kind::Geom:
            return 0.0;  // handled in term(); geom uses the integer index directly
        case Kind::UserExpr:
            return expr_->eval(nd);
    }
    return 0.0;
}

double Series::term(std::int64_t n) const {
    if (n < n0_) throw IndexBeforeStartError(n, n0_);
    double a = kind_ == Kind::Geom ? geom_pow(geom_r_, n) : raw_term(static_cast<double>(n));
    if (!(a > 0.0) || !std::isfinite(a)) throw NonPositiveTermError(n, a);
    return a;
}

double Series::ratio(std::int64_t n) const {
    return term(n + 1) / term(n);
}

RatioProbe Series::check_ratio_monotone(std::int64_t n_lo, std::int64_t n_hi) const {
    if (n_lo < n0_) throw IndexBeforeStartError(n_lo, n0_);
    if (n_hi <= n_lo) throw PreconditionError("check_ratio_monotone needs n_hi > n_lo");
    RatioProbe probe;
    probe.n_lo = n_lo;
    probe.n_hi = n_hi;
    // b_j needs a_j and a_{j+1}; reuse the shared term between consecutive ratios.
    double a0 = term(n_lo);
    double a1 = term(n_lo + 1);
    double b_prev = a1 / a0;
    for (std::int64_t j = n_lo; j + 1 < n_hi; ++j) {
        double a2 = term(j + 2);
        double b_next = a2 / a1;
        if (b_next <= b_prev) {
            probe.increasing = false;
            probe.violation_at = j;
            return probe;
        }
        a1 = a2;
        b_prev = b_next;
    }
    probe.increasing = true;
    return probe;
}

double Series::tail_integral(double x) const {
    if (!has_tail_) throw MissingTailIntegralError(name_);
    switch (kind_) {
        case Kind::LogA:
            return 2.0 * std::log(x + 1.0) / std::sqrt(x) + 4.0 * std::atan(1.0 / std::sqrt(x));
        case Kind::BoasC:
            return 1.0 / std::log(x);
        case Kind::LogLogD:
            return 1.0 / std::log(std::log(x));
        case Kind::InvSq:
            return 1.0 / x;
        default:
            throw MissingTailIntegralError(name_);
    }
}

double Series::term_derivative(double x) const {
    if (!has_deriv_) throw MissingDerivativeError(name_);
    switch (kind_) {
        case Kind::InvSq:
            return -2.0 / (x * x * x);
        case Kind::BoasC: {
            double lx = std::log(x);
            return -(lx + 2.0) / (x * x * lx * lx * lx);
        }
        default:
            throw MissingDerivativeError(name_);
    }
}

double Series::continuous_term(double x) const {
    if (kind_ == Kind::Geom) return std::exp(x * std::log(geom_r_));
    return raw_term(x);
}

}  // namespace kummersum
