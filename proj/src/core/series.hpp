#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "core/expr.hpp"

namespace kummersum {

enum class RatioMonotone { VerifiedIncreasing, VerifiedNot, Unknown };

struct RatioProbe {
    std::int64_t n_lo = 0;
    std::int64_t n_hi = 0;
    bool increasing = false;
    std::int64_t violation_at = -1;  // first j with b_{j+1} <= b_j, -1 when increasing
};

// A positive series a_n, n >= n0. Catalog entries carry closed-form tail
// integrals / derivatives where known; user expressions carry neither.
// All term evaluation is double precision with powers via exp(p*log(x)).
class Series {
public:
    static Series catalog(const std::string& name);
    static Series from_expression(const std::string& text, std::int64_t n0);

    const std::string& name() const { return name_; }
    std::int64_t first_index() const { return n0_; }
    RatioMonotone ratio_monotone() const { return ratio_monotone_; }

    // The term in the grammar of expr.hpp, bit-for-bit equal to term();
    // empty for geom(r), whose exact dyadic power rule the grammar cannot express.
    const std::string& expression_text() const { return expr_text_; }

    // a_n; throws IndexBeforeStart / NonPositiveTerm.
    double term(std::int64_t n) const;

    // b_n = a_{n+1} / a_n.
    double ratio(std::int64_t n) const;

    // Scans j in [n_lo, n_hi) for the first b_{j+1} <= b_j (strict doubles).
    RatioProbe check_ratio_monotone(std::int64_t n_lo, std::int64_t n_hi) const;

    bool has_tail_integral() const { return has_tail_; }
    bool has_term_derivative() const { return has_deriv_; }

    // I(x) = integral_x^inf f, valid for real x >= n0; throws MissingTailIntegral.
    double tail_integral(double x) const;
    // f'(x); throws MissingDerivative.
    double term_derivative(double x) const;
    // Continuous extension f(x) with f(n) = a_n, for the bounds module's
    // sampled shape checks and quadrature oracles.
    double continuous_term(double x) const;

private:
    enum class Kind { LogA, LogB, BoasC, LogLogD, InvSq, Telescope, Geom, UserExpr };

    Series() = default;

    double raw_term(double nd) const;

    Kind kind_ = Kind::UserExpr;
    std::string name_;
    std::string expr_text_;
    std::int64_t n0_ = 1;
    double geom_r_ = 0.0;
    std::shared_ptr<const Expr> expr_;
    bool has_tail_ = false;
    bool has_deriv_ = false;
    RatioMonotone ratio_monotone_ = RatioMonotone::Unknown;
};

}  // namespace kummersum
