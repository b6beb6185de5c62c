#pragma once

// Test-only adaptive quadrature for checking closed-form tail integrals.
// Composite over decade slices so the recursion never has to bridge many
// orders of magnitude at once.

#include <cmath>
#include <functional>

namespace kummersum::testing {

inline double simpson(const std::function<double(double)>& f, double a, double b, double fa,
                      double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive_step(const std::function<double(double)>& f, double a, double b,
                            double fa, double fm, double fb, double whole, double tol,
                            int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson(f, a, m, fa, flm, fm);
    double right = simpson(f, m, b, fm, frm, fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_step(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           adaptive_step(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double rel_tol) {
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = simpson(f, a, b, fa, fm, fb);
    double tol = std::abs(whole) * rel_tol;
    if (tol == 0.0) tol = rel_tol;
    return adaptive_step(f, a, b, fa, fm, fb, whole, tol, 48);
}

// Integral over [a, b] split at decade boundaries.
inline double integrate_decades(const std::function<double(double)>& f, double a, double b,
                                double rel_tol) {
    double total = 0.0;
    double lo = a;
    while (lo < b) {
        double hi = std::min(b, lo * 10.0);
        total += adaptive_simpson(f, lo, hi, rel_tol);
        lo = hi;
    }
    return total;
}

}  // namespace kummersum::testing
