#ifndef NEGCHAIN_NUMERIC_HPP
#define NEGCHAIN_NUMERIC_HPP

#include <cmath>
#include <functional>
#include <numbers>

#include "negchain/errors.hpp"

// Small shared numerical helpers. Natural units hbar = k_B = 1 throughout.

namespace negchain {

inline constexpr double pi = std::numbers::pi;

// Temperatures below this are handled with the exact T = 0 formulas, which
// avoids evaluating coth/tanh at astronomically large arguments.
inline constexpr double zero_temperature_cutoff = 1e-8;

// coth(y) for y > 0 without overflow (tanh saturates to 1 for large y).
inline double coth(double y) { return 1.0 / std::tanh(y); }

// Thermal mode weight w(L, T) = coth(sqrt(L) / 2T), the eigenvalue of W(T)
// on a mode with potential eigenvalue L. Equals 1 + 2/(exp(sqrt(L)/T) - 1).
inline double thermal_weight(double lambda, double temperature) {
    if (temperature < zero_temperature_cutoff) return 1.0;
    return coth(std::sqrt(lambda) / (2.0 * temperature));
}

// d+(L, T) = sqrt(L) tanh(sqrt(L)/2T), eigenvalue of omega+ = W^{-1} V^{1/2}.
inline double d_plus_mode(double lambda, double temperature) {
    const double root = std::sqrt(lambda);
    if (temperature < zero_temperature_cutoff) return root;
    return root * std::tanh(root / (2.0 * temperature));
}

// d-(L, T) = tanh(sqrt(L)/2T) / sqrt(L), eigenvalue of omega- = W^{-1} V^{-1/2}.
// Finite as L -> 0 at T > 0: tanh(y)/y -> 1 gives the limit 1/(2T).
inline double d_minus_mode(double lambda, double temperature) {
    const double root = std::sqrt(lambda);
    if (temperature < zero_temperature_cutoff) return 1.0 / root;
    const double y = root / (2.0 * temperature);
    if (y < 1e-6) return (1.0 - y * y / 3.0) / (2.0 * temperature);
    return std::tanh(y) / root;
}

// Root of a strictly decreasing continuous function on [lo, hi] by bisection.
// Assumes f(lo) > 0 > f(hi); returns the midpoint of the final bracket.
inline double bisect_decreasing(const std::function<double(double)>& f, double lo, double hi,
                                double tol) {
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// Bisection on a boolean predicate that switches from `from` to `!from` once
// on [lo, hi]; returns the switch location to within tol.
inline double bisect_predicate(const std::function<bool(double)>& pred, double lo, double hi,
                               double tol, bool value_at_lo) {
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (pred(mid) == value_at_lo)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

namespace detail {

inline double simpson_rec(const std::function<double(double)>& f, double a, double b, double fa,
                          double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace detail

// Adaptive Simpson quadrature on [a, b].
inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol, int max_depth = 40) {
    if (a == b) return 0.0;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::simpson_rec(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

} // namespace negchain

#endif
