#include "negchain/limit.hpp"

#include <algorithm>
#include <cmath>

#include "negchain/numeric.hpp"

namespace negchain {

namespace {

void check_limit_args(double c, double T) {
    if (c < 0.0 || c >= 0.5)
        throw ValidationError("coupling out of range: c = " + std::to_string(c) +
                              " outside [0, 1/2)");
    if (T <= 0.0) throw ValidationError("temperature must be > 0 in the macroscopic limit");
}

constexpr int max_grid = 1 << 18;

// Trapezoid rule for periodic integrands: plain average over a uniform grid.
// cos(l x) is generated by the angle-addition recurrence to avoid a trig
// call per (j, l) pair.
std::vector<double> coeffs_on_grid(int grid, int l_max, double c, double T, int sign) {
    std::vector<double> sums(l_max + 1, 0.0);
    for (int j = 0; j < grid; ++j) {
        const double x = 2.0 * pi * j / grid;
        const double d = d_symbol(x, c, T, sign);
        const double c1 = std::cos(x), s1 = std::sin(x);
        double cl = 1.0, sl = 0.0;
        for (int l = 0; l <= l_max; ++l) {
            sums[l] += d * cl;
            const double cn = cl * c1 - sl * s1;
            sl = sl * c1 + cl * s1;
            cl = cn;
        }
    }
    for (double& v : sums) v /= grid;
    return sums;
}

} // namespace

double d_symbol(double x, double c, double T, int sign) {
    check_limit_args(c, T);
    if (sign != 1 && sign != -1) throw ValidationError("sign must be +1 or -1");
    const double lam = 1.0 - 2.0 * c * std::cos(x);
    return sign > 0 ? d_plus_mode(lam, T) : d_minus_mode(lam, T);
}

std::vector<double> fourier_coeffs(int l_max, double c, double T, int sign) {
    check_limit_args(c, T);
    if (l_max < 0) throw ValidationError("l must be >= 0");
    int grid = 256;
    while (grid < 8 * (l_max + 1)) grid *= 2;
    std::vector<double> prev = coeffs_on_grid(grid, l_max, c, T, sign);
    while (grid <= max_grid / 2) {
        grid *= 2;
        std::vector<double> next = coeffs_on_grid(grid, l_max, c, T, sign);
        double diff = 0.0, scale = 1.0;
        for (int l = 0; l <= l_max; ++l) {
            diff = std::max(diff, std::abs(next[l] - prev[l]));
            scale = std::max(scale, std::abs(next[l]));
        }
        if (diff <= 1e-12 * scale) return next;
        prev = std::move(next);
    }
    throw NumericalError("quadrature did not converge: Fourier coefficients");
}

double fourier_coeff(int l, double c, double T, int sign) {
    return fourier_coeffs(l, c, T, sign)[l];
}

std::pair<double, double> partial_sums(double c, double T, int m) {
    if (m < 1) throw ValidationError("partial-sum order m must be >= 1");
    const std::vector<double> vp = fourier_coeffs(m, c, T, +1);
    const std::vector<double> vm = fourier_coeffs(m, c, T, -1);
    double s_plus = std::abs(vp[0]);
    double s_minus = 0.0;
    for (int l = 1; l <= m; ++l) {
        s_plus += 2.0 * std::abs(vp[l]);
        s_minus += std::abs(vm[l]);
    }
    return {s_plus, s_minus};
}

double derivative_bound(double c, double T, int s, int sign) {
    check_limit_args(c, T);
    if (s < 2 || s > 6) throw ValidationError("derivative order s must be in [2, 6]");
    if (c == 0.0) return 0.0;  // constant symbol
    // Truncate the Fourier series where the s-th-derivative weights die out.
    // Coefficients decay exponentially until they reach the quadrature noise
    // floor, below which |v_l| l^s grows again spuriously, so the cut also
    // fires on a string of floor-level coefficients.
    int l_max = 64;
    std::vector<double> v = fourier_coeffs(l_max, c, T, sign);
    auto find_cut = [&](const std::vector<double>& coeffs) {
        double vmax = 0.0, wmax = 0.0;
        for (int l = 1; l < static_cast<int>(coeffs.size()); ++l) {
            vmax = std::max(vmax, std::abs(coeffs[l]));
            wmax = std::max(wmax, std::abs(coeffs[l]) * std::pow(l, s));
        }
        int run = 0;
        for (int l = 1; l < static_cast<int>(coeffs.size()); ++l) {
            const bool small = std::abs(coeffs[l]) * std::pow(l, s) <= 1e-12 * wmax ||
                               std::abs(coeffs[l]) <= 5e-15 * vmax;
            run = small ? run + 1 : 0;
            if (run >= 4) return l - 3;
        }
        return -1;
    };
    int cut = find_cut(v);
    while (cut < 0 && l_max < 8192) {
        l_max *= 2;
        v = fourier_coeffs(l_max, c, T, sign);
        cut = find_cut(v);
    }
    if (cut > 0) {
        v.resize(cut);
        l_max = cut - 1;
    }
    // d(x) = v_0 + 2 sum v_l cos(l x); s-fold differentiation rotates the
    // phase by s * pi/2 and scales by l^s.
    const int phase = s % 4;
    std::vector<double> weight(l_max + 1, 0.0);
    for (int l = 1; l <= l_max; ++l) weight[l] = 2.0 * v[l] * std::pow(l, s);
    auto deriv = [&](double x) {
        const double c1 = std::cos(x), s1 = std::sin(x);
        double cl = c1, sl = s1;
        double acc = 0.0;
        for (int l = 1; l <= l_max; ++l) {
            switch (phase) {
                case 0: acc += weight[l] * cl; break;
                case 1: acc -= weight[l] * sl; break;
                case 2: acc -= weight[l] * cl; break;
                default: acc += weight[l] * sl; break;
            }
            const double cn = cl * c1 - sl * s1;
            sl = sl * c1 + cl * s1;
            cl = cn;
        }
        return acc;
    };
    // Integrate |derivative| over the period. Adaptive Simpson subdivides at
    // the |.| kinks; the tolerance scales with a crude bound on |g|.
    double weight_sum = 0.0;
    for (int l = 1; l <= l_max; ++l) weight_sum += std::abs(weight[l]);
    const double tol = 1e-9 * std::max(1.0, weight_sum);
    return adaptive_simpson([&](double x) { return std::abs(deriv(x)); }, 0.0, 2.0 * pi, tol);
}

double hurwitz_zeta(int s, double a) {
    if (s < 2) throw ValidationError("hurwitz zeta requires s >= 2");
    if (a <= 0.0) throw ValidationError("hurwitz zeta requires a > 0");
    // Direct sum plus Euler-Maclaurin tail at b = K + a; the neglected term
    // is O(b^{-s-7}).
    constexpr int terms = 64;
    double sum = 0.0;
    for (int k = terms - 1; k >= 0; --k) sum += std::pow(k + a, -s);
    const double b = terms + a;
    const double sd = s;
    double tail = std::pow(b, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(b, -s);
    tail += sd / 12.0 * std::pow(b, -s - 1);
    tail -= sd * (sd + 1.0) * (sd + 2.0) / 720.0 * std::pow(b, -s - 3);
    tail += sd * (sd + 1.0) * (sd + 2.0) * (sd + 3.0) * (sd + 4.0) / 30240.0 * std::pow(b, -s - 5);
    return sum + tail;
}

double lambda_min_w(double c, double T) {
    check_limit_args(c, T);
    return coth(std::sqrt(1.0 + 2.0 * c) / (2.0 * T));
}

double halfhalf_bound_lhs(const LimitParams& params) {
    check_limit_args(params.c, params.T);
    const auto [s_plus, s_minus] = partial_sums(params.c, params.T, params.m);
    const double cs_plus = derivative_bound(params.c, params.T, params.s, +1);
    const double cs_minus = derivative_bound(params.c, params.T, params.s, -1);
    const double zeta_tail = hurwitz_zeta(params.s, params.m + 1.0);
    const double omega_norm = s_plus + cs_plus * zeta_tail / pi;
    const double x_norm = s_minus + cs_minus * zeta_tail / (2.0 * pi);
    const double w_min = lambda_min_w(params.c, params.T);
    return 2.0 * omega_norm * x_norm + 1.0 / (w_min * w_min);
}

bool halfhalf_ppt_sufficient_limit(const LimitParams& params) {
    return halfhalf_bound_lhs(params) < 1.0;
}

double threshold_halfhalf_upper(double c, int m, int s) {
    if (c < 0.0 || c >= 0.5)
        throw ValidationError("coupling out of range: c = " + std::to_string(c) +
                              " outside [0, 1/2)");
    // Decoupled oscillators: S-_m = C_s- = 0 identically and the condition
    // reduces to lambda_min[W]^{-2} < 1, true for every T > 0.
    if (c == 0.0) return 0.0;
    auto lhs = [&](double T) { return halfhalf_bound_lhs({c, T, m, s}); };
    // Coarse scan to locate the last crossing of 1; the LHS is expected to
    // decrease in T but a scan guards against non-monotone behaviour.
    constexpr int scan_points = 48;
    std::vector<double> ts(scan_points), vals(scan_points);
    const double ratio = std::log(threshold_t_max / threshold_t_min);
    for (int i = 0; i < scan_points; ++i) {
        ts[i] = threshold_t_min * std::exp(ratio * i / (scan_points - 1));
        vals[i] = lhs(ts[i]);
    }
    int last_above = -1;
    for (int i = 0; i < scan_points; ++i)
        if (vals[i] >= 1.0) last_above = i;
    if (last_above == -1) return 0.0;  // satisfied down to the bracket floor
    if (last_above == scan_points - 1) return threshold_t_max;  // no crossing below T_max
    return bisect_predicate([&](double T) { return lhs(T) >= 1.0; }, ts[last_above],
                            ts[last_above + 1], 1e-6, true);
}

double threshold_even_odd_limit(double c) {
    if (c < 0.0 || c >= 0.5)
        throw ValidationError("coupling out of range: c = " + std::to_string(c) +
                              " outside [0, 1/2)");
    if (c == 0.0) return 0.0;  // f(0) = tanh^2 <= 1: never entangled
    const double lam_lo = 1.0 - 2.0 * c, lam_hi = 1.0 + 2.0 * c;
    const double prefactor = std::sqrt(lam_hi / lam_lo);
    auto excess = [&](double T) {
        return prefactor * std::tanh(std::sqrt(lam_lo) / (2.0 * T)) *
                   std::tanh(std::sqrt(lam_hi) / (2.0 * T)) -
               1.0;
    };
    if (excess(threshold_t_max) >= 0.0) return threshold_t_max;
    return bisect_decreasing(excess, threshold_t_min, threshold_t_max, 1e-8);
}

double logneg_density_limit(double c, double T) {
    if (c < 0.0 || c >= 0.5)
        throw ValidationError("coupling out of range: c = " + std::to_string(c) +
                              " outside [0, 1/2)");
    if (T < 0.0) throw ValidationError("temperature must be >= 0");
    if (c == 0.0) return 0.0;
    auto f = [&](double x) {
        const double lam_lo = 1.0 - 2.0 * c * std::cos(x);
        const double lam_hi = 1.0 + 2.0 * c * std::cos(x);
        double val = std::sqrt(lam_hi / lam_lo);
        if (T >= zero_temperature_cutoff)
            val *= std::tanh(std::sqrt(lam_lo) / (2.0 * T)) *
                   std::tanh(std::sqrt(lam_hi) / (2.0 * T));
        return val;
    };
    if (f(0.0) <= 1.0) return 0.0;  // above threshold
    // f decreases from f(0) > 1 to f(pi) < 1; locate the crossing.
    const double x_bar =
        bisect_decreasing([&](double x) { return f(x) - 1.0; }, 0.0, pi, 1e-10);
    const double integral =
        adaptive_simpson([&](double x) { return std::log2(std::max(1.0, f(x))); }, 0.0, x_bar,
                         1e-11);
    // Both symmetric branches x and 2pi - x contribute.
    return integral / pi;
}

double halfhalf_finite_lhs(const GaussianThermalState& state) {
    const int n = state.size();
    const int half = n / 2;
    const Eigen::MatrixXd omega_minus = state.omega_minus();
    const Eigen::MatrixXd omega_plus = state.omega_plus();
    // X keeps the blocks of omega- that couple the two halves.
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, n);
    x.topRightCorner(half, n - half) = omega_minus.topRightCorner(half, n - half);
    x.bottomLeftCorner(n - half, half) = omega_minus.bottomLeftCorner(n - half, half);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(x * omega_plus, false);
    if (solver.info() != Eigen::Success)
        throw NumericalError("spectral radius eigensolve failed");
    const double radius = solver.eigenvalues().cwiseAbs().maxCoeff();
    const double w_min = thermal_weight(state.potential().max_eigenvalue(), state.temperature());
    return 1.0 / (w_min * w_min) + 2.0 * radius;
}

bool halfhalf_ppt_sufficient_finite(const GaussianThermalState& state) {
    return halfhalf_finite_lhs(state) < 1.0;
}

} // namespace negchain
