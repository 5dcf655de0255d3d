#ifndef NEGCHAIN_LIMIT_HPP
#define NEGCHAIN_LIMIT_HPP

#include <utility>
#include <vector>

#include "negchain/thermal_state.hpp"

namespace negchain {

// Macroscopic-limit (n -> infinity) analysis of the nearest-neighbour chain:
// the even-odd threshold curve, the log-negativity density, and a sufficient
// PPT condition for the half-half partition built from partial sums of the
// Fourier coefficients of the symbols d+-(x) plus Hurwitz-zeta tail bounds.

struct LimitParams {
    double c = 0.0;  // coupling, in [0, 1/2)
    double T = 0.0;  // temperature, > 0
    int m = 10;      // partial-sum order
    int s = 3;       // integration-by-parts order, >= 2
};

// Symbol d+-(x) = (1 - 2c cos x)^{+-1/2} tanh(sqrt(1 - 2c cos x)/2T);
// sign = +1 or -1. Even and 2pi-periodic in x.
double d_symbol(double x, double c, double T, int sign);

// Fourier coefficient v_l = (1/2pi) int_0^2pi d+-(x) e^{ixl} dx (real by
// symmetry). Trapezoidal quadrature on a uniform grid, refined by doubling
// until successive grids agree to 1e-12.
double fourier_coeff(int l, double c, double T, int sign);

// v_0..v_lmax in one pass over a shared symbol grid.
std::vector<double> fourier_coeffs(int l_max, double c, double T, int sign);

// (S+_m, S-_m) with S+_m = |v_0+| + 2 sum_{l=1..m} |v_l+| and
// S-_m = sum_{l=1..m} |v_l-|.
std::pair<double, double> partial_sums(double c, double T, int m);

// C_s = int_0^2pi |d^s/dx^s d+-(x)| dx via spectral differentiation of the
// truncated Fourier series.
double derivative_bound(double c, double T, int s, int sign);

// Hurwitz zeta zeta(s, a) = sum_{k>=0} (k+a)^{-s} for integer s >= 2, a > 0.
double hurwitz_zeta(int s, double a);

// Closed-form lambda_min[W(T)] = coth(sqrt(1+2c)/2T) of the nearest chain.
double lambda_min_w(double c, double T);

// Left-hand side of the macroscopic half-half PPT condition
//   2 (S+_m + C_s+ zeta(s,m+1)/pi) (S-_m + C_s- zeta(s,m+1)/2pi)
//     + lambda_min[W(T)]^{-2}  < 1.
double halfhalf_bound_lhs(const LimitParams& params);

// True when the condition above holds; then the half-half log-negativity
// vanishes in the macroscopic limit.
bool halfhalf_ppt_sufficient_limit(const LimitParams& params);

// Search range for all threshold bisections.
inline constexpr double threshold_t_min = 1e-4;
inline constexpr double threshold_t_max = 50.0;

// Minimal T above which the half-half sufficient condition holds (bisection
// to 1e-6). Returns 0 when it already holds at the bracket floor, and the
// sentinel threshold_t_max when it never holds below that.
double threshold_halfhalf_upper(double c, int m = 10, int s = 3);

// Even-odd threshold temperature in the macroscopic limit: the root of
// sqrt((1+2c)/(1-2c)) tanh(sqrt(1-2c)/2T) tanh(sqrt(1+2c)/2T) = 1.
// Returns 0 for c = 0 (never entangled).
double threshold_even_odd_limit(double c);

// Log-negativity per oscillator in the macroscopic limit; n * density
// matches the finite-n even-odd E_l asymptotically. Zero above threshold.
double logneg_density_limit(double c, double T);

// Finite-n sufficient PPT condition for the offset-0 half-half partition,
//   lambda_min[W(T)]^{-2} + 2 max_i |lambda_i[X omega+]| < 1,
// where X keeps the off-diagonal blocks of omega- across the half cut.
double halfhalf_finite_lhs(const GaussianThermalState& state);
bool halfhalf_ppt_sufficient_finite(const GaussianThermalState& state);

} // namespace negchain

#endif
