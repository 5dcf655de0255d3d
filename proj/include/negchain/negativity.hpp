#ifndef NEGCHAIN_NEGATIVITY_HPP
#define NEGCHAIN_NEGATIVITY_HPP

#include <vector>

#include "negchain/partition.hpp"
#include "negchain/thermal_state.hpp"

namespace negchain {

// Entanglement-detection floor: eigenvalues of Q above 1 + eps count as
// contributing, and a total log-negativity below eps is reported as zero.
inline constexpr double eps_neg = 1e-10;

// Log-negativity of a Gaussian thermal state across one bipartition,
// E_l = sum_k log2 max[1, lambda_k(Q)] with Q = P omega- P omega+, in bits.
struct NegativityResult {
    double value = 0.0;                   // E_l (log base 2)
    std::vector<double> q_eigenvalues;    // spectrum of Q, sorted ascending
    int contributing_count = 0;           // eigenvalues above 1
    bool is_ppt = true;                   // no contributing eigenvalues
};

// Spectrum of Q = P omega- P omega+, computed through the symmetric positive
// definite similar matrix M = (omega+)^{1/2} P omega- P (omega+)^{1/2}.
std::vector<double> q_spectrum(const GaussianThermalState& state, const Partition& part);

NegativityResult log_negativity(const GaussianThermalState& state, const Partition& part);

// f(k, n, c, T) = sqrt(Lambda_{k+n/2}/Lambda_k) tanh(sqrt(Lambda_k)/2T)
//                 tanh(sqrt(Lambda_{k+n/2})/2T)
// for the nearest-neighbour chain; the eigenvalues of Q in the even-odd
// partition that can exceed one. Requires n a multiple of 4, 0 <= k <= n/4.
double even_odd_f(int k, int n, double c, double T);

// Even-odd log-negativity of the nearest-neighbour chain from the analytic
// spectrum {d-_{(k+n/2) mod n} d+_k : k = 0..n-1}, which reproduces the
// dense path exactly including eigenvalue multiplicities.
NegativityResult log_negativity_even_odd_analytic(int n, double c, double T);

// Same, dispatching on a thermal state; rejects non-nearest potentials.
NegativityResult log_negativity_even_odd_analytic(const GaussianThermalState& state);

} // namespace negchain

#endif
