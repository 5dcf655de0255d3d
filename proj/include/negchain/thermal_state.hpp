#ifndef NEGCHAIN_THERMAL_STATE_HPP
#define NEGCHAIN_THERMAL_STATE_HPP

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "negchain/potential.hpp"

namespace negchain {

// Gaussian thermal state exp(-H/T)/Z of the harmonic chain defined by a
// Potential. Everything of interest is a matrix function of V, so the state
// is represented by the potential plus per-mode weights:
//
//   W(T)      = 1 + 2 [exp(V^{1/2}/T) - 1]^{-1},  eigenvalues coth(sqrt(L)/2T)
//   omega+-   = W(T)^{-1} V^{+-1/2},              eigenvalues d+-_k
//   d+-_k     = Lambda_k^{+-1/2} tanh(sqrt(Lambda_k)/2T)
//   gamma(T)  = [V^{-1/2} W(T)] (+) [V^{1/2} W(T)]  (x block first)
//
// Temperatures below zero_temperature_cutoff use the exact ground-state
// branch (tanh factors = 1). A gapless potential at T = 0 is rejected since
// d- diverges there.
class GaussianThermalState {
public:
    GaussianThermalState(Potential pot, double temperature);

    const Potential& potential() const { return pot_; }
    double temperature() const { return temperature_; }
    int size() const { return pot_.size(); }

    // Per-mode weights (d-_k, d+_k) in the potential's spectral order.
    const std::vector<double>& d_minus() const { return d_minus_; }
    const std::vector<double>& d_plus() const { return d_plus_; }
    std::pair<std::vector<double>, std::vector<double>> mode_weights() const {
        return {d_minus_, d_plus_};
    }

    // Eigenvalues of W(T); +inf on a gapless mode at T > 0.
    std::vector<double> thermal_weights() const;

    Eigen::MatrixXd omega_minus() const;
    Eigen::MatrixXd omega_plus() const;
    Eigen::MatrixXd omega_plus_sqrt() const;

    // 2n x 2n covariance matrix in the ordering (x_1..x_n, p_1..p_n).
    // Requires a gapped potential (the x block carries V^{-1/2}).
    Eigen::MatrixXd covariance() const;

private:
    Potential pot_;
    double temperature_;
    std::vector<double> d_minus_, d_plus_;
};

} // namespace negchain

#endif
