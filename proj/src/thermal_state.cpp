#include "negchain/thermal_state.hpp"

#include <cmath>
#include <limits>

#include "negchain/numeric.hpp"

namespace negchain {

GaussianThermalState::GaussianThermalState(Potential pot, double temperature)
    : pot_(std::move(pot)), temperature_(temperature) {
    if (temperature < 0.0) throw ValidationError("temperature must be >= 0");
    if (temperature < zero_temperature_cutoff && pot_.is_gapless())
        throw ValidationError("gapless at zero temperature: d- diverges on a zero mode");
    const auto& spectrum = pot_.spectrum();
    d_minus_.reserve(spectrum.size());
    d_plus_.reserve(spectrum.size());
    for (double lam : spectrum) {
        d_minus_.push_back(d_minus_mode(lam, temperature_));
        d_plus_.push_back(d_plus_mode(lam, temperature_));
    }
}

std::vector<double> GaussianThermalState::thermal_weights() const {
    std::vector<double> w;
    w.reserve(pot_.spectrum().size());
    for (double lam : pot_.spectrum()) {
        if (lam == 0.0 && temperature_ >= zero_temperature_cutoff)
            w.push_back(std::numeric_limits<double>::infinity());
        else
            w.push_back(thermal_weight(lam, temperature_));
    }
    return w;
}

Eigen::MatrixXd GaussianThermalState::omega_minus() const {
    const double T = temperature_;
    return pot_.apply([T](double lam) { return d_minus_mode(lam, T); });
}

Eigen::MatrixXd GaussianThermalState::omega_plus() const {
    const double T = temperature_;
    return pot_.apply([T](double lam) { return d_plus_mode(lam, T); });
}

Eigen::MatrixXd GaussianThermalState::omega_plus_sqrt() const {
    const double T = temperature_;
    return pot_.apply([T](double lam) { return std::sqrt(d_plus_mode(lam, T)); });
}

Eigen::MatrixXd GaussianThermalState::covariance() const {
    if (pot_.is_gapless())
        throw ValidationError("gapless potential: covariance x block needs V^{-1/2}");
    const double T = temperature_;
    const int n = pot_.size();
    Eigen::MatrixXd gamma = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    gamma.topLeftCorner(n, n) =
        pot_.apply([T](double lam) { return thermal_weight(lam, T) / std::sqrt(lam); });
    gamma.bottomRightCorner(n, n) =
        pot_.apply([T](double lam) { return thermal_weight(lam, T) * std::sqrt(lam); });
    return gamma;
}

} // namespace negchain
