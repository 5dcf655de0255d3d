#include "negchain/negativity.hpp"

#include <algorithm>
#include <cmath>

#include "negchain/numeric.hpp"

namespace negchain {

namespace {

NegativityResult result_from_spectrum(std::vector<double> eigenvalues) {
    NegativityResult res;
    std::sort(eigenvalues.begin(), eigenvalues.end());
    double sum = 0.0;
    int count = 0;
    for (double lam : eigenvalues) {
        if (lam > 1.0 + eps_neg) {
            sum += std::log2(lam);
            ++count;
        }
    }
    res.q_eigenvalues = std::move(eigenvalues);
    res.contributing_count = count;
    res.value = (sum < eps_neg) ? 0.0 : sum;
    res.is_ppt = (count == 0);
    return res;
}

} // namespace

std::vector<double> q_spectrum(const GaussianThermalState& state, const Partition& part) {
    const int n = state.size();
    if (part.size() != n)
        throw ValidationError("partition size does not match the number of oscillators");
    const Eigen::VectorXd p = part.sign_vector();
    // P omega- P rescales entries by p_i p_j; M = S (P omega- P) S with
    // S = (omega+)^{1/2} is SPD and similar to Q.
    Eigen::MatrixXd a = state.omega_minus();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) *= p[i] * p[j];
    const Eigen::MatrixXd s = state.omega_plus_sqrt();
    const Eigen::MatrixXd m = s * a * s;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericalError("Q spectrum eigensolve failed");
    return {solver.eigenvalues().data(), solver.eigenvalues().data() + n};
}

NegativityResult log_negativity(const GaussianThermalState& state, const Partition& part) {
    return result_from_spectrum(q_spectrum(state, part));
}

double even_odd_f(int k, int n, double c, double T) {
    if (n < 4 || n % 4 != 0)
        throw ValidationError("even-odd f requires n a multiple of 4, n >= 4");
    if (k < 0 || k > n / 4) throw ValidationError("even-odd f requires 0 <= k <= n/4");
    if (T < 0.0) throw ValidationError("temperature must be >= 0");
    if (c < 0.0 || c >= 0.5)
        throw ValidationError("coupling out of range: c = " + std::to_string(c) +
                              " outside [0, 1/2)");
    const double lam_k = 1.0 - 2.0 * c * std::cos(2.0 * pi * k / n);
    const double lam_shift = 1.0 + 2.0 * c * std::cos(2.0 * pi * k / n);
    double f = std::sqrt(lam_shift / lam_k);
    if (T >= zero_temperature_cutoff)
        f *= std::tanh(std::sqrt(lam_k) / (2.0 * T)) * std::tanh(std::sqrt(lam_shift) / (2.0 * T));
    return f;
}

NegativityResult log_negativity_even_odd_analytic(int n, double c, double T) {
    if (n < 4 || n % 4 != 0)
        throw ValidationError("analytic even-odd path requires n a multiple of 4, n >= 4");
    if (c < 0.0 || c >= 0.5)
        throw ValidationError("coupling out of range: c = " + std::to_string(c) +
                              " outside [0, 1/2)");
    if (T < 0.0) throw ValidationError("temperature must be >= 0");
    std::vector<double> eigenvalues(n);
    for (int k = 0; k < n; ++k) {
        const double lam_k = 1.0 - 2.0 * c * std::cos(2.0 * pi * k / n);
        const double lam_shift = 1.0 + 2.0 * c * std::cos(2.0 * pi * k / n);
        eigenvalues[k] = d_minus_mode(lam_shift, T) * d_plus_mode(lam_k, T);
    }
    return result_from_spectrum(std::move(eigenvalues));
}

NegativityResult log_negativity_even_odd_analytic(const GaussianThermalState& state) {
    if (state.potential().kind() != PotentialKind::nearest)
        throw ValidationError("wrong kind: analytic even-odd path needs a nearest potential");
    return log_negativity_even_odd_analytic(state.size(), state.potential().coupling(),
                                            state.temperature());
}

} // namespace negchain
