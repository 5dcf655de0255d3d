#include "negchain/potential.hpp"

#include <cmath>

#include "negchain/numeric.hpp"

namespace negchain {

namespace {

void check_even_size(int n, int min_n) {
    if (n < min_n || n % 2 != 0)
        throw ValidationError("bad size: n = " + std::to_string(n) + " must be even and >= " +
                              std::to_string(min_n));
}

} // namespace

Potential Potential::circulant(std::vector<double> first_row) {
    const int n = static_cast<int>(first_row.size());
    check_even_size(n, 2);
    for (int l = 1; l < n; ++l) {
        const double a = first_row[l], b = first_row[n - l];
        if (std::abs(a - b) > 1e-12 * std::max({1.0, std::abs(a), std::abs(b)}))
            throw ValidationError("asymmetric row: row[" + std::to_string(l) + "] != row[" +
                                  std::to_string(n - l) + "]");
    }
    Potential pot;
    pot.n_ = n;
    pot.kind_ = PotentialKind::custom;
    pot.circulant_ = true;
    pot.row_ = std::move(first_row);
    pot.spectrum_.resize(n);
    for (int k = 0; k < n; ++k) {
        double sum = 0.0;
        for (int l = 0; l < n; ++l) {
            if (pot.row_[l] == 0.0) continue;
            sum += pot.row_[l] * std::cos(2.0 * pi * k * l / n);
        }
        pot.spectrum_[k] = sum;
    }
    pot.finalize_spectrum();
    return pot;
}

Potential Potential::nearest(int n, double c) {
    check_even_size(n, 4);
    if (c < 0.0 || c >= 0.5)
        throw ValidationError("coupling out of range: c = " + std::to_string(c) +
                              " outside [0, 1/2)");
    std::vector<double> row(n, 0.0);
    row[0] = 1.0;
    row[1] = -c;
    row[n - 1] = -c;
    Potential pot;
    pot.n_ = n;
    pot.circulant_ = true;
    pot.row_ = std::move(row);
    pot.spectrum_.resize(n);
    for (int k = 0; k < n; ++k) pot.spectrum_[k] = 1.0 - 2.0 * c * std::cos(2.0 * pi * k / n);
    pot.kind_ = PotentialKind::nearest;
    pot.coupling_ = c;
    pot.finalize_spectrum();
    return pot;
}

Potential Potential::next_nearest(int n, double mu) {
    check_even_size(n, 6);
    std::vector<double> row(n, 0.0);
    row[0] = 2.0 + 4.0 * mu * mu;
    row[1] = -4.0 * mu;
    row[2] = 1.0;
    row[n - 2] = 1.0;
    row[n - 1] = -4.0 * mu;
    Potential pot = circulant(std::move(row));
    pot.kind_ = PotentialKind::next_nearest;
    pot.coupling_ = mu;
    return pot;
}

Potential Potential::dense(Eigen::MatrixXd v) {
    const int n = static_cast<int>(v.rows());
    if (v.cols() != n) throw ValidationError("bad size: potential matrix must be square");
    check_even_size(n, 2);
    if ((v - v.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, v.cwiseAbs().maxCoeff()))
        throw ValidationError("asymmetric row: potential matrix is not symmetric");
    Potential pot;
    pot.n_ = n;
    pot.kind_ = PotentialKind::custom;
    pot.circulant_ = false;
    pot.dense_ = std::move(v);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(pot.dense_);
    if (solver.info() != Eigen::Success) throw NumericalError("dense eigendecomposition failed");
    pot.eigenvectors_ = solver.eigenvectors();
    pot.spectrum_.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    pot.finalize_spectrum();
    return pot;
}

void Potential::finalize_spectrum() {
    min_eig_ = spectrum_[0];
    max_eig_ = spectrum_[0];
    for (double& lam : spectrum_) {
        if (lam < -tol_psd)
            throw ValidationError("not positive semidefinite: eigenvalue " + std::to_string(lam));
        if (lam <= 0.0) {
            lam = 0.0;
            gapless_ = true;
        }
        min_eig_ = std::min(min_eig_, lam);
        max_eig_ = std::max(max_eig_, lam);
    }
    if (min_eig_ == 0.0) gapless_ = true;
}

const std::vector<double>& Potential::first_row() const {
    if (!circulant_) throw ValidationError("first_row requested for a dense potential");
    return row_;
}

Eigen::MatrixXd Potential::matrix() const {
    if (!circulant_) return dense_;
    Eigen::MatrixXd m(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m(i, j) = row_[(j - i + n_) % n_];
    return m;
}

std::vector<double> Potential::apply_first_row(const std::function<double(double)>& g) const {
    if (!circulant_) throw ValidationError("apply_first_row requested for a dense potential");
    // first row of g(V): inverse DFT of g(Lambda_k); real and symmetric
    // because Lambda_k = Lambda_{n-k}.
    std::vector<double> row(n_, 0.0);
    std::vector<double> gvals(n_);
    for (int k = 0; k < n_; ++k) gvals[k] = g(spectrum_[k]);
    for (int l = 0; l < n_; ++l) {
        double sum = 0.0;
        for (int k = 0; k < n_; ++k) sum += gvals[k] * std::cos(2.0 * pi * k * l / n_);
        row[l] = sum / n_;
    }
    return row;
}

Eigen::MatrixXd Potential::apply(const std::function<double(double)>& g) const {
    if (circulant_) {
        const std::vector<double> row = apply_first_row(g);
        Eigen::MatrixXd m(n_, n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) m(i, j) = row[(j - i + n_) % n_];
        return m;
    }
    Eigen::VectorXd gvals(n_);
    for (int k = 0; k < n_; ++k) gvals[k] = g(spectrum_[k]);
    return eigenvectors_ * gvals.asDiagonal() * eigenvectors_.transpose();
}

} // namespace negchain
