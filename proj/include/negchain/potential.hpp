#ifndef NEGCHAIN_POTENTIAL_HPP
#define NEGCHAIN_POTENTIAL_HPP

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "negchain/errors.hpp"

namespace negchain {

enum class PotentialKind { nearest, next_nearest, custom };

// Coupling matrix V of a harmonic chain H = (sum p_i^2 + sum x_i V_ij x_j)/2.
// Symmetric positive semidefinite; stored either as the first row of a
// circulant matrix or as a full dense symmetric matrix. The spectrum (and,
// for dense storage, the eigenvectors) is computed at construction so that
// arbitrary matrix functions of V are cheap afterwards.
class Potential {
public:
    // Generic circulant matrix from its first row. The row must satisfy the
    // reflection symmetry row[l] == row[n-l] so the matrix is symmetric.
    static Potential circulant(std::vector<double> first_row);

    // Nearest-neighbour chain circ(1, -c, 0, ..., 0, -c); defined for
    // 0 <= c < 1/2, n >= 4 even. Eigenvalues 1 - 2c cos(2 pi k / n).
    static Potential nearest(int n, double c);

    // Next-to-nearest chain circ(2 + 4 mu^2, -4 mu, 1, 0, ..., 0, 1, -4 mu);
    // n >= 6 even. Gapless for mu <= 1; positive semidefiniteness is checked
    // numerically rather than assumed.
    static Potential next_nearest(int n, double mu);

    // Arbitrary dense symmetric positive-semidefinite matrix.
    static Potential dense(Eigen::MatrixXd v);

    int size() const { return n_; }
    PotentialKind kind() const { return kind_; }
    bool is_circulant() const { return circulant_; }

    // Tagged coupling constant (c for nearest, mu for next_nearest).
    double coupling() const { return coupling_; }

    // Eigenvalues of V. Fourier-index order k = 0..n-1 for circulant storage
    // (Lambda_k = sum_l row[l] cos(2 pi k l / n)), ascending for dense.
    const std::vector<double>& spectrum() const { return spectrum_; }

    double min_eigenvalue() const { return min_eig_; }
    double max_eigenvalue() const { return max_eig_; }

    // True if some eigenvalue was clamped to zero by the PSD tolerance.
    bool is_gapless() const { return gapless_; }

    const std::vector<double>& first_row() const;

    // Materializes the full matrix.
    Eigen::MatrixXd matrix() const;

    // g(V) through the spectral decomposition: circulant storage uses the
    // Fourier cosine sums, dense storage uses the cached eigenvectors.
    Eigen::MatrixXd apply(const std::function<double(double)>& g) const;

    // First row of g(V) for circulant storage.
    std::vector<double> apply_first_row(const std::function<double(double)>& g) const;

private:
    Potential() = default;
    void finalize_spectrum();

    int n_ = 0;
    PotentialKind kind_ = PotentialKind::custom;
    double coupling_ = 0.0;
    bool circulant_ = true;
    bool gapless_ = false;
    std::vector<double> row_;       // circulant storage
    Eigen::MatrixXd dense_;         // dense storage
    Eigen::MatrixXd eigenvectors_;  // dense storage only
    std::vector<double> spectrum_;
    double min_eig_ = 0.0, max_eig_ = 0.0;
};

// Absolute tolerance of the positive-semidefiniteness check; eigenvalues in
// (-tol_psd, 0] are clamped to zero and the potential is flagged gapless.
inline constexpr double tol_psd = 1e-10;

} // namespace negchain

#endif
