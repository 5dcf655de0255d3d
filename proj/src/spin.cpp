#include "negchain/spin.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>

#include "negchain/errors.hpp"

namespace negchain {

namespace {

int magnetization(int state, int n) { return n - 2 * std::popcount(static_cast<unsigned>(state)); }

} // namespace

SpinSystem::SpinSystem(SpinModel model, int n, BoundaryKind boundary)
    : model_(model), n_(n), boundary_(boundary) {
    if (n < 2) throw ValidationError("spin chain needs n >= 2");
    if (n > 14) throw ValidationError("too large: n = " + std::to_string(n) + " exceeds 14");
    const int dim = 1 << n_;

    sectors_.resize(n_ + 1);
    sector_of_.resize(dim);
    pos_of_.resize(dim);
    for (int u = 0; u < dim; ++u) {
        const int k = std::popcount(static_cast<unsigned>(u));
        sector_of_[u] = k;
        pos_of_[u] = static_cast<int>(sectors_[k].states.size());
        sectors_[k].states.push_back(u);
    }

    const int last_bond = (boundary_ == BoundaryKind::periodic) ? n_ : n_ - 1;
    const double hop = (model_.kind == SpinModelKind::xx) ? -2.0 * model_.J : 2.0;

    ground_energy_ = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= n_; ++k) {
        Sector& sector = sectors_[k];
        const int size = static_cast<int>(sector.states.size());
        Eigen::MatrixXd block = Eigen::MatrixXd::Zero(size, size);
        for (int a = 0; a < size; ++a) {
            const int u = sector.states[a];
            double diag = model_.B * magnetization(u, n_);
            for (int i = 0; i < last_bond; ++i) {
                const int j = (i + 1) % n_;
                const int bi = (u >> i) & 1, bj = (u >> j) & 1;
                if (model_.kind == SpinModelKind::xxx)
                    diag += (bi == bj) ? 1.0 : -1.0;  // sz_i sz_j
                if (bi != bj) {
                    const int v = u ^ ((1 << i) | (1 << j));
                    block(pos_of_[v], a) += hop;
                }
            }
            block(a, a) += diag;
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(block);
        if (solver.info() != Eigen::Success)
            throw NumericalError("spin sector eigensolve failed");
        sector.eigenvalues = solver.eigenvalues();
        sector.eigenvectors = solver.eigenvectors();
        ground_energy_ = std::min(ground_energy_, sector.eigenvalues[0]);
    }
}

Eigen::MatrixXd SpinSystem::hamiltonian() const {
    const int dim = 1 << n_;
    const int last_bond = (boundary_ == BoundaryKind::periodic) ? n_ : n_ - 1;
    const double hop = (model_.kind == SpinModelKind::xx) ? -2.0 * model_.J : 2.0;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (int u = 0; u < dim; ++u) {
        double diag = model_.B * magnetization(u, n_);
        for (int i = 0; i < last_bond; ++i) {
            const int j = (i + 1) % n_;
            const int bi = (u >> i) & 1, bj = (u >> j) & 1;
            if (model_.kind == SpinModelKind::xxx) diag += (bi == bj) ? 1.0 : -1.0;
            if (bi != bj) h(u ^ ((1 << i) | (1 << j)), u) += hop;
        }
        h(u, u) += diag;
    }
    return h;
}

std::vector<double> SpinSystem::eigenvalues() const {
    std::vector<double> all;
    all.reserve(dim());
    for (const Sector& sector : sectors_)
        all.insert(all.end(), sector.eigenvalues.data(),
                   sector.eigenvalues.data() + sector.eigenvalues.size());
    std::sort(all.begin(), all.end());
    return all;
}

std::vector<double> SpinSystem::boltzmann_weights(int sector, double T) const {
    const Eigen::VectorXd& evals = sectors_[sector].eigenvalues;
    std::vector<double> w(evals.size());
    if (T <= 0.0) {
        const double tol = 1e-9 * std::max(1.0, std::abs(ground_energy_));
        for (int i = 0; i < evals.size(); ++i)
            w[i] = (evals[i] - ground_energy_ <= tol) ? 1.0 : 0.0;
    } else {
        for (int i = 0; i < evals.size(); ++i) w[i] = std::exp(-(evals[i] - ground_energy_) / T);
    }
    return w;
}

DensityMatrix SpinSystem::thermal_state(double T) const {
    if (T < 0.0) throw ValidationError("temperature must be >= 0");
    const int dim = 1 << n_;
    DensityMatrix rho = Eigen::MatrixXd::Zero(dim, dim);
    double z = 0.0;
    for (int k = 0; k <= n_; ++k) {
        const Sector& sector = sectors_[k];
        const std::vector<double> w = boltzmann_weights(k, T);
        Eigen::VectorXd wv = Eigen::Map<const Eigen::VectorXd>(w.data(), w.size());
        z += wv.sum();
        const Eigen::MatrixXd block =
            sector.eigenvectors * wv.asDiagonal() * sector.eigenvectors.transpose();
        const int size = static_cast<int>(sector.states.size());
        for (int a = 0; a < size; ++a)
            for (int b = 0; b < size; ++b) rho(sector.states[a], sector.states[b]) = block(a, b);
    }
    rho /= z;
    return rho;
}

double SpinSystem::thermal_negativity(double T, const Partition& part) const {
    if (T < 0.0) throw ValidationError("temperature must be >= 0");
    if (part.size() != n_) throw ValidationError("partition size does not match the spin chain");
    int mask_a = 0;
    for (int i = 0; i < n_; ++i)
        if (part.label(i) == 1) mask_a |= 1 << i;
    const int mask_b = ((1 << n_) - 1) & ~mask_a;

    // Sector blocks of the thermal state.
    double z = 0.0;
    std::vector<Eigen::MatrixXd> blocks(n_ + 1);
    for (int k = 0; k <= n_; ++k) {
        const Sector& sector = sectors_[k];
        const std::vector<double> w = boltzmann_weights(k, T);
        Eigen::VectorXd wv = Eigen::Map<const Eigen::VectorXd>(w.data(), w.size());
        z += wv.sum();
        blocks[k] = sector.eigenvectors * wv.asDiagonal() * sector.eigenvectors.transpose();
    }

    // The partial transpose of a magnetization-conserving state is block
    // diagonal in the A-minus-B magnetization difference.
    const int dim = 1 << n_;
    std::map<int, std::vector<int>> groups;
    for (int u = 0; u < dim; ++u) {
        const int key = std::popcount(static_cast<unsigned>(u & mask_a)) -
                        std::popcount(static_cast<unsigned>(u & mask_b));
        groups[key].push_back(u);
    }

    double total = 0.0;
    for (const auto& [key, members] : groups) {
        const int size = static_cast<int>(members.size());
        Eigen::MatrixXd block(size, size);
        for (int a = 0; a < size; ++a) {
            const int u = members[a];
            for (int b = a; b < size; ++b) {
                const int v = members[b];
                const int row = (v & mask_a) | (u & mask_b);
                const int col = (u & mask_a) | (v & mask_b);
                const int sec = sector_of_[row];
                const double val =
                    (sec == sector_of_[col]) ? blocks[sec](pos_of_[row], pos_of_[col]) : 0.0;
                block(a, b) = val;
                block(b, a) = val;
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(block, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success)
            throw NumericalError("partial-transpose block eigensolve failed");
        for (int i = 0; i < size; ++i)
            if (solver.eigenvalues()[i] < 0.0) total -= solver.eigenvalues()[i];
    }
    return total / z;
}

Eigen::MatrixXd partial_transpose(const Eigen::MatrixXd& rho, const Partition& part) {
    const int n = part.size();
    const int dim = 1 << n;
    if (rho.rows() != dim || rho.cols() != dim)
        throw ValidationError("density matrix dimension does not match the partition");
    int mask_a = 0;
    for (int i = 0; i < n; ++i)
        if (part.label(i) == 1) mask_a |= 1 << i;
    const int mask_b = (dim - 1) & ~mask_a;
    Eigen::MatrixXd out(dim, dim);
    for (int u = 0; u < dim; ++u)
        for (int v = 0; v < dim; ++v)
            out(u, v) = rho((v & mask_a) | (u & mask_b), (u & mask_a) | (v & mask_b));
    return out;
}

double negativity(const Eigen::MatrixXd& rho, const Partition& part) {
    const Eigen::MatrixXd pt = partial_transpose(rho, part);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(pt, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericalError("partial-transpose eigensolve failed");
    double total = 0.0;
    for (int i = 0; i < solver.eigenvalues().size(); ++i)
        if (solver.eigenvalues()[i] < 0.0) total -= solver.eigenvalues()[i];
    return total;
}

} // namespace negchain
