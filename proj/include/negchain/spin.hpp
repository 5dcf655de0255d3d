#ifndef NEGCHAIN_SPIN_HPP
#define NEGCHAIN_SPIN_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "negchain/partition.hpp"

namespace negchain {

enum class SpinModelKind { xx, xxx };
enum class BoundaryKind { periodic, open };

// XX:  H = -J sum_i (sx_i sx_{i+1} + sy_i sy_{i+1}) + B sum_i sz_i
// XXX: H =    sum_i (sx sx + sy sy + sz sz)_{i,i+1} + B sum_i sz_i
// Pauli matrices (not spin-1/2 operators); sz|0> = +|0>.
struct SpinModel {
    SpinModelKind kind = SpinModelKind::xx;
    double J = 1.0;  // XX coupling; unused by XXX
    double B = 0.0;  // transverse field

    static SpinModel xx(double J, double B) { return {SpinModelKind::xx, J, B}; }
    static SpinModel xxx(double B) { return {SpinModelKind::xxx, 1.0, B}; }
    std::string name() const { return kind == SpinModelKind::xx ? "xx" : "xxx"; }
};

// Density matrices are dense real symmetric 2^n x 2^n matrices with unit
// trace (both models are real in the computational basis).
using DensityMatrix = Eigen::MatrixXd;

// Spin-1/2 chain with its full exact diagonalization. Both models conserve
// total sz magnetization, so the Hamiltonian is diagonalized per
// magnetization sector; thermal states and thermal negativities reuse the
// cached sector eigendecompositions.
class SpinSystem {
public:
    SpinSystem(SpinModel model, int n, BoundaryKind boundary = BoundaryKind::periodic);

    int sites() const { return n_; }
    int dim() const { return 1 << n_; }
    const SpinModel& model() const { return model_; }
    BoundaryKind boundary() const { return boundary_; }

    // Dense Hamiltonian, assembled on demand.
    Eigen::MatrixXd hamiltonian() const;

    double ground_energy() const { return ground_energy_; }

    // Full spectrum, ascending.
    std::vector<double> eigenvalues() const;

    // Thermal state exp(-H/T)/Z; T = 0 yields the maximally mixed projector
    // onto the ground space.
    DensityMatrix thermal_state(double T) const;

    // Negativity of the thermal state across a bipartition, computed in the
    // magnetization-difference blocks of the partial transpose. Matches
    // negativity(thermal_state(T), part) to rounding.
    double thermal_negativity(double T, const Partition& part) const;

private:
    struct Sector {
        std::vector<int> states;  // basis indices, ascending
        Eigen::VectorXd eigenvalues;
        Eigen::MatrixXd eigenvectors;
    };

    std::vector<double> boltzmann_weights(int sector, double T) const;

    SpinModel model_;
    int n_;
    BoundaryKind boundary_;
    std::vector<Sector> sectors_;      // indexed by popcount 0..n
    std::vector<int> sector_of_, pos_of_;
    double ground_energy_ = 0.0;
    double partition_function_scale_ = 1.0;
};

// Partial transposition over the tensor factors of group A. Preserves
// Hermiticity and trace.
Eigen::MatrixXd partial_transpose(const Eigen::MatrixXd& rho, const Partition& part);

// Negativity E_N = sum |min(lambda_i, 0)| over the eigenvalues of the
// partial transpose, equal to (||rho^{T_A}||_1 - 1)/2 for a unit-trace state.
double negativity(const Eigen::MatrixXd& rho, const Partition& part);

} // namespace negchain

#endif
