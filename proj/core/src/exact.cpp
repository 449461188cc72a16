#include "ansatzforge/exact.hpp"

#include <bit>

#include "ansatzforge/errors.hpp"

namespace ansatzforge {

Eigen::MatrixXcd pauli_matrix(const PauliSum& obs) {
    if (obs.num_qubits() > kMaxDenseQubits) {
        throw SizeError("dense Pauli matrix is capped at " + std::to_string(kMaxDenseQubits) +
                        " qubits");
    }
    const std::uint64_t dim = std::uint64_t{1} << obs.num_qubits();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& [c, s] : obs.terms()) {
        const std::uint64_t flip = s.x_mask() | s.y_mask();
        const std::uint64_t phase_mask = s.y_mask() | s.z_mask();
        cx y_factor{1.0, 0.0};
        switch (std::popcount(s.y_mask()) & 3) {
        case 1: y_factor = {0.0, 1.0}; break;
        case 2: y_factor = {-1.0, 0.0}; break;
        case 3: y_factor = {0.0, -1.0}; break;
        default: break;
        }
        for (std::uint64_t b = 0; b < dim; ++b) {
            const double sign = (std::popcount(b & phase_mask) & 1) ? -1.0 : 1.0;
            m(b ^ flip, b) += c * y_factor * sign;
        }
    }
    return m;
}

GroundState exact_ground(const PauliSum& obs) {
    const Eigen::MatrixXcd m = pauli_matrix(obs);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("eigendecomposition failed", {});
    }
    const double energy = solver.eigenvalues()(0);
    const Eigen::VectorXcd v = solver.eigenvectors().col(0);
    const double residual = (m * v - energy * v).norm();
    if (residual > 1e-8) {
        throw NumericalError("ground-state residual " + std::to_string(residual) +
                                 " exceeds 1e-8",
                             {});
    }
    std::vector<cx> amps(v.data(), v.data() + v.size());
    return GroundState{energy, StateVector(obs.num_qubits(), std::move(amps))};
}

} // namespace ansatzforge
