#pragma once

#include <Eigen/Dense>

#include "ansatzforge/pauli.hpp"

namespace ansatzforge {

/// Dense 2^n x 2^n Hermitian matrix of the term list (offset excluded),
/// little-endian qubit ordering. Capped at 10 qubits.
Eigen::MatrixXcd pauli_matrix(const PauliSum& obs);

struct GroundState {
    double energy;
    StateVector state;
};

/// Minimal eigenvalue and a unit eigenvector by dense diagonalization;
/// the residual ||Hv - Ev|| is verified below 1e-8 before returning.
GroundState exact_ground(const PauliSum& obs);

} // namespace ansatzforge
