#pragma once

#include <string>
#include <vector>

#include "ansatzforge/blueprint.hpp"
#include "ansatzforge/pauli.hpp"

namespace ansatzforge {

/// Circuit for exp(-i * prefactor * theta / 2 * P): basis rotations into the
/// Z frame (H for X, RX(pi/2) for Y), a CNOT staircase onto the highest
/// involved qubit, RZ(prefactor * theta) there, then everything undone.
/// Throws on the identity string (no generator).
Circuit pauli_exponential(const PauliString& p, const std::string& param, double prefactor = 1.0);

/// Trotterized product of Pauli exponentials. Strings within one group share
/// a parameter; groups are applied in order, strings within a group in order.
/// Parameters are named ucc_<group index>.
AnsatzBlueprint ucc_ansatz(const std::vector<std::vector<PauliString>>& groups);

enum class HeaEntangler { CnotRing, CzRing, Figure2 };

/// Layered hardware-efficient ansatz: RX,RZ,RX on every qubit, then the
/// entangler. Figure2 is the printed 4-qubit block (controlled-RY ladder,
/// 16 parameters per layer); the ring modes use 3n parameters per layer.
AnsatzBlueprint hea_ansatz(int n, int layers, HeaEntangler entangler = HeaEntangler::CnotRing);

/// Two-qubit particle-number-conserving A(theta, phi) block: three CNOTs
/// around R(theta, phi) = RZ(phi + pi) * RY(theta + pi/2) and its adjoint.
/// Leaves |00> and |11> fixed and mixes only within span{|01>, |10>}.
Circuit spa_a_gate(const std::string& theta, const std::string& phi);

/// Brick pattern of A-gates: per layer, bricks on odd-started pairs
/// (1,2), (3,4), ... then even-started pairs (0,1), (2,3), ...
AnsatzBlueprint spa_ansatz(int n, int layers);

enum class QaoaMixer { X, XYRing };

/// Alternating cost/mixer ansatz on |+...+>: p repetitions of
/// U_P(gamma_k) = prod_j exp(-i gamma_k c_j P_j) over the cost terms in
/// ascending order, then the mixer. Parameters alternate gamma, beta.
/// The X mixer requires a diagonal (Z-only) cost.
AnsatzBlueprint qaoa_ansatz(const PauliSum& cost, QaoaMixer mixer, int p);

/// Hamiltonian-variational ansatz: one shared parameter per commuting group
/// per layer, terms exponentiated as exp(-i theta_g c_t P_t). `groups` must
/// partition the term indices of h exactly.
AnsatzBlueprint hva_ansatz(const PauliSum& h, const std::vector<std::vector<int>>& groups, int p,
                           bool hadamard_init = true);

/// Data-embedding circuit: RX feature rotations, trainable ZZ couplings,
/// trainable RY layer. figure_mode reproduces the printed 4-qubit, 3-feature
/// instance (8 trainable parameters) including its ZZ bond order.
AnsatzBlueprint qce_embedding(const std::vector<double>& x, int n, bool figure_mode = false);

/// Active-qubit schedule shared by the MERA and QCNN builders: start from
/// all n qubits and repeatedly keep the even positions, down to 2.
std::vector<std::vector<int>> halving_schedule(int n);

/// Multiscale entanglement renormalization circuit: log2(n) super-layers
/// expanding from 2 active wires to all n (the halving schedule reversed);
/// each layer entangles adjacent pairs with CNOTs and applies 3-parameter
/// Euler rotations (RZ RY RZ). Barriers separate the layers.
AnsatzBlueprint mera_ansatz(int n);

enum class QcnnPooling { Conditioned, Deferred };

/// Convolution/pooling classifier skeleton: per round, a brick of two-qubit
/// conv blocks (12 shared parameters), then pooling that measures the odd
/// active positions and applies a conditioned single-qubit V (3 shared
/// parameters) to the kept neighbor; a 12-parameter fully-connected block
/// finishes on the last two qubits. Deferred pooling replaces measure+
/// condition with coherent controlled gates.
AnsatzBlueprint qcnn_ansatz(int n, QcnnPooling pooling = QcnnPooling::Conditioned);

/// Readout wire used by QCNN classification: first of the two survivors.
int qcnn_readout_qubit(int n);

} // namespace ansatzforge
