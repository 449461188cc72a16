#pragma once

#include <vector>

#include "ansatzforge/graph.hpp"
#include "ansatzforge/pauli.hpp"

namespace ansatzforge {

enum class Boundary { Chain, Ring };

/// Ferromagnetic transverse-field Ising chain/ring:
///   H = -sum_bonds Z_i Z_{i+1} - g sum_i X_i
/// Bonds come first in term order, (0,1)..(n-2,n-1), then the ring's
/// wrap-around bond (n-1,0), then the X terms.
PauliSum tfim_hamiltonian(int n, double g, Boundary boundary);

/// Commuting-group partition of tfim_hamiltonian's term list, the layering
/// used by the Hamiltonian-variational ansatz: even bonds, odd bonds
/// (wrap bond included), transverse-field terms. Groups that come out empty
/// (e.g. no odd bonds at n = 2) are omitted.
std::vector<std::vector<int>> tfim_commuting_groups(int n, double g, Boundary boundary);

/// Isotropic Heisenberg coupling: H = J sum_bonds (XX + YY + ZZ).
PauliSum heisenberg_hamiltonian(int n, double j, Boundary boundary);

/// MaxCut cost C = sum_{(u,v)} w/2 (I - Z_u Z_v): the constant part
/// sum w/2 is stored in the PauliSum offset, the -w/2 Z_u Z_v parts as
/// terms. cut expectation = expectation(state, C) + C.offset().
PauliSum maxcut_hamiltonian(const Graph& g);

} // namespace ansatzforge
