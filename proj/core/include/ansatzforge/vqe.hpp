#pragma once

#include <optional>

#include "ansatzforge/optimize.hpp"

namespace ansatzforge {

struct VqeResult {
    OptResult opt;
    /// Exact ground energy (terms + offset) and the gap |E* - E_exact|;
    /// filled when the register fits dense diagonalization (n <= 10).
    std::optional<double> exact_energy;
    std::optional<double> exact_gap;
};

/// Minimizes <psi(theta)|H|psi(theta)> over the blueprint's parameters,
/// starting from the config's init policy.
VqeResult vqe_run(const PauliSum& h, const AnsatzBlueprint& blueprint,
                  const OptimizerConfig& config);

} // namespace ansatzforge
