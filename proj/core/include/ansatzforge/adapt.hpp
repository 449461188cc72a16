#pragma once

#include <optional>

#include "ansatzforge/ansatz.hpp"
#include "ansatzforge/optimize.hpp"

namespace ansatzforge {

struct AdaptConfig {
    OptimizerConfig inner;  // full re-optimization after each selection
    double epsilon = 1e-3;  // stop when the largest candidate gradient drops below
    int max_depth = 12;     // cap on the number of appended generators
};

struct AdaptState {
    std::vector<PauliString> pool;
    std::vector<PauliString> chosen; // in selection order
    ParameterBinding params;
    std::vector<double> energy_trace; // reference energy, then one entry per selection
    double epsilon = 0.0;
};

struct AdaptResult {
    /// The final inner optimization, with `evaluations` replaced by the
    /// cumulative count across screening and every re-optimization.
    OptResult opt;
    AdaptState state;
    std::optional<double> exact_energy;
    std::optional<double> exact_gap;
};

/// Greedy adaptive ansatz growth: each outer iteration scores every pool
/// generator by |dE/dtheta| at theta = 0 via the shift rule (appended to the
/// current circuit), appends the argmax (ties: lowest pool index), then
/// re-optimizes all parameters warm-started from the previous optimum.
/// Stops when the best candidate gradient falls below epsilon or the depth
/// cap is reached. The reference state is |0...0>.
AdaptResult adapt_vqe_run(const PauliSum& h, const std::vector<PauliString>& pool,
                          const AdaptConfig& config);

/// Stock pool: every 1- and 2-local Pauli string containing at least one Y
/// (odd-Y generators keep real amplitudes real, which suits the stoquastic
/// test Hamiltonians).
std::vector<PauliString> adapt_pool_y_locals(int n);

} // namespace ansatzforge
