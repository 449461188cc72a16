#pragma once

#include <optional>
#include <string>

#include "ansatzforge/ansatz.hpp"
#include "ansatzforge/graph.hpp"
#include "ansatzforge/hamiltonians.hpp"
#include "ansatzforge/optimize.hpp"

namespace ansatzforge {

struct QaoaResult {
    OptResult opt; // values are cut expectations <C>, offset included
    std::string best_bitstring;
    double best_sampled_cut = 0.0;
    /// Brute-force optimum and ratio, available up to 20 vertices.
    std::optional<double> optimum_cut;
    std::optional<double> approximation_ratio;
};

/// MaxCut QAOA: maximizes <C> with the X mixer, then samples the optimized
/// state `shots` times and scores the cuts. At p = 1 the optimizer is seeded
/// from a deterministic coarse scan of the two-parameter landscape (the
/// all-zeros corner is a stationary point); deeper circuits start from the
/// config's init policy.
QaoaResult qaoa_run(const Graph& g, int p, const OptimizerConfig& config, std::uint64_t shots);

/// Cut expectation <C> = expectation(state, cost) + cost.offset.
double cut_expectation(const StateVector& state, const PauliSum& cost);

} // namespace ansatzforge
