#include "ansatzforge/qaoa_driver.hpp"

#include <cmath>

#include "ansatzforge/errors.hpp"

namespace ansatzforge {

double cut_expectation(const StateVector& state, const PauliSum& cost) {
    return expectation(state, cost) + cost.offset();
}

QaoaResult qaoa_run(const Graph& g, int p, const OptimizerConfig& config, std::uint64_t shots) {
    if (shots < 1) throw SizeError("shots must be >= 1");
    const PauliSum cost = maxcut_hamiltonian(g);
    const AnsatzBlueprint bp = qaoa_ansatz(cost, QaoaMixer::X, p);
    const Objective obj(bp, cost, std::nullopt, Sense::Maximize);

    ParameterBinding start = initial_binding(obj.parameter_names(), config);
    if (p == 1) {
        // 12x12 scan over gamma in [0, 2pi), beta in [0, pi); cheap and it
        // dodges both the zero-gradient origin and poor local maxima.
        double best = -1.0;
        for (int i = 0; i < 12; ++i) {
            for (int j = 0; j < 12; ++j) {
                ParameterBinding probe{{"qaoa_0", i * (2.0 * M_PI / 12)},
                                       {"qaoa_1", j * (M_PI / 12)}};
                const double v = obj.evaluate(probe);
                if (v > best) {
                    best = v;
                    start = probe;
                }
            }
        }
    }

    QaoaResult result;
    result.opt = optimize(obj, config, start);

    // Score sampled bitstrings against the classical cut value.
    Rng run_rng(config.seed);
    Rng sample_rng = run_rng.split();
    const StateVector final_state =
        run_circuit(obj.circuit(), result.opt.best_params, obj.initial_state(), run_rng).state;
    double best_cut = -1.0;
    std::string best_bits;
    for (const auto& [bits, count] : sample(final_state, shots, sample_rng)) {
        (void)count;
        std::uint64_t assignment = 0;
        for (std::size_t k = 0; k < bits.size(); ++k) {
            if (bits[bits.size() - 1 - k] == '1') assignment |= std::uint64_t{1} << k;
        }
        const double cut = g.cut_value(assignment);
        if (cut > best_cut) {
            best_cut = cut;
            best_bits = bits;
        }
    }
    result.best_sampled_cut = best_cut;
    result.best_bitstring = best_bits;
    if (g.num_vertices() <= 20) {
        const auto opt = brute_force_maxcut(g);
        result.optimum_cut = opt.value;
        result.approximation_ratio = opt.value > 0.0 ? best_cut / opt.value : 1.0;
    }
    return result;
}

} // namespace ansatzforge
