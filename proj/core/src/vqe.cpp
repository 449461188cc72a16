#include "ansatzforge/vqe.hpp"

#include <cmath>

#include "ansatzforge/exact.hpp"

namespace ansatzforge {

VqeResult vqe_run(const PauliSum& h, const AnsatzBlueprint& blueprint,
                  const OptimizerConfig& config) {
    const Objective obj(blueprint, h);
    const ParameterBinding start = initial_binding(obj.parameter_names(), config);
    VqeResult result;
    result.opt = optimize(obj, config, start);
    if (h.num_qubits() <= kMaxDenseQubits) {
        const double exact = exact_ground(h).energy + h.offset();
        result.exact_energy = exact;
        result.exact_gap = std::abs(result.opt.best_value - exact);
    }
    return result;
}

} // namespace ansatzforge
