#include "ansatzforge/objective.hpp"

#include "ansatzforge/errors.hpp"

namespace ansatzforge {

Objective::Objective(const AnsatzBlueprint& blueprint, PauliSum observable,
                     std::optional<StateVector> initial, Sense sense)
    : circuit_(blueprint.build()), observable_(std::move(observable)),
      initial_(initial ? std::move(*initial) : StateVector::zero(blueprint.num_qubits)),
      sense_(sense) {
    if (observable_.num_qubits() != circuit_.num_qubits()) {
        throw SizeError("observable qubit count does not match the ansatz");
    }
    if (initial_.num_qubits() != circuit_.num_qubits()) {
        throw SizeError("initial state qubit count does not match the ansatz");
    }
}

double Objective::evaluate(const ParameterBinding& params) const {
    return evaluate_shifted(params, {});
}

double Objective::evaluate_shifted(const ParameterBinding& params,
                                   const std::vector<AngleShift>& shifts) const {
    evals_.fetch_add(1, std::memory_order_relaxed);
    double value = observable_.offset();
    for (const auto& branch : enumerate_branches(circuit_, params, initial_, shifts)) {
        value += branch.probability * expectation(branch.state, observable_);
    }
    return value;
}

ParameterBinding Objective::to_binding(const std::vector<double>& values) const {
    const auto& names = parameter_names();
    if (values.size() != names.size()) {
        throw BindingError("expected " + std::to_string(names.size()) + " parameter values, got " +
                           std::to_string(values.size()));
    }
    ParameterBinding b;
    for (std::size_t i = 0; i < names.size(); ++i) b[names[i]] = values[i];
    return b;
}

std::vector<double> Objective::to_vector(const ParameterBinding& params) const {
    circuit_.check_binding(params);
    std::vector<double> v;
    v.reserve(parameter_names().size());
    for (const auto& name : parameter_names()) v.push_back(params.at(name));
    return v;
}

} // namespace ansatzforge
