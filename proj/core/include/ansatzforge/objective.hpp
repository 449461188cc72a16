#pragma once

#include <atomic>
#include <optional>

#include "ansatzforge/blueprint.hpp"
#include "ansatzforge/pauli.hpp"

namespace ansatzforge {

enum class Sense { Minimize, Maximize };

/// Expectation objective E(theta) = <psi(theta)|H|psi(theta)> + H.offset.
///
/// The circuit is built once at construction. Circuits containing mid-
/// circuit measurements are evaluated deterministically by enumerating all
/// measurement branches and Born-weighting the per-branch expectations, so
/// evaluate() needs no RNG and stays differentiable.
class Objective {
public:
    Objective(const AnsatzBlueprint& blueprint, PauliSum observable,
              std::optional<StateVector> initial = std::nullopt, Sense sense = Sense::Minimize);

    double evaluate(const ParameterBinding& params) const;

    /// evaluate() with per-occurrence angle nudges; used by the shift rule.
    double evaluate_shifted(const ParameterBinding& params,
                            const std::vector<AngleShift>& shifts) const;

    const Circuit& circuit() const { return circuit_; }
    const PauliSum& observable() const { return observable_; }
    const StateVector& initial_state() const { return initial_; }
    const std::vector<std::string>& parameter_names() const { return circuit_.parameter_table(); }
    Sense sense() const { return sense_; }

    /// Converts between the binding form and the vector form (components in
    /// parameter_table order).
    ParameterBinding to_binding(const std::vector<double>& values) const;
    std::vector<double> to_vector(const ParameterBinding& params) const;

    std::size_t evaluations() const { return evals_.load(); }
    void reset_evaluations() const { evals_.store(0); }

private:
    Circuit circuit_;
    PauliSum observable_;
    StateVector initial_;
    Sense sense_;
    mutable std::atomic<std::size_t> evals_{0};
};

} // namespace ansatzforge
