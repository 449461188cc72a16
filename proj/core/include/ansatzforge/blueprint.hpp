#pragma once

#include <functional>
#include <string>

#include <nlohmann/json.hpp>

#include "ansatzforge/circuit.hpp"

namespace ansatzforge {

/// Factory description of an ansatz instance: a deterministic builder plus
/// the metadata drivers and manifests need. build() always returns a
/// structurally identical Circuit whose symbolic parameters are named
/// "<family>_<index>", index 0 .. num_parameters-1.
struct AnsatzBlueprint {
    std::string family;
    int num_qubits = 0;
    int num_parameters = 0;
    std::function<Circuit()> build;
    nlohmann::json config; // structural config echoed into run manifests

    /// Parameter names in table order.
    std::vector<std::string> parameter_names() const;

    /// Binding with every parameter set to `value`.
    ParameterBinding constant_binding(double value = 0.0) const;
};

} // namespace ansatzforge
