#include "ansatzforge/blueprint.hpp"

namespace ansatzforge {

std::vector<std::string> AnsatzBlueprint::parameter_names() const {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(num_parameters));
    for (int i = 0; i < num_parameters; ++i) {
        names.push_back(family + "_" + std::to_string(i));
    }
    return names;
}

ParameterBinding AnsatzBlueprint::constant_binding(double value) const {
    ParameterBinding b;
    for (const auto& name : parameter_names()) b[name] = value;
    return b;
}

} // namespace ansatzforge
