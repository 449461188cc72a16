#pragma once

#include <vector>

#include "ansatzforge/objective.hpp"

namespace ansatzforge {

struct GradientOptions {
    /// When a parameter touches a gate without a two-term shift rule
    /// (parameterized Controlled gates), fall back to central finite
    /// differences for that component instead of throwing.
    bool fd_fallback = false;
    double fd_step = 1e-7;
};

/// Exact gradient by the parameter-shift rule: every occurrence of a
/// parameter contributes coeff * [E(angle + pi/2) - E(angle - pi/2)] / 2,
/// where coeff is the occurrence's chain-rule factor and the nudge is
/// applied to that gate angle alone. Components follow parameter_table
/// order. Requires each touched gate to be generated by a Pauli with unit
/// eigenvalue gap (RX/RY/RZ/ZZ, the R2 and U3 slots, and Pauli-exponential
/// blocks all qualify); see GradientOptions for the fallback.
std::vector<double> parameter_shift_gradient(const Objective& obj, const ParameterBinding& params,
                                             const GradientOptions& options = {});

/// Central finite differences, component-wise: [E(+h) - E(-h)] / 2h.
std::vector<double> finite_difference_gradient(const Objective& obj,
                                               const ParameterBinding& params, double h);

} // namespace ansatzforge
