#include "ansatzforge/gradient.hpp"

#include <cmath>
#include <variant>

#include "ansatzforge/errors.hpp"
#include "ansatzforge/threads.hpp"

namespace ansatzforge {

namespace {

struct Occurrence {
    std::size_t op_index;
    std::size_t slot;
    double coeff;
};

struct ParamUsage {
    std::vector<Occurrence> shiftable;
    bool has_unshiftable = false;
};

bool kind_is_shiftable(GateKind k) {
    switch (k) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::ZZ:
    case GateKind::R2:
    case GateKind::U3:
        return true;
    default:
        return false;
    }
}

/// Where (and with which chain-rule factor) each parameter enters the
/// circuit. Parameterized Controlled gates are flagged unshiftable: their
/// generator has eigenvalue gaps below one, so the two-term rule fails.
std::vector<ParamUsage> scan_usages(const Objective& obj) {
    const auto& names = obj.parameter_names();
    std::vector<ParamUsage> usages(names.size());
    const auto& ops = obj.circuit().ops();
    for (std::size_t op = 0; op < ops.size(); ++op) {
        const auto* g = std::get_if<GateOp>(&ops[op]);
        if (!g || !g->gate.is_parameterized()) continue;
        const bool shiftable = kind_is_shiftable(g->gate.kind());
        for (std::size_t slot = 0; slot < g->gate.angles().size(); ++slot) {
            for (const auto& [name, coeff] : g->gate.angles()[slot].terms()) {
                if (coeff == 0.0) continue;
                for (std::size_t i = 0; i < names.size(); ++i) {
                    if (names[i] != name) continue;
                    if (shiftable) usages[i].shiftable.push_back({op, slot, coeff});
                    else usages[i].has_unshiftable = true;
                }
            }
        }
        if (g->gate.inner() && g->gate.inner()->is_parameterized()) {
            // Controlled wrapper: mark every symbol of the inner gate.
            for (const auto& expr : g->gate.inner()->angles()) {
                for (const auto& [name, coeff] : expr.terms()) {
                    if (coeff == 0.0) continue;
                    for (std::size_t i = 0; i < names.size(); ++i) {
                        if (names[i] == name) usages[i].has_unshiftable = true;
                    }
                }
            }
        }
    }
    return usages;
}

double central_difference(const Objective& obj, const ParameterBinding& params,
                          const std::string& name, double h) {
    ParameterBinding plus = params;
    ParameterBinding minus = params;
    plus.at(name) += h;
    minus.at(name) -= h;
    return (obj.evaluate(plus) - obj.evaluate(minus)) / (2.0 * h);
}

} // namespace

std::vector<double> parameter_shift_gradient(const Objective& obj, const ParameterBinding& params,
                                             const GradientOptions& options) {
    obj.circuit().check_binding(params);
    const auto& names = obj.parameter_names();
    const auto usages = scan_usages(obj);
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (usages[i].has_unshiftable && !options.fd_fallback) {
            throw UnsupportedGateError("parameter '" + names[i] +
                                       "' enters a gate without a two-term shift rule; enable "
                                       "the finite-difference fallback or decompose the gate");
        }
    }

    std::vector<double> grad(names.size(), 0.0);
    parallel_for_index(names.size(), [&](std::size_t i) {
        if (usages[i].has_unshiftable) {
            grad[i] = central_difference(obj, params, names[i], options.fd_step);
            return;
        }
        double total = 0.0;
        for (const auto& occ : usages[i].shiftable) {
            const double plus =
                obj.evaluate_shifted(params, {AngleShift{occ.op_index, occ.slot, M_PI / 2}});
            const double minus =
                obj.evaluate_shifted(params, {AngleShift{occ.op_index, occ.slot, -M_PI / 2}});
            total += occ.coeff * (plus - minus) / 2.0;
        }
        grad[i] = total;
    });
    return grad;
}

std::vector<double> finite_difference_gradient(const Objective& obj,
                                               const ParameterBinding& params, double h) {
    if (!(h > 0.0)) throw ValidationError("finite-difference step must be positive");
    obj.circuit().check_binding(params);
    const auto& names = obj.parameter_names();
    std::vector<double> grad(names.size(), 0.0);
    parallel_for_index(names.size(), [&](std::size_t i) {
        grad[i] = central_difference(obj, params, names[i], h);
    });
    return grad;
}

} // namespace ansatzforge
