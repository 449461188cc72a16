#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ansatzforge/gradient.hpp"
#include "ansatzforge/objective.hpp"

namespace ansatzforge {

enum class OptMethod { GradientDescent, Spsa, NelderMead };

OptMethod opt_method_from_string(const std::string& name);
std::string to_string(OptMethod m);

enum class ParamInit { Zeros, UniformSmall };

struct OptimizerConfig {
    OptMethod method = OptMethod::GradientDescent;
    int max_iters = 200;
    double step_size = 0.25; // GD initial step, NM simplex edge, SPSA a
    double tolerance = 1e-8;
    std::uint64_t seed = 0;
    ParamInit init = ParamInit::Zeros;
    GradientOptions gradient;
    // SPSA gain schedule: a_k = step/(k+1+0.1*max_iters)^alpha, c_k = c/(k+1)^gamma
    double spsa_c = 0.1;
    double spsa_alpha = 0.602;
    double spsa_gamma = 0.101;
};

struct TracePoint {
    int iteration;
    double value;
    std::optional<double> grad_norm; // empty for gradient-free methods
    std::size_t evaluations;         // cumulative at this point
};

struct OptResult {
    ParameterBinding best_params;
    double best_value = 0.0;
    std::vector<TracePoint> trace;
    std::size_t evaluations = 0;
    bool converged = false;
};

/// Runs the configured optimizer from `start`. Trace gets one point per
/// accepted iterate (the start evaluation included), at most max_iters
/// points in total. Values and best_value are in the objective's sense:
/// best is the trace minimum when minimizing, maximum when maximizing.
/// Non-finite objective values raise NumericalError carrying the partial
/// value trace.
OptResult optimize(const Objective& obj, const OptimizerConfig& config,
                   const ParameterBinding& start);

/// Default start per the config: all zeros, or seeded uniform(-0.1, 0.1).
ParameterBinding initial_binding(const std::vector<std::string>& names,
                                 const OptimizerConfig& config);

} // namespace ansatzforge
