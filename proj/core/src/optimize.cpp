#include "ansatzforge/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ansatzforge/errors.hpp"
#include "ansatzforge/rng.hpp"

namespace ansatzforge {

OptMethod opt_method_from_string(const std::string& name) {
    if (name == "gradient_descent") return OptMethod::GradientDescent;
    if (name == "spsa") return OptMethod::Spsa;
    if (name == "nelder_mead") return OptMethod::NelderMead;
    throw ValidationError("unknown optimizer method '" + name +
                          "' (expected gradient_descent, spsa or nelder_mead)");
}

std::string to_string(OptMethod m) {
    switch (m) {
    case OptMethod::GradientDescent: return "gradient_descent";
    case OptMethod::Spsa: return "spsa";
    case OptMethod::NelderMead: return "nelder_mead";
    }
    return "?";
}

ParameterBinding initial_binding(const std::vector<std::string>& names,
                                 const OptimizerConfig& config) {
    ParameterBinding b;
    Rng rng(config.seed);
    for (const auto& name : names) {
        b[name] = config.init == ParamInit::Zeros ? 0.0 : rng.uniform(-0.1, 0.1);
    }
    return b;
}

namespace {

/// Shared bookkeeping: values are recorded in the caller's sense; the
/// internal objective f is always minimized.
struct Tracker {
    const Objective& obj;
    const OptimizerConfig& config;
    double sign; // +1 minimize, -1 maximize (applied to raw evaluate)
    std::vector<TracePoint> trace;

    double f(const std::vector<double>& x) {
        const double raw = obj.evaluate(obj.to_binding(x));
        if (!std::isfinite(raw)) {
            throw NumericalError("objective value is not finite", values());
        }
        return sign * raw;
    }

    void record(int iteration, double fx, std::optional<double> grad_norm) {
        trace.push_back(TracePoint{iteration, sign * fx, grad_norm, obj.evaluations()});
    }

    std::vector<double> values() const {
        std::vector<double> v;
        v.reserve(trace.size());
        for (const auto& t : trace) v.push_back(t.value);
        return v;
    }

    OptResult finish(const std::vector<double>& best_x, double best_f, bool converged) const {
        OptResult r;
        r.best_params = obj.to_binding(best_x);
        r.best_value = sign * best_f;
        r.trace = trace;
        r.evaluations = obj.evaluations();
        r.converged = converged;
        return r;
    }
};

std::vector<double> signed_gradient(const Tracker& t, const std::vector<double>& x) {
    auto g = parameter_shift_gradient(t.obj, t.obj.to_binding(x), t.config.gradient);
    for (auto& v : g) v *= t.sign;
    return g;
}

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

OptResult run_gradient_descent(Tracker& t, std::vector<double> x) {
    double fx = t.f(x);
    t.record(0, fx, std::nullopt);
    double step = t.config.step_size;
    bool converged = false;
    int iteration = 0;
    while (static_cast<int>(t.trace.size()) < t.config.max_iters) {
        const auto g = signed_gradient(t, x);
        const double gn = norm2(g);
        if (gn < t.config.tolerance) {
            converged = true;
            break;
        }
        // Backtracking line search with Armijo acceptance; accepted steps
        // never increase the objective, so the trace is non-increasing.
        bool accepted = false;
        double fnext = fx;
        std::vector<double> xnext;
        while (step > 1e-14) {
            xnext = x;
            for (std::size_t i = 0; i < x.size(); ++i) xnext[i] -= step * g[i];
            fnext = t.f(xnext);
            if (fnext <= fx - 1e-4 * step * gn * gn) {
                accepted = true;
                break;
            }
            step /= 2.0;
        }
        if (!accepted) {
            converged = true; // no descent direction progress left
            break;
        }
        ++iteration;
        x = std::move(xnext);
        const double delta = fx - fnext;
        fx = fnext;
        t.record(iteration, fx, gn);
        step = std::min(step * 2.0, 4.0); // regrow after line-search shrinks
        if (delta < t.config.tolerance) {
            converged = true;
            break;
        }
    }
    return t.finish(x, fx, converged);
}

OptResult run_spsa(Tracker& t, std::vector<double> x) {
    Rng rng(t.config.seed);
    double fx = t.f(x);
    t.record(0, fx, std::nullopt);
    double best_f = fx;
    std::vector<double> best_x = x;
    const double stability = 0.1 * t.config.max_iters;
    bool converged = false;
    int k = 0;
    while (static_cast<int>(t.trace.size()) < t.config.max_iters) {
        const double ak = t.config.step_size / std::pow(k + 1 + stability, t.config.spsa_alpha);
        const double ck = t.config.spsa_c / std::pow(k + 1, t.config.spsa_gamma);
        std::vector<double> delta(x.size());
        for (auto& d : delta) d = rng.next_u64() & 1 ? 1.0 : -1.0;
        std::vector<double> xp = x;
        std::vector<double> xm = x;
        for (std::size_t i = 0; i < x.size(); ++i) {
            xp[i] += ck * delta[i];
            xm[i] -= ck * delta[i];
        }
        const double fp = t.f(xp);
        const double fm = t.f(xm);
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] -= ak * (fp - fm) / (2.0 * ck) * delta[i];
        }
        const double fprev = fx;
        fx = t.f(x);
        ++k;
        t.record(k, fx, std::nullopt);
        if (fx < best_f) {
            best_f = fx;
            best_x = x;
        }
        if (std::abs(fprev - fx) < t.config.tolerance) {
            converged = true;
            break;
        }
    }
    return t.finish(best_x, best_f, converged);
}

OptResult run_nelder_mead(Tracker& t, std::vector<double> x0) {
    const std::size_t d = x0.size();
    std::vector<std::vector<double>> xs;
    std::vector<double> fs;
    xs.push_back(x0);
    fs.push_back(t.f(x0));
    for (std::size_t i = 0; i < d; ++i) {
        auto xi = x0;
        xi[i] += t.config.step_size;
        xs.push_back(xi);
        fs.push_back(t.f(xi));
    }
    auto order = [&]() {
        std::vector<std::size_t> idx(xs.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
        std::vector<std::vector<double>> xs2;
        std::vector<double> fs2;
        for (auto i : idx) {
            xs2.push_back(xs[i]);
            fs2.push_back(fs[i]);
        }
        xs = std::move(xs2);
        fs = std::move(fs2);
    };
    order();
    t.record(0, fs[0], std::nullopt);

    bool converged = false;
    int iteration = 0;
    while (static_cast<int>(t.trace.size()) < t.config.max_iters) {
        if (std::abs(fs.back() - fs.front()) < t.config.tolerance) {
            converged = true;
            break;
        }
        // Centroid of all but the worst vertex.
        std::vector<double> c(d, 0.0);
        for (std::size_t v = 0; v + 1 < xs.size(); ++v) {
            for (std::size_t i = 0; i < d; ++i) c[i] += xs[v][i];
        }
        for (auto& ci : c) ci /= static_cast<double>(d);

        auto blend = [&](double coeff) {
            std::vector<double> p(d);
            for (std::size_t i = 0; i < d; ++i) p[i] = c[i] + coeff * (xs.back()[i] - c[i]);
            return p;
        };
        const auto xr = blend(-1.0); // reflection
        const double fr = t.f(xr);
        if (fr < fs.front()) {
            const auto xe = blend(-2.0); // expansion
            const double fe = t.f(xe);
            if (fe < fr) {
                xs.back() = xe;
                fs.back() = fe;
            } else {
                xs.back() = xr;
                fs.back() = fr;
            }
        } else if (fr < fs[fs.size() - 2]) {
            xs.back() = xr;
            fs.back() = fr;
        } else {
            const auto xc = blend(fr < fs.back() ? -0.5 : 0.5); // contraction
            const double fc = t.f(xc);
            if (fc < std::min(fr, fs.back())) {
                xs.back() = xc;
                fs.back() = fc;
            } else {
                // Shrink toward the best vertex.
                for (std::size_t v = 1; v < xs.size(); ++v) {
                    for (std::size_t i = 0; i < d; ++i) {
                        xs[v][i] = xs[0][i] + 0.5 * (xs[v][i] - xs[0][i]);
                    }
                    fs[v] = t.f(xs[v]);
                }
            }
        }
        order();
        ++iteration;
        t.record(iteration, fs[0], std::nullopt);
    }
    return t.finish(xs[0], fs[0], converged);
}

} // namespace

OptResult optimize(const Objective& obj, const OptimizerConfig& config,
                   const ParameterBinding& start) {
    if (config.max_iters < 1) throw ValidationError("max_iters must be >= 1");
    if (!(config.tolerance > 0.0)) throw ValidationError("tolerance must be positive");

    Tracker t{obj, config, obj.sense() == Sense::Minimize ? 1.0 : -1.0, {}};
    obj.reset_evaluations();
    const std::vector<double> x0 = obj.to_vector(start);

    if (x0.empty()) {
        const double fx = t.f(x0);
        t.record(0, fx, std::nullopt);
        return t.finish(x0, fx, true);
    }

    switch (config.method) {
    case OptMethod::GradientDescent: return run_gradient_descent(t, x0);
    case OptMethod::Spsa: return run_spsa(t, x0);
    case OptMethod::NelderMead: return run_nelder_mead(t, x0);
    }
    throw Error("unhandled optimizer method");
}

} // namespace ansatzforge
