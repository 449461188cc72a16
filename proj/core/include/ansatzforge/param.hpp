#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ansatzforge/errors.hpp"

namespace ansatzforge {

/// Map from parameter name to bound value (radians).
using ParameterBinding = std::map<std::string, double>;

/// Affine expression over named parameters: offset + sum(coeff_k * theta_k).
///
/// Gate angles are ParamExprs so that builders can reuse one circuit
/// parameter in several places with different prefactors (Pauli-exponential
/// prefactors, controlled-gate decompositions, daggered rotations). The
/// coefficients feed straight into the chain rule of the shift gradient.
class ParamExpr {
public:
    ParamExpr() : offset_(0.0) {}
    /*implicit*/ ParamExpr(double constant) : offset_(constant) {}

    static ParamExpr symbol(std::string name, double coeff = 1.0, double offset = 0.0) {
        ParamExpr e(offset);
        e.terms_.emplace_back(std::move(name), coeff);
        return e;
    }

    ParamExpr& add_term(std::string name, double coeff) {
        for (auto& [n, c] : terms_) {
            if (n == name) {
                c += coeff;
                return *this;
            }
        }
        terms_.emplace_back(std::move(name), coeff);
        return *this;
    }

    ParamExpr& shift(double delta) {
        offset_ += delta;
        return *this;
    }

    ParamExpr negated() const {
        ParamExpr e(-offset_);
        for (const auto& [n, c] : terms_) e.terms_.emplace_back(n, -c);
        return e;
    }

    double eval(const ParameterBinding& binding) const {
        double v = offset_;
        for (const auto& [name, coeff] : terms_) {
            auto it = binding.find(name);
            if (it == binding.end()) {
                throw BindingError("unbound symbolic parameter '" + name + "'");
            }
            v += coeff * it->second;
        }
        return v;
    }

    bool is_constant() const { return terms_.empty(); }
    double offset() const { return offset_; }
    const std::vector<std::pair<std::string, double>>& terms() const { return terms_; }

private:
    double offset_;
    std::vector<std::pair<std::string, double>> terms_;
};

} // namespace ansatzforge
