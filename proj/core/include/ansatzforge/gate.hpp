#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ansatzforge/param.hpp"

namespace ansatzforge {

using cx = std::complex<double>;

enum class GateKind {
    H,
    X,
    Y,
    Z,
    S,
    RX,
    RY,
    RZ,
    R2,   // R(theta, phi) = RZ(phi + pi) * RY(theta + pi/2), the SPA rotation
    ZZ,   // exp(-i theta (Z (x) Z) / 2)
    CNOT, // targets: {control, target}
    CZ,
    SWAP,
    U3, // u3(theta, phi, lambda): [[cos, -e^{i l} sin], [e^{i p} sin, e^{i(p+l)} cos]]
    Controlled,
};

/// A gate: kind plus angle expressions. Rotation conventions are
/// R_P(theta) = exp(-i theta P / 2) for P in {X, Y, Z, Z(x)Z}.
///
/// Gates are values; a Controlled gate wraps an inner gate and lists its
/// control count. Targets of a multi-qubit gate map onto the bits of the
/// gate matrix index in order: targets[j] is bit j (controls come first
/// for CNOT/Controlled).
class Gate {
public:
    static Gate h() { return Gate(GateKind::H); }
    static Gate x() { return Gate(GateKind::X); }
    static Gate y() { return Gate(GateKind::Y); }
    static Gate z() { return Gate(GateKind::Z); }
    static Gate s() { return Gate(GateKind::S); }
    static Gate rx(ParamExpr theta) { return Gate(GateKind::RX, {std::move(theta)}); }
    static Gate ry(ParamExpr theta) { return Gate(GateKind::RY, {std::move(theta)}); }
    static Gate rz(ParamExpr theta) { return Gate(GateKind::RZ, {std::move(theta)}); }
    static Gate r2(ParamExpr theta, ParamExpr phi) {
        return Gate(GateKind::R2, {std::move(theta), std::move(phi)});
    }
    static Gate zz(ParamExpr theta) { return Gate(GateKind::ZZ, {std::move(theta)}); }
    static Gate cnot() { return Gate(GateKind::CNOT); }
    static Gate cz() { return Gate(GateKind::CZ); }
    static Gate swap() { return Gate(GateKind::SWAP); }
    static Gate u3(ParamExpr theta, ParamExpr phi, ParamExpr lambda) {
        return Gate(GateKind::U3, {std::move(theta), std::move(phi), std::move(lambda)});
    }
    static Gate controlled(Gate inner, int num_controls = 1);

    GateKind kind() const { return kind_; }
    const std::vector<ParamExpr>& angles() const { return angles_; }
    std::vector<ParamExpr>& angles() { return angles_; }

    /// Number of qubits the gate acts on, controls included.
    int arity() const;

    bool is_parameterized() const;

    const Gate* inner() const { return inner_.get(); }
    int num_controls() const { return num_controls_; }

    /// Dense unitary of dimension 2^arity. Throws BindingError if a
    /// symbolic angle is not covered by the binding.
    Eigen::MatrixXcd unitary(const ParameterBinding& binding = {}) const;

    std::string name() const;

private:
    explicit Gate(GateKind kind, std::vector<ParamExpr> angles = {})
        : kind_(kind), angles_(std::move(angles)) {}

    GateKind kind_;
    std::vector<ParamExpr> angles_;
    std::shared_ptr<const Gate> inner_; // Controlled only
    int num_controls_ = 0;
};

} // namespace ansatzforge
