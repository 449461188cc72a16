#include "ansatzforge/gate.hpp"

#include <cmath>

#include "ansatzforge/errors.hpp"

namespace ansatzforge {

namespace {

constexpr cx kI{0.0, 1.0};

Eigen::Matrix2cd rx_matrix(double t) {
    Eigen::Matrix2cd m;
    m << std::cos(t / 2), -kI * std::sin(t / 2), -kI * std::sin(t / 2), std::cos(t / 2);
    return m;
}

Eigen::Matrix2cd ry_matrix(double t) {
    Eigen::Matrix2cd m;
    m << std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2);
    return m;
}

Eigen::Matrix2cd rz_matrix(double t) {
    Eigen::Matrix2cd m;
    m << std::exp(-kI * (t / 2)), 0, 0, std::exp(kI * (t / 2));
    return m;
}

Eigen::Matrix2cd u3_matrix(double t, double p, double l) {
    Eigen::Matrix2cd m;
    m << std::cos(t / 2), -std::exp(kI * l) * std::sin(t / 2),
        std::exp(kI * p) * std::sin(t / 2), std::exp(kI * (p + l)) * std::cos(t / 2);
    return m;
}

} // namespace

Gate Gate::controlled(Gate inner, int num_controls) {
    if (num_controls < 1) throw SizeError("Controlled gate needs at least one control");
    if (inner.kind() == GateKind::Controlled)
        return controlled(*inner.inner(), num_controls + inner.num_controls());
    Gate g(GateKind::Controlled);
    g.inner_ = std::make_shared<const Gate>(std::move(inner));
    g.num_controls_ = num_controls;
    return g;
}

int Gate::arity() const {
    switch (kind_) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::S:
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::R2:
    case GateKind::U3:
        return 1;
    case GateKind::ZZ:
    case GateKind::CNOT:
    case GateKind::CZ:
    case GateKind::SWAP:
        return 2;
    case GateKind::Controlled:
        return num_controls_ + inner_->arity();
    }
    return 0;
}

bool Gate::is_parameterized() const {
    for (const auto& a : angles_)
        if (!a.is_constant()) return true;
    if (inner_) return inner_->is_parameterized();
    return false;
}

Eigen::MatrixXcd Gate::unitary(const ParameterBinding& binding) const {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    switch (kind_) {
    case GateKind::H: {
        Eigen::Matrix2cd m;
        m << inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2;
        return m;
    }
    case GateKind::X: {
        Eigen::Matrix2cd m;
        m << 0, 1, 1, 0;
        return m;
    }
    case GateKind::Y: {
        Eigen::Matrix2cd m;
        m << 0, -kI, kI, 0;
        return m;
    }
    case GateKind::Z: {
        Eigen::Matrix2cd m;
        m << 1, 0, 0, -1;
        return m;
    }
    case GateKind::S: {
        Eigen::Matrix2cd m;
        m << 1, 0, 0, kI;
        return m;
    }
    case GateKind::RX:
        return rx_matrix(angles_[0].eval(binding));
    case GateKind::RY:
        return ry_matrix(angles_[0].eval(binding));
    case GateKind::RZ:
        return rz_matrix(angles_[0].eval(binding));
    case GateKind::R2:
        return rz_matrix(angles_[1].eval(binding) + M_PI) *
               ry_matrix(angles_[0].eval(binding) + M_PI / 2);
    case GateKind::U3:
        return u3_matrix(angles_[0].eval(binding), angles_[1].eval(binding),
                         angles_[2].eval(binding));
    case GateKind::ZZ: {
        const double t = angles_[0].eval(binding);
        Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
        const cx minus = std::exp(-kI * (t / 2)); // even parity of the two bits
        const cx plus = std::exp(kI * (t / 2));
        m(0, 0) = minus;
        m(1, 1) = plus;
        m(2, 2) = plus;
        m(3, 3) = minus;
        return m;
    }
    case GateKind::CNOT: {
        // bit 0 of the matrix index is the control, bit 1 the target
        Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
        m(0, 0) = 1;
        m(3, 1) = 1;
        m(2, 2) = 1;
        m(1, 3) = 1;
        return m;
    }
    case GateKind::CZ: {
        Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
        m(3, 3) = -1;
        return m;
    }
    case GateKind::SWAP: {
        Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
        m(0, 0) = 1;
        m(2, 1) = 1;
        m(1, 2) = 1;
        m(3, 3) = 1;
        return m;
    }
    case GateKind::Controlled: {
        const Eigen::MatrixXcd u = inner_->unitary(binding);
        const int k = inner_->arity();
        const int dim = 1 << (num_controls_ + k);
        const int cmask = (1 << num_controls_) - 1;
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim);
        // Act with the inner unitary only where every control bit is set.
        for (int col = 0; col < dim; ++col) {
            if ((col & cmask) != cmask) continue;
            m.col(col).setZero();
            for (int r = 0; r < (1 << k); ++r) {
                const int row = cmask | (r << num_controls_);
                m(row, col) = u(r, col >> num_controls_);
            }
        }
        return m;
    }
    }
    throw Error("unhandled gate kind");
}

std::string Gate::name() const {
    switch (kind_) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::S: return "S";
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::R2: return "R2";
    case GateKind::ZZ: return "ZZ";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CZ: return "CZ";
    case GateKind::SWAP: return "SWAP";
    case GateKind::U3: return "U3";
    case GateKind::Controlled: return "C-" + inner_->name();
    }
    return "?";
}

} // namespace ansatzforge
