#include "ansatzforge/circuit.hpp"

#include <algorithm>
#include <cmath>

#include "ansatzforge/errors.hpp"

namespace ansatzforge {

namespace detail {
void apply_matrix_inplace(std::vector<cx>& amps, int num_qubits, const Eigen::MatrixXcd& m,
                          const std::vector<int>& targets);
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw SizeError("circuit qubit count outside supported range");
    }
}

void Circuit::declare_parameter(const std::string& name) {
    if (std::find(params_.begin(), params_.end(), name) == params_.end()) {
        params_.push_back(name);
    }
}

void Circuit::register_params(const Gate& g) {
    for (const auto& expr : g.angles()) {
        for (const auto& [name, coeff] : expr.terms()) {
            (void)coeff;
            declare_parameter(name);
        }
    }
    if (g.inner()) register_params(*g.inner());
}

void Circuit::add(Gate gate, std::vector<int> targets, std::optional<int> condition) {
    if (static_cast<int>(targets.size()) != gate.arity()) {
        throw TargetError("gate " + gate.name() + " expects " + std::to_string(gate.arity()) +
                          " targets");
    }
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] < 0 || targets[i] >= num_qubits_) {
            throw TargetError("target qubit " + std::to_string(targets[i]) + " out of range");
        }
        for (std::size_t j = i + 1; j < targets.size(); ++j) {
            if (targets[i] == targets[j]) {
                throw TargetError("duplicate target qubit " + std::to_string(targets[i]));
            }
        }
    }
    if (condition && (*condition < 0 || *condition >= num_measurements_)) {
        throw OrderingError("condition references measurement record " +
                            std::to_string(*condition) + " which does not exist yet");
    }
    register_params(gate);
    ops_.push_back(GateOp{std::move(gate), std::move(targets), condition});
}

int Circuit::measure(int qubit) {
    if (qubit < 0 || qubit >= num_qubits_) {
        throw TargetError("measured qubit " + std::to_string(qubit) + " out of range");
    }
    ops_.push_back(MeasureOp{qubit});
    return num_measurements_++;
}

void Circuit::barrier() { ops_.push_back(BarrierOp{}); }

void Circuit::append(const Circuit& other) {
    if (other.num_qubits_ != num_qubits_) {
        throw SizeError("appended circuit has a different qubit count");
    }
    const int shift = num_measurements_;
    for (const auto& op : other.ops_) {
        if (const auto* g = std::get_if<GateOp>(&op)) {
            std::optional<int> cond = g->condition;
            if (cond) cond = *cond + shift;
            add(g->gate, g->targets, cond);
        } else if (const auto* m = std::get_if<MeasureOp>(&op)) {
            measure(m->qubit);
        } else {
            barrier();
        }
    }
}

void Circuit::check_binding(const ParameterBinding& binding) const {
    for (const auto& name : params_) {
        if (!binding.count(name)) {
            throw BindingError("binding is missing parameter '" + name + "'");
        }
    }
}

namespace {

Eigen::MatrixXcd shifted_unitary(const GateOp& op, const ParameterBinding& binding,
                                 const std::vector<AngleShift>& shifts, std::size_t op_index) {
    bool any = false;
    for (const auto& s : shifts)
        if (s.op_index == op_index) any = true;
    if (!any) return op.gate.unitary(binding);
    Gate g = op.gate;
    for (const auto& s : shifts) {
        if (s.op_index == op_index) g.angles().at(s.slot).shift(s.delta);
    }
    return g.unitary(binding);
}

} // namespace

RunResult run_circuit(const Circuit& circuit, const ParameterBinding& binding,
                      const StateVector& initial, Rng& rng) {
    if (initial.num_qubits() != circuit.num_qubits()) {
        throw SizeError("initial state qubit count does not match circuit");
    }
    circuit.check_binding(binding);
    StateVector state = initial;
    std::vector<MeasurementRecord> records;
    for (const auto& op : circuit.ops()) {
        if (const auto* g = std::get_if<GateOp>(&op)) {
            if (g->condition) {
                if (*g->condition >= static_cast<int>(records.size())) {
                    throw OrderingError("conditioned op runs before its measurement");
                }
                if (records[*g->condition].outcome != 1) continue;
            }
            state = apply_gate(state, g->gate, g->targets, binding);
        } else if (const auto* m = std::get_if<MeasureOp>(&op)) {
            auto [record, next] = measure_qubit(state, m->qubit, rng);
            records.push_back(record);
            state = std::move(next);
        }
    }
    return RunResult{std::move(state), std::move(records)};
}

std::vector<Branch> enumerate_branches(const Circuit& circuit, const ParameterBinding& binding,
                                       const StateVector& initial,
                                       const std::vector<AngleShift>& shifts) {
    if (initial.num_qubits() != circuit.num_qubits()) {
        throw SizeError("initial state qubit count does not match circuit");
    }
    circuit.check_binding(binding);

    std::vector<Branch> live;
    live.push_back(Branch{1.0, initial, {}});
    std::size_t op_index = 0;
    for (const auto& op : circuit.ops()) {
        if (const auto* g = std::get_if<GateOp>(&op)) {
            const Eigen::MatrixXcd u = shifted_unitary(*g, binding, shifts, op_index);
            for (auto& br : live) {
                if (g->condition) {
                    if (*g->condition >= static_cast<int>(br.records.size())) {
                        throw OrderingError("conditioned op runs before its measurement");
                    }
                    if (br.records[*g->condition].outcome != 1) continue;
                }
                // Validated against the circuit register in Circuit::add.
                StateVector next = br.state;
                detail::apply_matrix_inplace(next.amps_, next.num_qubits_, u, g->targets);
                br.state = std::move(next);
            }
        } else if (const auto* m = std::get_if<MeasureOp>(&op)) {
            std::vector<Branch> split;
            split.reserve(live.size() * 2);
            const std::uint64_t mask = std::uint64_t{1} << m->qubit;
            for (auto& br : live) {
                double p1 = 0.0;
                for (std::uint64_t i = 0; i < br.state.dim(); ++i) {
                    if (i & mask) p1 += std::norm(br.state[i]);
                }
                const double probs[2] = {1.0 - p1, p1};
                for (int outcome = 0; outcome < 2; ++outcome) {
                    if (probs[outcome] < 1e-30) continue;
                    std::vector<cx> amps(br.state.dim(), cx{0.0, 0.0});
                    const double scale = 1.0 / std::sqrt(probs[outcome]);
                    for (std::uint64_t i = 0; i < br.state.dim(); ++i) {
                        const bool bit = (i & mask) != 0;
                        if (bit == (outcome == 1)) amps[i] = br.state[i] * scale;
                    }
                    Branch child{br.probability * probs[outcome],
                                 StateVector(br.state.num_qubits(), std::move(amps)), br.records};
                    child.records.push_back(MeasurementRecord{m->qubit, outcome, probs[outcome]});
                    split.push_back(std::move(child));
                }
            }
            live = std::move(split);
        }
        ++op_index;
    }
    return live;
}

Eigen::MatrixXcd circuit_to_unitary(const Circuit& circuit, const ParameterBinding& binding) {
    if (circuit.num_qubits() > kMaxDenseQubits) {
        throw SizeError("dense unitary extraction is capped at " +
                        std::to_string(kMaxDenseQubits) + " qubits");
    }
    if (circuit.has_measurements()) {
        throw ExportError("circuit contains measurements; it has no unitary");
    }
    circuit.check_binding(binding);
    const std::uint64_t dim = std::uint64_t{1} << circuit.num_qubits();
    Eigen::MatrixXcd u(dim, dim);
    Rng rng(0); // never consulted: no measurements present
    for (std::uint64_t col = 0; col < dim; ++col) {
        const StateVector out =
            run_circuit(circuit, binding, StateVector::basis(circuit.num_qubits(), col), rng).state;
        for (std::uint64_t row = 0; row < dim; ++row) u(row, col) = out[row];
    }
    return u;
}

namespace {

ParamExpr scale_expr(const ParamExpr& u, double s) {
    ParamExpr r(u.offset() * s);
    for (const auto& [n, c] : u.terms()) r.add_term(n, c * s);
    return r;
}

ParamExpr combine_expr(const ParamExpr& u, double cu, const ParamExpr& v, double cv) {
    ParamExpr r(u.offset() * cu + v.offset() * cv);
    for (const auto& [n, c] : u.terms()) r.add_term(n, c * cu);
    for (const auto& [n, c] : v.terms()) r.add_term(n, c * cv);
    return r;
}

/// Controlled single-qubit rotations written out in elementary gates, with
/// angle expressions kept affine so the shift-rule gradient stays exact.
void emit_controlled_decomposed(Circuit& out, const Gate& inner, int control, int target) {
    const auto& a = inner.angles();
    switch (inner.kind()) {
    case GateKind::X:
        out.cnot(control, target);
        return;
    case GateKind::Z:
        out.cz(control, target);
        return;
    case GateKind::RX:
        out.h(target);
        emit_controlled_decomposed(out, Gate::rz(a[0]), control, target);
        out.h(target);
        return;
    case GateKind::RZ:
        // rz(t/2) target; cx; rz(-t/2) target; cx  ==  controlled-RZ(t)
        out.rz(scale_expr(a[0], 0.5), target);
        out.cnot(control, target);
        out.rz(scale_expr(a[0], -0.5), target);
        out.cnot(control, target);
        return;
    case GateKind::RY:
        out.ry(scale_expr(a[0], 0.5), target);
        out.cnot(control, target);
        out.ry(scale_expr(a[0], -0.5), target);
        out.cnot(control, target);
        return;
    case GateKind::U3: {
        // Standard controlled-u3 identity (u1 replaced by rz, which shifts
        // the result only by an unconditional global phase):
        //   rz((l+p)/2) c; rz((l-p)/2) t; cx; u3(-t/2, 0, -(p+l)/2) t;
        //   cx; u3(t/2, p, 0) t;
        const ParamExpr& th = a[0];
        const ParamExpr& ph = a[1];
        const ParamExpr& la = a[2];
        out.rz(combine_expr(la, 0.5, ph, 0.5), control);
        out.rz(combine_expr(la, 0.5, ph, -0.5), target);
        out.cnot(control, target);
        out.u3(scale_expr(th, -0.5), ParamExpr(0.0), combine_expr(ph, -0.5, la, -0.5), target);
        out.cnot(control, target);
        out.u3(scale_expr(th, 0.5), ph, ParamExpr(0.0), target);
        return;
    }
    default:
        throw ExportError("cannot defer a conditioned " + inner.name() + " gate");
    }
}

} // namespace

Circuit defer_measurements(const Circuit& circuit) {
    // Map each measurement record to its qubit, refuse reuse of that qubit.
    std::vector<int> record_qubit;
    Circuit out(circuit.num_qubits());
    for (const auto& name : circuit.parameter_table()) out.declare_parameter(name);

    for (const auto& op : circuit.ops()) {
        if (const auto* m = std::get_if<MeasureOp>(&op)) {
            for (int q : record_qubit) {
                if (q == m->qubit) {
                    throw OrderingError("qubit measured twice; cannot defer");
                }
            }
            record_qubit.push_back(m->qubit);
        } else if (const auto* g = std::get_if<GateOp>(&op)) {
            for (int t : g->targets) {
                for (int q : record_qubit) {
                    if (t == q) {
                        throw OrderingError("measured qubit reused by a later gate; cannot defer");
                    }
                }
            }
            if (!g->condition) {
                out.add(g->gate, g->targets);
                continue;
            }
            const int control = record_qubit.at(*g->condition);
            if (g->targets.size() == 1 && !g->gate.inner()) {
                emit_controlled_decomposed(out, g->gate, control, g->targets[0]);
            } else {
                std::vector<int> targets{control};
                targets.insert(targets.end(), g->targets.begin(), g->targets.end());
                out.add(Gate::controlled(g->gate), std::move(targets));
            }
        } else {
            out.barrier();
        }
    }
    return out;
}

} // namespace ansatzforge
