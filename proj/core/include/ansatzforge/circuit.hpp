#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "ansatzforge/gate.hpp"
#include "ansatzforge/state_vector.hpp"

namespace ansatzforge {

struct GateOp {
    Gate gate;
    std::vector<int> targets;
    /// When set, the op runs only if measurement record #condition came out 1.
    std::optional<int> condition;
};

struct MeasureOp {
    int qubit;
};

/// Structural marker separating logical layers; a no-op in simulation.
struct BarrierOp {};

using CircuitOp = std::variant<GateOp, MeasureOp, BarrierOp>;

/// Ordered gate/measurement program over a fixed qubit register.
///
/// Circuits are immutable values once built; running one never mutates it.
/// Symbolic parameters are collected into parameter_table in first-use
/// order, which is also the component order of gradient vectors.
class Circuit {
public:
    explicit Circuit(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    const std::vector<CircuitOp>& ops() const { return ops_; }
    const std::vector<std::string>& parameter_table() const { return params_; }
    int num_measurements() const { return num_measurements_; }

    /// Registers a parameter name ahead of first gate use (fixes its
    /// position in parameter_table).
    void declare_parameter(const std::string& name);

    void add(Gate gate, std::vector<int> targets, std::optional<int> condition = std::nullopt);
    /// Appends a measurement and returns its record index.
    int measure(int qubit);
    void barrier();

    // Fluent helpers for the common gates.
    void h(int q) { add(Gate::h(), {q}); }
    void x(int q) { add(Gate::x(), {q}); }
    void y(int q) { add(Gate::y(), {q}); }
    void z(int q) { add(Gate::z(), {q}); }
    void s(int q) { add(Gate::s(), {q}); }
    void rx(ParamExpr t, int q) { add(Gate::rx(std::move(t)), {q}); }
    void ry(ParamExpr t, int q) { add(Gate::ry(std::move(t)), {q}); }
    void rz(ParamExpr t, int q) { add(Gate::rz(std::move(t)), {q}); }
    void u3(ParamExpr t, ParamExpr p, ParamExpr l, int q) {
        add(Gate::u3(std::move(t), std::move(p), std::move(l)), {q});
    }
    void zz(ParamExpr t, int a, int b) { add(Gate::zz(std::move(t)), {a, b}); }
    void cnot(int control, int target) { add(Gate::cnot(), {control, target}); }
    void cz(int a, int b) { add(Gate::cz(), {a, b}); }

    /// Appends another circuit; its record indices and conditions shift by
    /// this circuit's measurement count.
    void append(const Circuit& other);

    /// True when every gate angle is constant or covered by `binding`.
    void check_binding(const ParameterBinding& binding) const;

    bool has_measurements() const { return num_measurements_ > 0; }

private:
    void register_params(const Gate& g);

    int num_qubits_;
    std::vector<CircuitOp> ops_;
    std::vector<std::string> params_;
    int num_measurements_ = 0;
};

struct RunResult {
    StateVector state;
    std::vector<MeasurementRecord> records;
};

/// One deterministic branch of a measured circuit: the joint probability of
/// its outcome sequence, the conditioned final state, and the records.
struct Branch {
    double probability;
    StateVector state;
    std::vector<MeasurementRecord> records;
};

/// Optional per-occurrence angle nudges used by the shift-rule gradient:
/// before op `op_index` runs, `delta` is added to angle slot `slot`.
struct AngleShift {
    std::size_t op_index;
    std::size_t slot;
    double delta;
};

/// Executes the circuit on `initial`, sampling measurement outcomes from
/// `rng`. Conditioned ops run only when their referenced record is 1.
RunResult run_circuit(const Circuit& circuit, const ParameterBinding& binding,
                      const StateVector& initial, Rng& rng);

/// Deterministic variant of run_circuit: follows every measurement branch
/// and returns all outcomes with nonzero probability, weighted by the Born
/// rule. A measurement-free circuit yields exactly one branch (p = 1).
std::vector<Branch> enumerate_branches(const Circuit& circuit, const ParameterBinding& binding,
                                       const StateVector& initial,
                                       const std::vector<AngleShift>& shifts = {});

/// Dense 2^n x 2^n unitary of a measurement-free circuit (n <= 10).
Eigen::MatrixXcd circuit_to_unitary(const Circuit& circuit, const ParameterBinding& binding);

/// Rewrites measure-then-condition patterns into coherent controlled gates
/// (deferred-measurement form). The measured qubit must not be reused.
/// Controlled rotations are emitted pre-decomposed into elementary gates so
/// the result stays shift-rule differentiable.
Circuit defer_measurements(const Circuit& circuit);

} // namespace ansatzforge
