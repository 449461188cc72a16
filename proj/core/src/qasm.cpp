#include "ansatzforge/qasm.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <variant>

#include "ansatzforge/errors.hpp"

namespace ansatzforge {

namespace {

std::string fmt_angle(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string qref(int q) { return "q[" + std::to_string(q) + "]"; }

struct QasmWriter {
    std::ostringstream out;
    std::string prefix; // "if(mK==1) " for conditioned ops, else empty

    void line(const std::string& stmt) { out << prefix << stmt << "\n"; }

    void gate0(const std::string& name, int q) { line(name + " " + qref(q) + ";"); }
    void gate1(const std::string& name, double a, int q) {
        line(name + "(" + fmt_angle(a) + ") " + qref(q) + ";");
    }
    void two(const std::string& name, int a, int b) {
        line(name + " " + qref(a) + "," + qref(b) + ";");
    }
};

void emit_gate(QasmWriter& w, const Gate& g, const std::vector<int>& t,
               const ParameterBinding& binding) {
    auto angle = [&](std::size_t i) { return g.angles().at(i).eval(binding); };
    switch (g.kind()) {
    case GateKind::H: w.gate0("h", t[0]); return;
    case GateKind::X: w.gate0("x", t[0]); return;
    case GateKind::Y: w.gate0("y", t[0]); return;
    case GateKind::Z: w.gate0("z", t[0]); return;
    case GateKind::S: w.gate0("s", t[0]); return;
    case GateKind::RX: w.gate1("rx", angle(0), t[0]); return;
    case GateKind::RY: w.gate1("ry", angle(0), t[0]); return;
    case GateKind::RZ: w.gate1("rz", angle(0), t[0]); return;
    case GateKind::R2:
        w.gate1("ry", angle(0) + M_PI / 2, t[0]);
        w.gate1("rz", angle(1) + M_PI, t[0]);
        return;
    case GateKind::U3:
        w.line("u3(" + fmt_angle(angle(0)) + "," + fmt_angle(angle(1)) + "," +
               fmt_angle(angle(2)) + ") " + qref(t[0]) + ";");
        return;
    case GateKind::ZZ:
        w.two("cx", t[0], t[1]);
        w.gate1("rz", angle(0), t[1]);
        w.two("cx", t[0], t[1]);
        return;
    case GateKind::CNOT: w.two("cx", t[0], t[1]); return;
    case GateKind::CZ: w.two("cz", t[0], t[1]); return;
    case GateKind::SWAP: w.two("swap", t[0], t[1]); return;
    case GateKind::Controlled: {
        if (g.num_controls() != 1) {
            throw ExportError("no QASM 2.0 mapping for gate " + g.name());
        }
        const Gate& inner = *g.inner();
        const int c = t[0];
        const int q = t[1];
        auto iangle = [&](std::size_t i) { return inner.angles().at(i).eval(binding); };
        switch (inner.kind()) {
        case GateKind::X: w.two("cx", c, q); return;
        case GateKind::Y: w.two("cy", c, q); return;
        case GateKind::Z: w.two("cz", c, q); return;
        case GateKind::H: w.two("ch", c, q); return;
        case GateKind::RZ:
            w.line("crz(" + fmt_angle(iangle(0)) + ") " + qref(c) + "," + qref(q) + ";");
            return;
        case GateKind::RY:
            w.line("cu3(" + fmt_angle(iangle(0)) + ",0,0) " + qref(c) + "," + qref(q) + ";");
            return;
        case GateKind::RX:
            w.line("cu3(" + fmt_angle(iangle(0)) + "," + fmt_angle(-M_PI / 2) + "," +
                   fmt_angle(M_PI / 2) + ") " + qref(c) + "," + qref(q) + ";");
            return;
        case GateKind::U3:
            w.line("cu3(" + fmt_angle(iangle(0)) + "," + fmt_angle(iangle(1)) + "," +
                   fmt_angle(iangle(2)) + ") " + qref(c) + "," + qref(q) + ";");
            return;
        default:
            throw ExportError("no QASM 2.0 mapping for gate " + g.name());
        }
    }
    }
    throw ExportError("no QASM 2.0 mapping for gate " + g.name());
}

} // namespace

std::string to_qasm(const Circuit& circuit, const ParameterBinding& binding) {
    circuit.check_binding(binding);
    QasmWriter w;
    w.out << "OPENQASM 2.0;\n";
    w.out << "include \"qelib1.inc\";\n";
    w.out << "qreg q[" << circuit.num_qubits() << "];\n";
    for (int r = 0; r < circuit.num_measurements(); ++r) {
        w.out << "creg m" << r << "[1];\n";
    }
    int record = 0;
    for (const auto& op : circuit.ops()) {
        if (const auto* g = std::get_if<GateOp>(&op)) {
            w.prefix = g->condition ? "if(m" + std::to_string(*g->condition) + "==1) " : "";
            emit_gate(w, g->gate, g->targets, binding);
            w.prefix.clear();
        } else if (const auto* m = std::get_if<MeasureOp>(&op)) {
            w.line("measure " + qref(m->qubit) + " -> m" + std::to_string(record) + "[0];");
            ++record;
        } else {
            w.line("barrier q;");
        }
    }
    return w.out.str();
}

} // namespace ansatzforge
