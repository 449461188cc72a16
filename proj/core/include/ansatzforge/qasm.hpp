#pragma once

#include <string>

#include "ansatzforge/circuit.hpp"

namespace ansatzforge {

/// Serializes a fully bound circuit as OpenQASM 2.0 text.
///
/// Output is deterministic (byte-identical for identical inputs); angles are
/// printed with 17 significant digits. ZZ and R2 gates are emitted as their
/// elementary decompositions; classically-conditioned ops use one single-bit
/// creg per measurement record and `if (reg == 1)` syntax. Throws ExportError
/// for gates with no QASM 2.0 mapping, naming the gate.
std::string to_qasm(const Circuit& circuit, const ParameterBinding& binding);

} // namespace ansatzforge
