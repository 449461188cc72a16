#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ansatzforge/gate.hpp"
#include "ansatzforge/rng.hpp"

namespace ansatzforge {

/// Hard cap on simulated qubits; 2^24 amplitudes is ~256 MiB and is as far
/// as desk-scale verification ever needs to go.
inline constexpr int kMaxQubits = 24;
/// Cap for dense unitary extraction and dense observable matrices.
inline constexpr int kMaxDenseQubits = 10;

/// Full 2^n-amplitude pure state.
///
/// Qubit ordering is little-endian throughout the library: qubit k is bit k
/// of the basis index, so |q1 q0> = |01> is basis index 1. Bitstring
/// renderings put the highest qubit first to match that ket notation.
class StateVector {
public:
    StateVector(int num_qubits, std::vector<cx> amplitudes);

    static StateVector zero(int num_qubits);
    static StateVector basis(int num_qubits, std::uint64_t index);

    int num_qubits() const { return num_qubits_; }
    std::uint64_t dim() const { return amps_.size(); }
    std::span<const cx> amplitudes() const { return amps_; }
    const cx& operator[](std::uint64_t i) const { return amps_[i]; }

    double norm() const;

    /// Renders basis index i as a bitstring, qubit n-1 first.
    static std::string bitstring(std::uint64_t index, int num_qubits);

private:
    friend StateVector apply_gate(const StateVector&, const Gate&, const std::vector<int>&,
                                  const ParameterBinding&);
    friend class Circuit;
    friend struct SimBuffer;

    int num_qubits_;
    std::vector<cx> amps_;
};

struct MeasurementRecord {
    int qubit;
    int outcome;        // 0 or 1
    double probability; // Born probability of the recorded outcome
};

/// new_zero_state(n): |0...0> on n qubits. Throws SizeError outside 1..24.
StateVector new_zero_state(int num_qubits);

/// Applies a bound gate to the given targets and returns the new state.
/// targets[j] feeds bit j of the gate matrix index.
StateVector apply_gate(const StateVector& state, const Gate& gate,
                       const std::vector<int>& targets, const ParameterBinding& binding = {});

/// Projective measurement of one qubit in the computational basis.
/// Returns the record and the renormalized post-measurement state.
std::pair<MeasurementRecord, StateVector> measure_qubit(const StateVector& state, int qubit,
                                                        Rng& rng);

/// Samples computational-basis bitstrings; counts sum to shots.
std::map<std::string, std::uint64_t> sample(const StateVector& state, std::uint64_t shots,
                                            Rng& rng);

/// <a|b>; states must have equal qubit counts.
cx inner_product(const StateVector& a, const StateVector& b);

} // namespace ansatzforge
