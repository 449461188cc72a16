#include "ansatzforge/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ansatzforge/errors.hpp"

namespace ansatzforge {

namespace {

void check_qubit_count(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw SizeError("qubit count " + std::to_string(n) + " outside supported range 1.." +
                        std::to_string(kMaxQubits));
    }
}

} // namespace

StateVector::StateVector(int num_qubits, std::vector<cx> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
    check_qubit_count(num_qubits_);
    if (amps_.size() != (std::uint64_t{1} << num_qubits_)) {
        throw SizeError("amplitude count does not match 2^num_qubits");
    }
}

StateVector StateVector::zero(int num_qubits) { return basis(num_qubits, 0); }

StateVector StateVector::basis(int num_qubits, std::uint64_t index) {
    check_qubit_count(num_qubits);
    std::vector<cx> amps(std::uint64_t{1} << num_qubits, cx{0.0, 0.0});
    if (index >= amps.size()) throw SizeError("basis index out of range");
    amps[index] = cx{1.0, 0.0};
    return StateVector(num_qubits, std::move(amps));
}

double StateVector::norm() const {
    double s = 0.0;
    for (const cx& a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

std::string StateVector::bitstring(std::uint64_t index, int num_qubits) {
    std::string s(static_cast<std::size_t>(num_qubits), '0');
    for (int k = 0; k < num_qubits; ++k) {
        if ((index >> k) & 1ULL) s[num_qubits - 1 - k] = '1';
    }
    return s;
}

StateVector new_zero_state(int num_qubits) { return StateVector::zero(num_qubits); }

namespace detail {

void apply_matrix_inplace(std::vector<cx>& amps, int num_qubits, const Eigen::MatrixXcd& m,
                          const std::vector<int>& targets) {
    const int k = static_cast<int>(targets.size());
    const std::uint64_t dim = amps.size();

    if (k == 1) {
        const std::uint64_t mask = std::uint64_t{1} << targets[0];
        const std::uint64_t lo = mask - 1;
        const std::uint64_t hi = ~lo;
        const cx m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
        for (std::uint64_t i = 0; i < dim / 2; ++i) {
            const std::uint64_t i0 = ((i & hi) << 1) | (i & lo);
            const std::uint64_t i1 = i0 | mask;
            const cx a0 = amps[i0];
            const cx a1 = amps[i1];
            amps[i0] = m00 * a0 + m01 * a1;
            amps[i1] = m10 * a0 + m11 * a1;
        }
        return;
    }

    // General k-qubit gate: gather over the 2^k companion indices of each
    // amplitude. targets[j] is bit j of the gate matrix index.
    std::vector<std::uint64_t> bit(static_cast<std::size_t>(k));
    std::uint64_t tmask = 0;
    for (int j = 0; j < k; ++j) {
        bit[j] = std::uint64_t{1} << targets[j];
        tmask |= bit[j];
    }
    const int sub = 1 << k;
    std::vector<std::uint64_t> offset(static_cast<std::size_t>(sub), 0);
    for (int c = 0; c < sub; ++c) {
        for (int j = 0; j < k; ++j) {
            if ((c >> j) & 1) offset[c] |= bit[j];
        }
    }
    std::vector<cx> scratch(static_cast<std::size_t>(sub));
    for (std::uint64_t base = 0; base < dim; ++base) {
        if ((base & tmask) != 0) continue; // enumerate each block once
        for (int c = 0; c < sub; ++c) scratch[c] = amps[base | offset[c]];
        for (int r = 0; r < sub; ++r) {
            cx acc{0.0, 0.0};
            for (int c = 0; c < sub; ++c) acc += m(r, c) * scratch[c];
            amps[base | offset[r]] = acc;
        }
    }
}

} // namespace detail

StateVector apply_gate(const StateVector& state, const Gate& gate, const std::vector<int>& targets,
                       const ParameterBinding& binding) {
    const int k = gate.arity();
    if (static_cast<int>(targets.size()) != k) {
        throw TargetError("gate " + gate.name() + " expects " + std::to_string(k) + " targets, got " +
                          std::to_string(targets.size()));
    }
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] < 0 || targets[i] >= state.num_qubits()) {
            throw TargetError("target qubit " + std::to_string(targets[i]) + " out of range");
        }
        for (std::size_t j = i + 1; j < targets.size(); ++j) {
            if (targets[i] == targets[j]) {
                throw TargetError("duplicate target qubit " + std::to_string(targets[i]));
            }
        }
    }
    const Eigen::MatrixXcd m = gate.unitary(binding); // throws BindingError when unbound
    StateVector out = state;
    detail::apply_matrix_inplace(out.amps_, out.num_qubits_, m, targets);
    return out;
}

std::pair<MeasurementRecord, StateVector> measure_qubit(const StateVector& state, int qubit,
                                                        Rng& rng) {
    if (qubit < 0 || qubit >= state.num_qubits()) {
        throw TargetError("measured qubit " + std::to_string(qubit) + " out of range");
    }
    const std::uint64_t mask = std::uint64_t{1} << qubit;
    double p1 = 0.0;
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        if (i & mask) p1 += std::norm(state[i]);
    }
    const double p0 = 1.0 - p1;
    const int outcome = rng.next_double() < p0 ? 0 : 1;
    const double prob = outcome == 0 ? p0 : p1;

    std::vector<cx> amps(state.dim(), cx{0.0, 0.0});
    const double scale = 1.0 / std::sqrt(prob);
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        const bool bit = (i & mask) != 0;
        if (bit == (outcome == 1)) amps[i] = state[i] * scale;
    }
    return {MeasurementRecord{qubit, outcome, prob}, StateVector(state.num_qubits(), std::move(amps))};
}

std::map<std::string, std::uint64_t> sample(const StateVector& state, std::uint64_t shots,
                                            Rng& rng) {
    if (shots < 1) throw SizeError("shots must be >= 1");
    // Draw all uniforms up front, then resolve them in one sweep over the
    // cumulative distribution; O(2^n + shots log shots) and deterministic.
    std::vector<double> u(shots);
    for (auto& x : u) x = rng.next_double();
    std::sort(u.begin(), u.end());

    std::map<std::string, std::uint64_t> counts;
    double cum = 0.0;
    std::size_t next = 0;
    for (std::uint64_t i = 0; i < state.dim() && next < u.size(); ++i) {
        cum += std::norm(state[i]);
        std::uint64_t hits = 0;
        while (next < u.size() && u[next] < cum) {
            ++hits;
            ++next;
        }
        if (hits > 0) counts[StateVector::bitstring(i, state.num_qubits())] += hits;
    }
    if (next < u.size()) {
        // Rounding left a few draws past the accumulated total mass; they
        // belong to the last basis state with nonzero probability.
        for (std::uint64_t i = state.dim(); i-- > 0;) {
            if (std::norm(state[i]) > 0.0) {
                counts[StateVector::bitstring(i, state.num_qubits())] += u.size() - next;
                break;
            }
        }
    }
    return counts;
}

cx inner_product(const StateVector& a, const StateVector& b) {
    if (a.num_qubits() != b.num_qubits()) throw SizeError("qubit-count mismatch in inner product");
    cx acc{0.0, 0.0};
    for (std::uint64_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

} // namespace ansatzforge
