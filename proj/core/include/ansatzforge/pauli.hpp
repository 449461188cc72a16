#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ansatzforge/state_vector.hpp"

namespace ansatzforge {

/// Tensor product of single-qubit Paulis; identity on unlisted qubits.
/// Stored as X/Y/Z bitmasks over the register.
class PauliString {
public:
    explicit PauliString(int num_qubits);
    static PauliString from_letters(int num_qubits, const std::map<int, char>& letters);
    /// Parses tokens like "X0 Z3"; an empty string is the identity.
    static PauliString parse(int num_qubits, const std::string& text);

    int num_qubits() const { return num_qubits_; }
    void set(int qubit, char letter); // letter in {X, Y, Z, I}
    std::map<int, char> letters() const;
    int weight() const;
    bool is_identity() const { return (x_mask_ | y_mask_ | z_mask_) == 0; }

    std::uint64_t x_mask() const { return x_mask_; }
    std::uint64_t y_mask() const { return y_mask_; }
    std::uint64_t z_mask() const { return z_mask_; }

    /// Qubits the string acts on, ascending.
    std::vector<int> support() const;

    std::string format() const; // "X0 Z3", "I" for the identity

    friend bool operator==(const PauliString&, const PauliString&) = default;

private:
    int num_qubits_;
    std::uint64_t x_mask_ = 0;
    std::uint64_t y_mask_ = 0;
    std::uint64_t z_mask_ = 0;
};

/// Real-weighted sum of Pauli strings; Hermitian by construction.
///
/// Duplicate strings are merged on construction and exactly-zero
/// coefficients dropped. The optional scalar offset is bookkeeping carried
/// next to the terms (MaxCut's constant); expectation() and exact
/// diagonalization act on the terms only.
class PauliSum {
public:
    explicit PauliSum(int num_qubits);
    PauliSum(int num_qubits, std::vector<std::pair<double, PauliString>> terms,
             double offset = 0.0);

    int num_qubits() const { return num_qubits_; }
    const std::vector<std::pair<double, PauliString>>& terms() const { return terms_; }
    double offset() const { return offset_; }
    void set_offset(double v) { offset_ = v; }

    void add_term(double coeff, PauliString s);

    std::size_t size() const { return terms_.size(); }

    /// Text form, one term per line: "coeff  X0 Z3".
    std::string format() const;
    static PauliSum parse(const std::string& text);

private:
    int num_qubits_;
    std::vector<std::pair<double, PauliString>> terms_;
    double offset_ = 0.0;
};

/// <psi|H|psi> over the term list (offset excluded). The imaginary residue
/// is checked below 1e-10 and discarded.
double expectation(const StateVector& state, const PauliSum& obs);

/// <psi|P|psi> for a single string.
double expectation(const StateVector& state, const PauliString& s);

/// P|psi>.
StateVector apply_pauli(const PauliString& s, const StateVector& state);

} // namespace ansatzforge
