#include "ansatzforge/pauli.hpp"

#include <bit>
#include <cmath>
#include <sstream>

#include "ansatzforge/errors.hpp"

namespace ansatzforge {

namespace {

void check_qubits(int n) {
    if (n < 1 || n > kMaxQubits) throw SizeError("pauli qubit count outside 1..24");
}

// i^k for k = 0..3
cx i_power(unsigned k) {
    switch (k & 3u) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
    }
}

} // namespace

PauliString::PauliString(int num_qubits) : num_qubits_(num_qubits) { check_qubits(num_qubits); }

PauliString PauliString::from_letters(int num_qubits, const std::map<int, char>& letters) {
    PauliString s(num_qubits);
    for (const auto& [q, l] : letters) s.set(q, l);
    return s;
}

void PauliString::set(int qubit, char letter) {
    if (qubit < 0 || qubit >= num_qubits_) {
        throw SizeError("pauli letter on qubit " + std::to_string(qubit) + " out of range");
    }
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    x_mask_ &= ~bit;
    y_mask_ &= ~bit;
    z_mask_ &= ~bit;
    switch (letter) {
    case 'I': break;
    case 'X': x_mask_ |= bit; break;
    case 'Y': y_mask_ |= bit; break;
    case 'Z': z_mask_ |= bit; break;
    default: throw ValidationError(std::string("unknown Pauli letter '") + letter + "'");
    }
}

PauliString PauliString::parse(int num_qubits, const std::string& text) {
    PauliString s(num_qubits);
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "I") continue;
        if (tok.size() < 2) throw ValidationError("bad Pauli token '" + tok + "'");
        const char letter = tok[0];
        int q = 0;
        try {
            q = std::stoi(tok.substr(1));
        } catch (const std::exception&) {
            throw ValidationError("bad Pauli token '" + tok + "'");
        }
        if (letter != 'X' && letter != 'Y' && letter != 'Z') {
            throw ValidationError("bad Pauli token '" + tok + "'");
        }
        s.set(q, letter);
    }
    return s;
}

std::map<int, char> PauliString::letters() const {
    std::map<int, char> out;
    for (int q = 0; q < num_qubits_; ++q) {
        const std::uint64_t bit = std::uint64_t{1} << q;
        if (x_mask_ & bit) out[q] = 'X';
        else if (y_mask_ & bit) out[q] = 'Y';
        else if (z_mask_ & bit) out[q] = 'Z';
    }
    return out;
}

int PauliString::weight() const {
    return std::popcount(x_mask_ | y_mask_ | z_mask_);
}

std::vector<int> PauliString::support() const {
    std::vector<int> qs;
    for (int q = 0; q < num_qubits_; ++q) {
        if ((x_mask_ | y_mask_ | z_mask_) & (std::uint64_t{1} << q)) qs.push_back(q);
    }
    return qs;
}

std::string PauliString::format() const {
    if (is_identity()) return "I";
    std::string out;
    for (const auto& [q, l] : letters()) {
        if (!out.empty()) out += ' ';
        out += l;
        out += std::to_string(q);
    }
    return out;
}

PauliSum::PauliSum(int num_qubits) : num_qubits_(num_qubits) { check_qubits(num_qubits); }

PauliSum::PauliSum(int num_qubits, std::vector<std::pair<double, PauliString>> terms, double offset)
    : num_qubits_(num_qubits), offset_(offset) {
    check_qubits(num_qubits);
    for (auto& [c, s] : terms) add_term(c, std::move(s));
}

void PauliSum::add_term(double coeff, PauliString s) {
    if (s.num_qubits() != num_qubits_) {
        throw SizeError("term qubit count does not match PauliSum");
    }
    if (!std::isfinite(coeff)) throw ValidationError("non-finite Pauli coefficient");
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].second == s) {
            terms_[i].first += coeff;
            if (terms_[i].first == 0.0) terms_.erase(terms_.begin() + static_cast<long>(i));
            return;
        }
    }
    if (coeff != 0.0) terms_.emplace_back(coeff, std::move(s));
}

std::string PauliSum::format() const {
    std::ostringstream out;
    out.precision(17);
    for (const auto& [c, s] : terms_) out << c << "  " << s.format() << "\n";
    return out.str();
}

PauliSum PauliSum::parse(const std::string& text) {
    // First pass finds the register size, second builds the sum.
    std::istringstream lines(text);
    std::string line;
    std::vector<std::pair<double, std::string>> raw;
    int max_q = 0;
    while (std::getline(lines, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream in(line);
        double coeff;
        if (!(in >> coeff)) {
            std::string stray;
            if (in.clear(), in >> stray) throw ValidationError("bad Hamiltonian line: " + line);
            continue; // blank line
        }
        std::string rest, tok;
        while (in >> tok) {
            if (tok != "I") {
                if (tok.size() < 2) throw ValidationError("bad Pauli token '" + tok + "'");
                try {
                    max_q = std::max(max_q, std::stoi(tok.substr(1)));
                } catch (const std::exception&) {
                    throw ValidationError("bad Pauli token '" + tok + "'");
                }
            }
            if (!rest.empty()) rest += ' ';
            rest += tok;
        }
        raw.emplace_back(coeff, rest);
    }
    if (raw.empty()) throw ValidationError("empty Hamiltonian text");
    PauliSum sum(max_q + 1);
    for (const auto& [c, s] : raw) sum.add_term(c, PauliString::parse(max_q + 1, s));
    return sum;
}

StateVector apply_pauli(const PauliString& s, const StateVector& state) {
    if (s.num_qubits() != state.num_qubits()) throw SizeError("qubit-count mismatch");
    const std::uint64_t flip = s.x_mask() | s.y_mask();
    const std::uint64_t phase_mask = s.y_mask() | s.z_mask();
    const cx y_factor = i_power(static_cast<unsigned>(std::popcount(s.y_mask())));
    std::vector<cx> out(state.dim());
    for (std::uint64_t b = 0; b < state.dim(); ++b) {
        const double sign = (std::popcount(b & phase_mask) & 1) ? -1.0 : 1.0;
        out[b ^ flip] = y_factor * sign * state[b];
    }
    return StateVector(state.num_qubits(), std::move(out));
}

double expectation(const StateVector& state, const PauliString& s) {
    if (s.num_qubits() != state.num_qubits()) throw SizeError("qubit-count mismatch");
    const std::uint64_t flip = s.x_mask() | s.y_mask();
    const std::uint64_t phase_mask = s.y_mask() | s.z_mask();
    const cx y_factor = i_power(static_cast<unsigned>(std::popcount(s.y_mask())));
    cx acc{0.0, 0.0};
    for (std::uint64_t b = 0; b < state.dim(); ++b) {
        const double sign = (std::popcount(b & phase_mask) & 1) ? -1.0 : 1.0;
        acc += std::conj(state[b ^ flip]) * (y_factor * sign) * state[b];
    }
    if (std::abs(acc.imag()) > 1e-10) {
        throw NumericalError("expectation has imaginary residue " + std::to_string(acc.imag()),
                             {});
    }
    return acc.real();
}

double expectation(const StateVector& state, const PauliSum& obs) {
    if (obs.num_qubits() != state.num_qubits()) throw SizeError("qubit-count mismatch");
    double total = 0.0;
    for (const auto& [c, s] : obs.terms()) total += c * expectation(state, s);
    return total;
}

} // namespace ansatzforge
