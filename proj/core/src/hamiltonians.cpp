#include "ansatzforge/hamiltonians.hpp"

#include "ansatzforge/errors.hpp"

namespace ansatzforge {

namespace {

std::vector<std::pair<int, int>> bonds(int n, Boundary boundary) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i + 1 < n; ++i) out.emplace_back(i, i + 1);
    if (boundary == Boundary::Ring && n > 2) out.emplace_back(n - 1, 0);
    return out;
}

} // namespace

PauliSum tfim_hamiltonian(int n, double g, Boundary boundary) {
    if (n < 2) throw SizeError("TFIM needs at least 2 sites");
    PauliSum h(n);
    for (const auto& [a, b] : bonds(n, boundary)) {
        h.add_term(-1.0, PauliString::from_letters(n, {{a, 'Z'}, {b, 'Z'}}));
    }
    for (int i = 0; i < n; ++i) {
        h.add_term(-g, PauliString::from_letters(n, {{i, 'X'}}));
    }
    return h;
}

std::vector<std::vector<int>> tfim_commuting_groups(int n, double g, Boundary boundary) {
    if (n < 2) throw SizeError("TFIM needs at least 2 sites");
    const auto bs = bonds(n, boundary);
    std::vector<int> even, odd, field;
    for (std::size_t i = 0; i < bs.size(); ++i) {
        // Bond parity by its left site; the wrap bond (n-1, 0) sits in the
        // odd layer of the figure-style layout.
        if (bs[i].first % 2 == 0 && bs[i].second == bs[i].first + 1) {
            even.push_back(static_cast<int>(i));
        } else {
            odd.push_back(static_cast<int>(i));
        }
    }
    if (g != 0.0) {
        for (int i = 0; i < n; ++i) field.push_back(static_cast<int>(bs.size()) + i);
    }
    std::vector<std::vector<int>> groups;
    if (!even.empty()) groups.push_back(std::move(even));
    if (!odd.empty()) groups.push_back(std::move(odd));
    if (!field.empty()) groups.push_back(std::move(field));
    return groups;
}

PauliSum heisenberg_hamiltonian(int n, double j, Boundary boundary) {
    if (n < 2) throw SizeError("Heisenberg model needs at least 2 sites");
    PauliSum h(n);
    for (const auto& [a, b] : bonds(n, boundary)) {
        for (char letter : {'X', 'Y', 'Z'}) {
            h.add_term(j, PauliString::from_letters(n, {{a, letter}, {b, letter}}));
        }
    }
    return h;
}

PauliSum maxcut_hamiltonian(const Graph& g) {
    if (g.edges().empty()) throw ValidationError("MaxCut needs at least one edge");
    PauliSum c(g.num_vertices());
    double offset = 0.0;
    for (const auto& e : g.edges()) {
        offset += e.weight / 2.0;
        c.add_term(-e.weight / 2.0,
                   PauliString::from_letters(g.num_vertices(), {{e.u, 'Z'}, {e.v, 'Z'}}));
    }
    c.set_offset(offset);
    return c;
}

} // namespace ansatzforge
