#include "ansatzforge/ansatz.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ansatzforge/errors.hpp"

namespace ansatzforge {

namespace {

std::string idx_name(const std::string& family, int i) {
    return family + "_" + std::to_string(i);
}

/// exp(-i theta_expr / 2 * P) for a term, using native rotation gates where
/// the string is a single letter or a ZZ pair, the staircase otherwise.
void emit_term_exponential(Circuit& c, const PauliString& p, const std::string& param,
                           double prefactor) {
    const auto letters = p.letters();
    if (letters.size() == 1) {
        const auto [q, l] = *letters.begin();
        const ParamExpr angle = ParamExpr::symbol(param, prefactor);
        if (l == 'X') c.rx(angle, q);
        else if (l == 'Y') c.ry(angle, q);
        else c.rz(angle, q);
        return;
    }
    if (letters.size() == 2) {
        auto it = letters.begin();
        const auto [qa, la] = *it++;
        const auto [qb, lb] = *it;
        if (la == 'Z' && lb == 'Z') {
            c.zz(ParamExpr::symbol(param, prefactor), qa, qb);
            return;
        }
    }
    c.append(pauli_exponential(p, param, prefactor));
}

} // namespace

Circuit pauli_exponential(const PauliString& p, const std::string& param, double prefactor) {
    if (p.is_identity()) {
        throw ValidationError("cannot exponentiate the identity string (empty generator)");
    }
    Circuit c(p.num_qubits());
    c.declare_parameter(param);
    const auto letters = p.letters();
    const auto support = p.support();

    for (const auto& [q, l] : letters) {
        if (l == 'X') c.h(q);
        else if (l == 'Y') c.rx(ParamExpr(M_PI / 2), q);
    }
    for (std::size_t i = 0; i + 1 < support.size(); ++i) {
        c.cnot(support[i], support[i + 1]);
    }
    c.rz(ParamExpr::symbol(param, prefactor), support.back());
    for (std::size_t i = support.size() - 1; i-- > 0;) {
        c.cnot(support[i], support[i + 1]);
    }
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        const auto& [q, l] = *it;
        if (l == 'X') c.h(q);
        else if (l == 'Y') c.rx(ParamExpr(-M_PI / 2), q);
    }
    return c;
}

AnsatzBlueprint ucc_ansatz(const std::vector<std::vector<PauliString>>& groups) {
    if (groups.empty()) throw ValidationError("UCC needs at least one generator group");
    int n = 0;
    for (const auto& g : groups) {
        if (g.empty()) throw ValidationError("empty UCC generator group");
        for (const auto& s : g) {
            if (s.is_identity()) throw ValidationError("identity generator in UCC group");
            if (n == 0) n = s.num_qubits();
            if (s.num_qubits() != n) throw SizeError("UCC generators disagree on qubit count");
        }
    }
    AnsatzBlueprint bp;
    bp.family = "ucc";
    bp.num_qubits = n;
    bp.num_parameters = static_cast<int>(groups.size());
    nlohmann::json jgroups = nlohmann::json::array();
    for (const auto& g : groups) {
        nlohmann::json jg = nlohmann::json::array();
        for (const auto& s : g) jg.push_back(s.format());
        jgroups.push_back(jg);
    }
    bp.config = {{"family", "ucc"}, {"n", n}, {"groups", jgroups}};
    bp.build = [groups, n]() {
        Circuit c(n);
        for (std::size_t g = 0; g < groups.size(); ++g) {
            const std::string name = idx_name("ucc", static_cast<int>(g));
            c.declare_parameter(name);
            for (const auto& s : groups[g]) c.append(pauli_exponential(s, name));
        }
        return c;
    };
    return bp;
}

AnsatzBlueprint hea_ansatz(int n, int layers, HeaEntangler entangler) {
    if (n < 2) throw SizeError("HEA needs at least 2 qubits");
    if (layers < 1) throw SizeError("HEA needs at least 1 layer");
    if (entangler == HeaEntangler::Figure2 && n != 4) {
        throw ValidationError("the figure2 entangler block is defined for n = 4 only");
    }
    const int per_layer = entangler == HeaEntangler::Figure2 ? 16 : 3 * n;
    const char* ent_name = entangler == HeaEntangler::CnotRing ? "cnot_ring"
                           : entangler == HeaEntangler::CzRing ? "cz_ring"
                                                               : "figure2";
    AnsatzBlueprint bp;
    bp.family = "hea";
    bp.num_qubits = n;
    bp.num_parameters = layers * per_layer;
    bp.config = {{"family", "hea"}, {"n", n}, {"layers", layers}, {"entangler", ent_name}};
    bp.build = [n, layers, entangler]() {
        Circuit c(n);
        int p = 0;
        auto sym = [&p]() { return ParamExpr::symbol(idx_name("hea", p++)); };
        for (int l = 0; l < layers; ++l) {
            for (int q = 0; q < n; ++q) {
                c.rx(sym(), q);
                c.rz(sym(), q);
                c.rx(sym(), q);
            }
            switch (entangler) {
            case HeaEntangler::CnotRing:
                for (int q = 0; q + 1 < n; ++q) c.cnot(q, q + 1);
                c.cnot(n - 1, 0);
                break;
            case HeaEntangler::CzRing:
                for (int q = 0; q + 1 < n; ++q) c.cz(q, q + 1);
                c.cz(n - 1, 0);
                break;
            case HeaEntangler::Figure2:
                // Controlled-RY ladder around the ring, as printed.
                for (int q = 0; q < 4; ++q) {
                    c.add(Gate::controlled(Gate::ry(sym())), {q, (q + 1) % 4});
                }
                break;
            }
        }
        return c;
    };
    return bp;
}

namespace {

void emit_a_gate(Circuit& c, const std::string& theta, const std::string& phi, int top,
                 int bottom) {
    c.cnot(bottom, top);
    c.add(Gate::r2(ParamExpr::symbol(theta), ParamExpr::symbol(phi)), {bottom});
    c.cnot(top, bottom);
    // R(theta, phi)^dagger = RY(-(theta + pi/2)) * RZ(-(phi + pi))
    c.rz(ParamExpr::symbol(phi, -1.0, -M_PI), bottom);
    c.ry(ParamExpr::symbol(theta, -1.0, -M_PI / 2), bottom);
    c.cnot(bottom, top);
}

} // namespace

Circuit spa_a_gate(const std::string& theta, const std::string& phi) {
    Circuit c(2);
    c.declare_parameter(theta);
    c.declare_parameter(phi);
    emit_a_gate(c, theta, phi, 0, 1);
    return c;
}

AnsatzBlueprint spa_ansatz(int n, int layers) {
    if (n < 2) throw SizeError("SPA needs at least 2 qubits");
    if (layers < 1) throw SizeError("SPA needs at least 1 layer");
    int gates = 0;
    for (int k = 1; k + 1 < n; k += 2) ++gates; // odd-started bricks
    for (int k = 0; k + 1 < n; k += 2) ++gates; // even-started bricks
    gates *= layers;

    AnsatzBlueprint bp;
    bp.family = "spa";
    bp.num_qubits = n;
    bp.num_parameters = 2 * gates;
    bp.config = {{"family", "spa"}, {"n", n}, {"layers", layers}};
    bp.build = [n, layers]() {
        Circuit c(n);
        int p = 0;
        auto next_pair = [&p](std::string& th, std::string& ph) {
            th = idx_name("spa", p++);
            ph = idx_name("spa", p++);
        };
        std::string th, ph;
        for (int l = 0; l < layers; ++l) {
            for (int k = 1; k + 1 < n; k += 2) {
                next_pair(th, ph);
                emit_a_gate(c, th, ph, k, k + 1);
            }
            for (int k = 0; k + 1 < n; k += 2) {
                next_pair(th, ph);
                emit_a_gate(c, th, ph, k, k + 1);
            }
        }
        return c;
    };
    return bp;
}

AnsatzBlueprint qaoa_ansatz(const PauliSum& cost, QaoaMixer mixer, int p) {
    if (p < 1) throw SizeError("QAOA needs at least one layer");
    if (cost.terms().empty()) throw ValidationError("QAOA cost has no terms");
    if (mixer == QaoaMixer::X) {
        for (const auto& [c, s] : cost.terms()) {
            (void)c;
            if (s.x_mask() != 0 || s.y_mask() != 0) {
                throw ValidationError("the X mixer requires a diagonal (Z-only) cost; term '" +
                                      s.format() + "' is not");
            }
        }
    }
    const int n = cost.num_qubits();
    AnsatzBlueprint bp;
    bp.family = "qaoa";
    bp.num_qubits = n;
    bp.num_parameters = 2 * p;
    bp.config = {{"family", "qaoa"},
                 {"p", p},
                 {"mixer", mixer == QaoaMixer::X ? "x" : "xy_ring"}};
    bp.build = [cost, mixer, p, n]() {
        Circuit c(n);
        for (int k = 0; k < 2 * p; ++k) c.declare_parameter(idx_name("qaoa", k));
        for (int q = 0; q < n; ++q) c.h(q);
        for (int layer = 0; layer < p; ++layer) {
            const std::string gamma = idx_name("qaoa", 2 * layer);
            const std::string beta = idx_name("qaoa", 2 * layer + 1);
            // U_P(gamma) = prod_j exp(-i gamma c_j P_j), ascending term order
            for (const auto& [coeff, s] : cost.terms()) {
                emit_term_exponential(c, s, gamma, 2.0 * coeff);
            }
            switch (mixer) {
            case QaoaMixer::X:
                for (int q = 0; q < n; ++q) c.rx(ParamExpr::symbol(beta, 2.0), q);
                break;
            case QaoaMixer::XYRing:
                // Partial mixers exp(-i beta (XX + YY)/2) in ascending bond
                // order; the two factors commute, so the product is exact.
                for (int q = 0; q < (n == 2 ? 1 : n); ++q) {
                    const int a = q;
                    const int b = (q + 1) % n;
                    c.append(pauli_exponential(
                        PauliString::from_letters(n, {{a, 'X'}, {b, 'X'}}), beta));
                    c.append(pauli_exponential(
                        PauliString::from_letters(n, {{a, 'Y'}, {b, 'Y'}}), beta));
                }
                break;
            }
        }
        return c;
    };
    return bp;
}

AnsatzBlueprint hva_ansatz(const PauliSum& h, const std::vector<std::vector<int>>& groups, int p,
                           bool hadamard_init) {
    if (p < 1) throw SizeError("HVA needs at least one layer");
    std::vector<int> seen(h.terms().size(), 0);
    for (const auto& g : groups) {
        for (int t : g) {
            if (t < 0 || t >= static_cast<int>(h.terms().size())) {
                throw ValidationError("HVA group references term " + std::to_string(t) +
                                      " outside the Hamiltonian");
            }
            ++seen[static_cast<std::size_t>(t)];
        }
    }
    for (std::size_t t = 0; t < seen.size(); ++t) {
        if (seen[t] == 0) {
            throw ValidationError("HVA partition misses term " + std::to_string(t) + " ('" +
                                  h.terms()[t].second.format() + "')");
        }
        if (seen[t] > 1) {
            throw ValidationError("HVA partition repeats term " + std::to_string(t));
        }
    }
    const int n = h.num_qubits();
    const int num_groups = static_cast<int>(groups.size());
    AnsatzBlueprint bp;
    bp.family = "hva";
    bp.num_qubits = n;
    bp.num_parameters = num_groups * p;
    bp.config = {{"family", "hva"},
                 {"p", p},
                 {"groups", groups},
                 {"hadamard_init", hadamard_init}};
    bp.build = [h, groups, p, n, num_groups, hadamard_init]() {
        Circuit c(n);
        for (int k = 0; k < num_groups * p; ++k) c.declare_parameter(idx_name("hva", k));
        if (hadamard_init) {
            for (int q = 0; q < n; ++q) c.h(q);
        }
        for (int layer = 0; layer < p; ++layer) {
            for (int g = 0; g < num_groups; ++g) {
                const std::string name = idx_name("hva", layer * num_groups + g);
                for (int t : groups[static_cast<std::size_t>(g)]) {
                    const auto& [coeff, s] = h.terms()[static_cast<std::size_t>(t)];
                    emit_term_exponential(c, s, name, 2.0 * coeff);
                }
            }
        }
        return c;
    };
    return bp;
}

AnsatzBlueprint qce_embedding(const std::vector<double>& x, int n, bool figure_mode) {
    if (figure_mode && (n != 4 || x.size() != 3)) {
        throw ValidationError("figure mode is the 4-qubit, 3-feature instance");
    }
    if (static_cast<int>(x.size()) > n) {
        throw ValidationError("more features than qubits");
    }
    const int bonds = figure_mode ? 4 : (n == 2 ? 1 : n);
    AnsatzBlueprint bp;
    bp.family = "qce";
    bp.num_qubits = n;
    bp.num_parameters = bonds + n;
    bp.config = {{"family", "qce"}, {"n", n}, {"features", x}, {"figure_mode", figure_mode}};
    bp.build = [x, n, figure_mode, bonds]() {
        Circuit c(n);
        for (int k = 0; k < bonds + n; ++k) c.declare_parameter(idx_name("qce", k));
        for (int q = 0; q < n; ++q) {
            if (q < static_cast<int>(x.size())) c.rx(ParamExpr(x[static_cast<std::size_t>(q)]), q);
            else c.h(q);
        }
        auto zz_sym = [](int k) { return ParamExpr::symbol(idx_name("qce", k)); };
        if (figure_mode) {
            c.zz(zz_sym(0), 0, 1);
            c.zz(zz_sym(1), 2, 3);
            c.zz(zz_sym(2), 1, 2);
            c.zz(zz_sym(3), 0, 3);
        } else {
            for (int q = 0; q < bonds; ++q) c.zz(zz_sym(q), q, (q + 1) % n);
        }
        for (int q = 0; q < n; ++q) c.ry(ParamExpr::symbol(idx_name("qce", bonds + q)), q);
        return c;
    };
    return bp;
}

std::vector<std::vector<int>> halving_schedule(int n) {
    std::vector<int> active(static_cast<std::size_t>(n));
    std::iota(active.begin(), active.end(), 0);
    std::vector<std::vector<int>> sets{active};
    while (active.size() > 2) {
        std::vector<int> kept;
        for (std::size_t i = 0; i < active.size(); i += 2) kept.push_back(active[i]);
        active = std::move(kept);
        sets.push_back(active);
    }
    return sets;
}

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

void emit_euler(Circuit& c, int q, int& p) {
    c.rz(ParamExpr::symbol(idx_name("mera", p++)), q);
    c.ry(ParamExpr::symbol(idx_name("mera", p++)), q);
    c.rz(ParamExpr::symbol(idx_name("mera", p++)), q);
}

void emit_conv_block(Circuit& c, int a, int b, const std::vector<std::string>& p) {
    auto sym = [&p](int i) { return ParamExpr::symbol(p[static_cast<std::size_t>(i)]); };
    c.u3(sym(0), sym(1), sym(2), a);
    c.u3(sym(3), sym(4), sym(5), b);
    c.cnot(a, b);
    c.u3(sym(6), sym(7), sym(8), a);
    c.u3(sym(9), sym(10), sym(11), b);
}

} // namespace

AnsatzBlueprint mera_ansatz(int n) {
    if (!is_power_of_two(n) || n < 2 || n > 16) {
        throw SizeError("MERA size must be a power of two in {2, 4, 8, 16}");
    }
    auto sets = halving_schedule(n);
    std::reverse(sets.begin(), sets.end()); // coarse scale first

    int num_params = 0;
    for (const auto& s : sets) {
        const int m = static_cast<int>(s.size());
        num_params += 3 * (m + (m > 2 ? m - 2 : 0));
    }
    AnsatzBlueprint bp;
    bp.family = "mera";
    bp.num_qubits = n;
    bp.num_parameters = num_params;
    bp.config = {{"family", "mera"}, {"n", n}};
    bp.build = [n, sets]() {
        Circuit c(n);
        int p = 0;
        bool first = true;
        for (const auto& s : sets) {
            if (!first) c.barrier();
            first = false;
            const std::size_t m = s.size();
            for (std::size_t i = 0; i + 1 < m; i += 2) c.cnot(s[i], s[i + 1]);
            for (std::size_t i = 0; i < m; ++i) emit_euler(c, s[i], p);
            if (m > 2) {
                for (std::size_t i = 1; i + 1 < m; i += 2) c.cnot(s[i], s[i + 1]);
                for (std::size_t i = 1; i + 1 < m; i += 2) {
                    emit_euler(c, s[i], p);
                    emit_euler(c, s[i + 1], p);
                }
            }
        }
        return c;
    };
    return bp;
}

AnsatzBlueprint qcnn_ansatz(int n, QcnnPooling pooling) {
    if (n != 4 && n != 8 && n != 16) {
        throw SizeError("QCNN size must be one of {4, 8, 16}");
    }
    const auto sets = halving_schedule(n);
    const int rounds = static_cast<int>(sets.size()) - 1;
    AnsatzBlueprint bp;
    bp.family = "qcnn";
    bp.num_qubits = n;
    bp.num_parameters = 15 * rounds + 12;
    bp.config = {{"family", "qcnn"},
                 {"n", n},
                 {"pooling", pooling == QcnnPooling::Conditioned ? "conditioned" : "deferred"}};
    bp.build = [n, sets, rounds, pooling]() {
        Circuit c(n);
        int p = 0;
        auto take = [&p](int count) {
            std::vector<std::string> names;
            for (int i = 0; i < count; ++i) names.push_back(idx_name("qcnn", p++));
            return names;
        };
        for (int r = 0; r < rounds; ++r) {
            const auto& active = sets[static_cast<std::size_t>(r)];
            const auto conv = take(12); // shared across the round: translation invariance
            for (std::size_t i = 0; i + 1 < active.size(); i += 2) {
                emit_conv_block(c, active[i], active[i + 1], conv);
            }
            for (std::size_t i = 1; i + 1 < active.size(); i += 2) {
                emit_conv_block(c, active[i], active[i + 1], conv);
            }
            c.barrier();
            const auto v = take(3);
            for (std::size_t i = 1; i < active.size(); i += 2) {
                const int rec = c.measure(active[i]);
                c.add(Gate::u3(ParamExpr::symbol(v[0]), ParamExpr::symbol(v[1]),
                               ParamExpr::symbol(v[2])),
                      {active[i - 1]}, rec);
            }
            c.barrier();
        }
        const auto& last = sets.back();
        emit_conv_block(c, last[0], last[1], take(12));
        if (pooling == QcnnPooling::Deferred) return defer_measurements(c);
        return c;
    };
    return bp;
}

int qcnn_readout_qubit(int n) {
    if (n != 4 && n != 8 && n != 16) {
        throw SizeError("QCNN size must be one of {4, 8, 16}");
    }
    return halving_schedule(n).back().front();
}

} // namespace ansatzforge
