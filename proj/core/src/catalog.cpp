#include "ansatzforge/catalog.hpp"

#include <algorithm>
#include <cctype>

#include "ansatzforge/errors.hpp"

namespace ansatzforge {

std::string to_string(VqaClass c) {
    switch (c) {
    case VqaClass::VQE: return "VQE";
    case VqaClass::QAOA: return "QAOA";
    case VqaClass::QML: return "QML";
    }
    return "?";
}

const std::vector<CatalogEntry>& catalog_list() {
    static const std::vector<CatalogEntry> entries = {
        {"UCC",
         "Unitary Coupled Cluster (UCC) Ansatz",
         VqaClass::VQE,
         "It is the scalable scheme for generating the parameterized states required for "
         "variational methods. This heuristic ansatz is widely used in quantum chemistry "
         "problems",
         "Prepare trial states as a Trotterized product of Pauli-generator exponentials, one "
         "shared angle per excitation group.",
         "Ground-state searches where good generators are known in advance; here the "
         "generators are supplied directly as Pauli strings.",
         {"shen2017quantum", "anand2022quantum"},
         {"UVCC", "UCCG", "UCCSD", "k-UpCCGSD", "OO-UCC", "Unitary Cluster-Jastrow", "LDCA"},
         R"({"family":"ucc","n":int,"groups":[["X0 Y1","Y0 X1"],...]})"},
        {"HEA",
         "Hardware-Efficient Ansatz (HEA)",
         VqaClass::VQE,
         "It customizes the initialization state for QVE problems to specific quantum devices.",
         "Alternate dense single-qubit rotation layers with a fixed entangling ladder, trading "
         "physical structure for low depth.",
         "Generic first choice when nothing is known about the problem; parameter count grows "
         "as 3n per layer.",
         {"kandala2017hardware", "kardashin2020certified"},
         {"QCC", "iQCC"},
         R"({"family":"hea","n":int,"layers":int,"entangler":"cnot_ring"|"cz_ring"|"figure2"})"},
        {"ADAPT",
         "Adaptive Derivative Assembled Pseudo-Trotter (ADAPT-VQE) Ansatz",
         VqaClass::VQE,
         "An adaptive ansatz aimed at incrementally constructing a parametric representation "
         "of quantum states, reducing circuit depth to achieve higher accuracy.",
         "Grow the circuit one generator at a time, always appending the pool operator with "
         "the largest energy gradient, re-optimizing everything after each step.",
         "When fixed ansatzes are too deep; trades extra measurements for shallower circuits.",
         {"grimsley2019adaptive", "tang2021qubit"},
         {"qubit-ADAPT-VQE", "QEB-ADAPT-VQE", "ClusterVQE"},
         R"({"family":"adapt","pool":"y_locals","epsilon":real,"max_depth":int})"},
        {"SPA",
         "Symmetry-Preserving Ansatz (SPA)",
         VqaClass::VQE,
         "An ansatz constructing a parameterized representation of quantum states, aimed at "
         "ensuring that the generated quantum states remain invariant under specific symmetry "
         "operations.",
         "Brick pattern of two-qubit exchange blocks that conserve Hamming weight exactly, so "
         "the search never leaves the particle-number sector of the start state.",
         "Hamiltonians with a conserved particle number; start from a basis state of the "
         "right weight.",
         {"barkoutsos2018quantum", "gard2020efficient", "endo2020calculation"},
         {"ESPA"},
         R"({"family":"spa","n":int,"layers":int})"},
        {"QAOA",
         "Quantum Alternating Operator Ansatz (QAOA)",
         VqaClass::QAOA,
         "It customizes an alternating structure in its ansatz to address Quantum Approximate "
         "Optimization Algorithm obtaining approximate solutions for combinatorial "
         "optimization problems.",
         "Alternate a problem-encoding phase unitary with a mixing unitary, p times, starting "
         "from the uniform superposition.",
         "Combinatorial objectives encoded as diagonal Hamiltonians; MaxCut is the built-in "
         "example.",
         {"farhi2014quantum", "hadfield2019quantum"},
         {"GM-QAOA", "QAOA+"},
         R"({"family":"qaoa","p":int,"mixer":"x"|"xy_ring"})"},
        {"HVA",
         "Hamiltonian Variational Ansatz (HVA)",
         VqaClass::QAOA,
         "A circuit design approach based on hierarchical structure and adjustable parameters "
         "aimed at more effectively managing and controlling the complexity of quantum "
         "circuits to tackle complex quantum computing problems.",
         "Trotter layers of the problem Hamiltonian itself, one shared angle per commuting "
         "group per layer.",
         "Spin models whose term structure is known; the TFIM grouping ships as a helper.",
         {"wecker2015progress", "wiersema2020exploring"},
         {"Symmetry-Breaking HVA", "VMFHA", "QOCA", "Fourier-transform HVA"},
         R"({"family":"hva","p":int,"groups":"auto"|[[int,...],...],"hadamard_init":bool})"},
        {"QCE",
         "Quantum Circuit Embedding (QCE)",
         VqaClass::QML,
         "An ansatz for encoding conventional data into quantum states.",
         "Rotate classical features into qubits, couple with trainable ZZ interactions, finish "
         "with a trainable RY layer.",
         "Feature maps for kernel or distance based learning on small feature vectors.",
         {"lloyd2020quantum", "ma2019variational"},
         {"FQCE", "QEK"},
         R"({"family":"qce","n":int,"features":[real,...],"figure_mode":bool})"},
        {"MERA",
         "Multiscale Entanglement Renormalization Ansatz (MERA)",
         VqaClass::QML,
         "An ansatz for quantum many-body states on a D-dimensional lattice precisely and "
         "efficiently calculate the local observables' expectation",
         "Scale-by-scale construction: new wires enter in |0>, get entangled with the coarse "
         "state, and receive local Euler rotations.",
         "Hierarchically entangled states; the reversed schedule is the QCNN convolution "
         "skeleton.",
         {"vidal2008class", "rizzi2008simulation"},
         {},
         R"({"family":"mera","n":2|4|8|16})"},
        {"QNN",
         "Quanvolutional Neural Network (QNN)",
         VqaClass::QML,
         "A hybrid classical-quantum algorithm leveraging some non-linear quantum circuit "
         "transformations for CNN.",
         "Slide a fixed random 4-qubit circuit over image patches; per-qubit Z expectations "
         "become the output channels.",
         "Drop-in feature extractor in front of a classical learner for small images.",
         {"henderson2020quanvolutional"},
         {},
         R"({"family":"qnn","filter_seed":int,"filter_layers":int})"},
        {"QCNN",
         "Quantum Convolutional Neural Network (QCNN)",
         VqaClass::QML,
         "A quantum convolutional neural network inspired by an inversed MERA circuit to "
         "enable efficient machine learning on quantum devices.",
         "Alternate translationally invariant two-qubit convolutions with measure-and-feed-"
         "forward pooling until two wires remain, then a fully connected block.",
         "Classifying quantum states directly; trains with exact gradients in the deferred "
         "form.",
         {"cong2019quantum", "herrmann2022realizing"},
         {},
         R"({"family":"qcnn","n":4|8|16,"pooling":"conditioned"|"deferred"})"},
    };
    return entries;
}

const CatalogEntry& catalog_show(const std::string& family) {
    auto upper = [](std::string s) {
        std::transform(s.begin(), s.end(), s.begin(),
                       [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
        return s;
    };
    const std::string key = upper(family);
    for (const auto& e : catalog_list()) {
        if (e.family == key) return e;
    }
    std::vector<std::string> valid;
    for (const auto& e : catalog_list()) valid.push_back(e.family);
    std::string msg = "unknown ansatz family '" + family + "'; valid families:";
    for (const auto& v : valid) msg += " " + v;
    throw LookupError(msg, valid);
}

} // namespace ansatzforge
