#include "ansatzforge/graph.hpp"

#include <algorithm>

#include "ansatzforge/errors.hpp"
#include "ansatzforge/state_vector.hpp"

namespace ansatzforge {

Graph::Graph(int num_vertices, std::vector<GraphEdge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
    if (num_vertices_ < 1) throw ValidationError("graph needs at least one vertex");
    for (auto& e : edges_) {
        if (e.u < 0 || e.u >= num_vertices_ || e.v < 0 || e.v >= num_vertices_) {
            throw ValidationError("edge endpoint out of range");
        }
        if (e.u == e.v) throw ValidationError("self-loops are not allowed");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        for (std::size_t j = i + 1; j < edges_.size(); ++j) {
            if (edges_[i].u == edges_[j].u && edges_[i].v == edges_[j].v) {
                throw ValidationError("duplicate edge (" + std::to_string(edges_[i].u) + "," +
                                      std::to_string(edges_[i].v) + ")");
            }
        }
    }
}

double Graph::cut_value(std::uint64_t assignment) const {
    double total = 0.0;
    for (const auto& e : edges_) {
        const bool su = (assignment >> e.u) & 1ULL;
        const bool sv = (assignment >> e.v) & 1ULL;
        if (su != sv) total += e.weight;
    }
    return total;
}

Graph Graph::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
        throw ValidationError("graph JSON needs 'vertices' and 'edges'");
    }
    const int n = j.at("vertices").get<int>();
    std::vector<GraphEdge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || (e.size() != 2 && e.size() != 3)) {
            throw ValidationError("graph edge must be [u, v] or [u, v, weight]");
        }
        const double w = e.size() == 3 ? e[2].get<double>() : 1.0;
        edges.push_back(GraphEdge{e[0].get<int>(), e[1].get<int>(), w});
    }
    return Graph(n, std::move(edges));
}

nlohmann::json Graph::to_json() const {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : edges_) edges.push_back({e.u, e.v, e.weight});
    return {{"vertices", num_vertices_}, {"edges", edges}};
}

MaxCutSolution brute_force_maxcut(const Graph& g) {
    if (g.num_vertices() > 20) throw SizeError("brute-force MaxCut is capped at 20 vertices");
    if (g.edges().empty()) throw ValidationError("graph has no edges");
    double best = -1.0;
    std::uint64_t best_assignment = 0;
    const std::uint64_t total = std::uint64_t{1} << g.num_vertices();
    for (std::uint64_t a = 0; a < total; ++a) {
        const double v = g.cut_value(a);
        if (v > best) {
            best = v;
            best_assignment = a;
        }
    }
    return MaxCutSolution{best, StateVector::bitstring(best_assignment, g.num_vertices())};
}

} // namespace ansatzforge
