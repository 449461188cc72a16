#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace ansatzforge {

/// Weighted undirected graph; no self-loops, each pair at most once.
struct GraphEdge {
    int u;
    int v;
    double weight;
};

class Graph {
public:
    Graph(int num_vertices, std::vector<GraphEdge> edges);

    int num_vertices() const { return num_vertices_; }
    const std::vector<GraphEdge>& edges() const { return edges_; }

    /// Cut weight of the assignment encoded bitwise (vertex i = bit i).
    double cut_value(std::uint64_t assignment) const;

    /// Schema: {"vertices": n, "edges": [[u, v, weight], ...]}.
    static Graph from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

private:
    int num_vertices_;
    std::vector<GraphEdge> edges_;
};

struct MaxCutSolution {
    double value;
    std::string bitstring; // qubit n-1 first, matching sample() keys
};

/// Exhaustive MaxCut over all 2^V assignments (V <= 20). Ties break toward
/// the lowest basis index.
MaxCutSolution brute_force_maxcut(const Graph& g);

} // namespace ansatzforge
