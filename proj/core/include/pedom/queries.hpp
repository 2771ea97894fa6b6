#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "pedom/graph.hpp"

namespace pedom {

struct BfsResult {
    std::vector<int> dist;    // -1 where unreachable
    std::vector<int> parent;  // -1 at the root and where unreachable
    int reached = 0;
    int max_dist = 0;
};
BfsResult bfs_from(const Graph& g, int source);

/// Length of a shortest cycle; nullopt when the graph is acyclic.
std::optional<int> girth(const Graph& g);

/// Max BFS distance from v; nullopt when some vertex is unreachable.
std::optional<int> eccentricity(const Graph& g, int v);

bool is_connected(const Graph& g);

std::vector<std::vector<int>> components(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> orig_vertex;  // new vertex id -> old vertex id
    std::vector<int> orig_edge;    // new edge id -> old edge id
};
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

struct Claw {
    int center;
    std::array<int, 3> leaves;  // pairwise non-adjacent neighbors of center
};
std::optional<Claw> find_claw(const Graph& g);
inline bool is_claw_free(const Graph& g) { return !find_claw(g).has_value(); }

/// True iff every component is an induced path (max degree <= 2, acyclic).
bool is_linear_forest(const Graph& g);

/// First induced path on k vertices found by ordered DFS, if any.
std::optional<std::vector<int>> find_induced_path(const Graph& g, int k);
std::optional<std::array<int, 5>> find_induced_p5(const Graph& g);

/// Consecutive vertices adjacent, all other pairs non-adjacent, no repeats.
bool verify_induced_path(const Graph& g, std::span<const int> path);

}  // namespace pedom
