#pragma once

#include <optional>
#include <span>
#include <vector>

namespace pedom {

/// One weighted undirected edge. Endpoints are stored with u < v; edge ids
/// index into Graph::edges(), which is sorted by (u, v).
struct Edge {
    int u = 0;
    int v = 0;
    double w = 1.0;
};

struct AdjEntry {
    int to;
    int edge;
};

/// Immutable simple undirected graph with real edge weights (negatives
/// allowed). Construction rejects loops, multi-edges, out-of-range ids and
/// non-finite weights; all queries are pure, so instances can be shared
/// freely across threads.
class Graph {
  public:
    Graph() = default;

    static Graph from_edges(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_[id]; }

    /// Neighbors of v sorted by vertex id, with edge-id back references.
    std::span<const AdjEntry> neighbors(int v) const {
        return {adj_.data() + offset_[v], adj_.data() + offset_[v + 1]};
    }
    int degree(int v) const { return offset_[v + 1] - offset_[v]; }

    bool adjacent(int u, int v) const { return edge_between(u, v).has_value(); }
    std::optional<int> edge_between(int u, int v) const;

    double total_weight() const;

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<AdjEntry> adj_;
    std::vector<int> offset_{0};
};

/// Set of edge ids (sorted, unique) with the member-weight sum cached at
/// construction time.
struct EdgeSet {
    std::vector<int> ids;
    double weight = 0.0;

    static EdgeSet of(const Graph& g, std::vector<int> ids);
    static EdgeSet all_edges(const Graph& g);

    bool contains(int e) const;
    int size() const { return static_cast<int>(ids.size()); }
    bool operator==(const EdgeSet& o) const { return ids == o.ids; }
};

/// Ordering used wherever a single best set is picked: weight first (values
/// within 1e-9 count as equal), then cardinality, then lexicographic ids.
bool better_edge_set(const EdgeSet& a, const EdgeSet& b);

inline constexpr double kWeightTolerance = 1e-9;

}  // namespace pedom
