#include "pedom/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pedom {

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    for (Edge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::invalid_argument("graph: vertex id out of range: " +
                                        std::to_string(e.u) + "-" + std::to_string(e.v));
        if (e.u == e.v)
            throw std::invalid_argument("graph: loop at vertex " + std::to_string(e.u));
        if (!std::isfinite(e.w))
            throw std::invalid_argument("graph: non-finite weight on edge " +
                                        std::to_string(e.u) + "-" + std::to_string(e.v));
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
    for (size_t i = 1; i < edges.size(); ++i) {
        if (edges[i - 1].u == edges[i].u && edges[i - 1].v == edges[i].v)
            throw std::invalid_argument("graph: duplicate edge " + std::to_string(edges[i].u + 1) +
                                        "-" + std::to_string(edges[i].v + 1));
    }

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    std::vector<int> deg(n, 0);
    for (const Edge& e : g.edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    g.offset_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) g.offset_[v + 1] = g.offset_[v] + deg[v];
    g.adj_.resize(2 * g.edges_.size());
    std::vector<int> cursor(g.offset_.begin(), g.offset_.end() - 1);
    for (int id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edges_[id];
        g.adj_[cursor[e.u]++] = {e.v, id};
        g.adj_[cursor[e.v]++] = {e.u, id};
    }
    for (int v = 0; v < n; ++v) {
        std::sort(g.adj_.begin() + g.offset_[v], g.adj_.begin() + g.offset_[v + 1],
                  [](const AdjEntry& a, const AdjEntry& b) { return a.to < b.to; });
    }
    return g;
}

std::optional<int> Graph::edge_between(int u, int v) const {
    if (u == v) return std::nullopt;
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors(u);
    auto it = std::lower_bound(nb.begin(), nb.end(), v,
                               [](const AdjEntry& a, int x) { return a.to < x; });
    if (it != nb.end() && it->to == v) return it->edge;
    return std::nullopt;
}

double Graph::total_weight() const {
    double s = 0.0;
    for (const Edge& e : edges_) s += e.w;
    return s;
}

EdgeSet EdgeSet::of(const Graph& g, std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    for (size_t i = 0; i < ids.size(); ++i) {
        if (ids[i] < 0 || ids[i] >= g.edge_count())
            throw std::invalid_argument("edge set: id out of range");
        if (i > 0 && ids[i] == ids[i - 1])
            throw std::invalid_argument("edge set: duplicate id");
    }
    EdgeSet s;
    s.weight = 0.0;
    for (int id : ids) s.weight += g.edge(id).w;
    s.ids = std::move(ids);
    return s;
}

EdgeSet EdgeSet::all_edges(const Graph& g) {
    std::vector<int> ids(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) ids[i] = i;
    return of(g, std::move(ids));
}

bool EdgeSet::contains(int e) const {
    return std::binary_search(ids.begin(), ids.end(), e);
}

bool better_edge_set(const EdgeSet& a, const EdgeSet& b) {
    if (a.weight < b.weight - kWeightTolerance) return true;
    if (b.weight < a.weight - kWeightTolerance) return false;
    if (a.size() != b.size()) return a.size() < b.size();
    return a.ids < b.ids;
}

}  // namespace pedom
