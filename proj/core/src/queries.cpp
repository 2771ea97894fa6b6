#include "pedom/queries.hpp"

#include <algorithm>
#include <stdexcept>

namespace pedom {

BfsResult bfs_from(const Graph& g, int source) {
    const int n = g.vertex_count();
    if (source < 0 || source >= n) throw std::invalid_argument("bfs: source out of range");
    BfsResult r;
    r.dist.assign(n, -1);
    r.parent.assign(n, -1);
    std::vector<int> queue;
    queue.reserve(n);
    queue.push_back(source);
    r.dist[source] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (const AdjEntry& a : g.neighbors(v)) {
            if (r.dist[a.to] < 0) {
                r.dist[a.to] = r.dist[v] + 1;
                r.parent[a.to] = v;
                r.max_dist = std::max(r.max_dist, r.dist[a.to]);
                queue.push_back(a.to);
            }
        }
    }
    r.reached = static_cast<int>(queue.size());
    return r;
}

std::optional<int> girth(const Graph& g) {
    // BFS from every vertex; a non-tree edge (u,v) seen from root s closes a
    // walk of length dist(u)+dist(v)+1, and the minimum over all s is exact.
    const int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(n), via_edge(n);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        queue.push_back(s);
        dist[s] = 0;
        via_edge[s] = -1;
        for (size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            if (best >= 0 && 2 * dist[v] >= best) break;
            for (const AdjEntry& a : g.neighbors(v)) {
                if (a.edge == via_edge[v]) continue;
                if (dist[a.to] < 0) {
                    dist[a.to] = dist[v] + 1;
                    via_edge[a.to] = a.edge;
                    queue.push_back(a.to);
                } else {
                    int len = dist[v] + dist[a.to] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

std::optional<int> eccentricity(const Graph& g, int v) {
    BfsResult r = bfs_from(g, v);
    if (r.reached != g.vertex_count()) return std::nullopt;
    return r.max_dist;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    return bfs_from(g, 0).reached == g.vertex_count();
}

std::vector<std::vector<int>> components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        stack.push_back(s);
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (const AdjEntry& a : g.neighbors(v)) {
                if (comp[a.to] < 0) {
                    comp[a.to] = id;
                    stack.push_back(a.to);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> selected = vertices;
    std::sort(selected.begin(), selected.end());
    selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
    std::vector<int> new_id(g.vertex_count(), -1);
    for (size_t i = 0; i < selected.size(); ++i) {
        if (selected[i] < 0 || selected[i] >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        new_id[selected[i]] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    std::vector<int> orig_edge_unsorted;
    for (int id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        if (new_id[e.u] >= 0 && new_id[e.v] >= 0) {
            edges.push_back({new_id[e.u], new_id[e.v], e.w});
            orig_edge_unsorted.push_back(id);
        }
    }
    InducedSubgraph out;
    out.graph = Graph::from_edges(static_cast<int>(selected.size()), edges);
    out.orig_vertex = std::move(selected);
    // from_edges sorts by (u,v); source edges are scanned in id order, which is
    // already (u,v)-sorted and vertex relabeling is monotone, so ids line up.
    out.orig_edge = std::move(orig_edge_unsorted);
    return out;
}

std::optional<Claw> find_claw(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto nb = g.neighbors(v);
        int d = static_cast<int>(nb.size());
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                if (g.adjacent(nb[i].to, nb[j].to)) continue;
                for (int k = j + 1; k < d; ++k) {
                    if (!g.adjacent(nb[i].to, nb[k].to) && !g.adjacent(nb[j].to, nb[k].to))
                        return Claw{v, {nb[i].to, nb[j].to, nb[k].to}};
                }
            }
    }
    return std::nullopt;
}

bool is_linear_forest(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 2) return false;
    // max degree <= 2: acyclic iff m = n - #components
    int comp_count = static_cast<int>(components(g).size());
    return g.edge_count() == g.vertex_count() - comp_count;
}

namespace {

bool extend_induced_path(const Graph& g, std::vector<int>& path, std::vector<char>& used, int k) {
    if (static_cast<int>(path.size()) == k) return true;
    int last = path.back();
    for (const AdjEntry& a : g.neighbors(last)) {
        int w = a.to;
        if (used[w]) continue;
        bool induced = true;
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            if (g.adjacent(path[i], w)) {
                induced = false;
                break;
            }
        }
        if (!induced) continue;
        path.push_back(w);
        used[w] = 1;
        if (extend_induced_path(g, path, used, k)) return true;
        used[w] = 0;
        path.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_induced_path(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("find_induced_path: k must be positive");
    if (k == 1) {
        if (g.vertex_count() == 0) return std::nullopt;
        return std::vector<int>{0};
    }
    std::vector<char> used(g.vertex_count(), 0);
    std::vector<int> path;
    for (int s = 0; s < g.vertex_count(); ++s) {
        path.assign(1, s);
        used[s] = 1;
        if (extend_induced_path(g, path, used, k)) return path;
        used[s] = 0;
    }
    return std::nullopt;
}

std::optional<std::array<int, 5>> find_induced_p5(const Graph& g) {
    auto p = find_induced_path(g, 5);
    if (!p) return std::nullopt;
    return std::array<int, 5>{(*p)[0], (*p)[1], (*p)[2], (*p)[3], (*p)[4]};
}

bool verify_induced_path(const Graph& g, std::span<const int> path) {
    for (size_t i = 0; i < path.size(); ++i) {
        if (path[i] < 0 || path[i] >= g.vertex_count()) return false;
        for (size_t j = i + 1; j < path.size(); ++j) {
            if (path[i] == path[j]) return false;
            bool want_edge = (j == i + 1);
            if (g.adjacent(path[i], path[j]) != want_edge) return false;
        }
    }
    return true;
}

}  // namespace pedom
