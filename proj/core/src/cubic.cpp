#include "pedom/cubic.hpp"

#include <stdexcept>

#include "pedom/queries.hpp"

namespace pedom {

namespace {

bool in_triangle(const Graph& g, int v) {
    auto nb = g.neighbors(v);
    for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j)
            if (g.adjacent(nb[i].to, nb[j].to)) return true;
    return false;
}

// Gate for the solver: cubic claw-free or its degree-two extension.
ClassCheck extension_gate(const Graph& g) {
    if (auto claw = find_claw(g))
        return {false, claw->center, "induced claw centered at vertex"};
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 2) continue;
        auto nb = g.neighbors(v);
        if (!g.adjacent(nb[0].to, nb[1].to))
            return {false, v, "degree-2 vertex with non-adjacent neighbors"};
    }
    return {true, -1, ""};
}

}  // namespace

ClassCheck check_class_cubic_clawfree(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 3) return {false, v, "vertex of degree != 3"};
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!in_triangle(g, v)) return {false, v, "vertex in no triangle"};
    return {true, -1, ""};
}

bool check_no_proper_peds(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("check_no_proper_peds: graph not connected");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!in_triangle(g, v))
            throw std::invalid_argument("check_no_proper_peds: vertex " + std::to_string(v + 1) +
                                        " lies in no triangle");
    if (g.vertex_count() == 0) return true;

    // Black propagation: adjacent neighbor pairs of a black vertex become
    // black (triangle pattern), and so does any neighbor sharing no common
    // neighbor with it (frontier step of the argument).
    std::vector<char> black(g.vertex_count(), 0);
    std::vector<int> queue{0};
    black[0] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        auto nb = g.neighbors(v);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                if (!g.adjacent(nb[i].to, nb[j].to)) continue;
                for (int u : {nb[i].to, nb[j].to})
                    if (!black[u]) {
                        black[u] = 1;
                        queue.push_back(u);
                    }
            }
        for (const AdjEntry& a : nb) {
            if (black[a.to]) continue;
            bool common = false;
            for (const AdjEntry& b : g.neighbors(a.to))
                if (g.adjacent(v, b.to)) {
                    common = true;
                    break;
                }
            if (!common) {
                black[a.to] = 1;
                queue.push_back(a.to);
            }
        }
    }
    for (char b : black)
        if (!b) return false;
    return true;
}

SolveOutcome solve_cubic_clawfree(const Graph& g, SolverStats* stats) {
    std::vector<int> all_ids;
    for (const std::vector<int>& comp : components(g)) {
        InducedSubgraph sub = induced_subgraph(g, comp);
        ClassCheck gate = extension_gate(sub.graph);
        if (!gate.ok)
            return NotInClass{gate.reason, sub.orig_vertex[gate.witness_vertex]};
        EdgeSet best = EdgeSet::all_edges(sub.graph);
        if (auto eeds = dim_min_weight(sub.graph, stats)) {
            if (better_edge_set(eeds->first, best)) best = std::move(eeds->first);
        }
        for (int id : best.ids) all_ids.push_back(sub.orig_edge[id]);
    }
    EdgeSet set = EdgeSet::of(g, std::move(all_ids));
    double w = set.weight;
    PedsKind kind = classify_kind(coloring_from_peds(g, set));
    return Optimal{std::move(set), w, kind};
}

}  // namespace pedom
