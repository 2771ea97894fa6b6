#include "pedom/dim.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "pedom/coloring.hpp"
#include "pedom/queries.hpp"

namespace pedom {

namespace {

enum : signed char { kUnset = 0, kWhite = 1, kYellow = 2 };

// White/Yellow labeling search for one connected graph. A complete labeling
// is an EEDS coloring iff whites are independent and every yellow vertex has
// exactly one yellow neighbor; the matching is the set of yellow-yellow edges.
struct DimSearch {
    const Graph& g;
    SolverStats& st;
    std::vector<signed char> label;
    std::vector<int> n_yellow;  // yellow-labeled neighbors
    std::vector<int> n_unset;   // unlabeled neighbors
    std::vector<int> trail;
    std::vector<int> order;  // branch order: degree desc, id asc
    double match_weight = 0.0;

    bool found = false;
    double best_weight = 0.0;
    std::vector<int> best_ids;

    DimSearch(const Graph& graph, SolverStats& stats) : g(graph), st(stats) {
        const int n = g.vertex_count();
        label.assign(n, kUnset);
        n_yellow.assign(n, 0);
        n_unset.assign(n, 0);
        for (int v = 0; v < n; ++v) n_unset[v] = g.degree(v);
        order.resize(n);
        for (int v = 0; v < n; ++v) order[v] = v;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
            return a < b;
        });
    }

    // Counters are fully updated before any conflict exit so undo_to stays
    // symmetric with the trail.
    bool apply(int v, signed char c, std::deque<std::pair<int, signed char>>& queue,
               std::vector<int>& dirty) {
        if (label[v] == c) return true;
        if (label[v] != kUnset) return false;
        label[v] = c;
        trail.push_back(v);
        ++st.propagations;
        for (const AdjEntry& a : g.neighbors(v)) {
            --n_unset[a.to];
            if (c == kYellow) {
                ++n_yellow[a.to];
                if (label[a.to] == kYellow) match_weight += g.edge(a.edge).w;
            }
        }
        for (const AdjEntry& a : g.neighbors(v)) {
            if (c == kWhite) {
                if (label[a.to] == kWhite) return false;
                if (label[a.to] == kUnset) queue.emplace_back(a.to, kYellow);
            }
            if (label[a.to] == kYellow) dirty.push_back(a.to);
        }
        if (c == kYellow) dirty.push_back(v);
        return true;
    }

    bool check_yellow(int v, std::deque<std::pair<int, signed char>>& queue) {
        if (n_yellow[v] >= 2) return false;
        if (n_yellow[v] == 1) {
            for (const AdjEntry& a : g.neighbors(v))
                if (label[a.to] == kUnset) queue.emplace_back(a.to, kWhite);
        } else {
            if (n_unset[v] == 0) return false;  // yellow vertex with no possible partner
            if (n_unset[v] == 1) {
                for (const AdjEntry& a : g.neighbors(v))
                    if (label[a.to] == kUnset) queue.emplace_back(a.to, kYellow);
            }
        }
        return true;
    }

    bool propagate(std::deque<std::pair<int, signed char>> queue) {
        std::vector<int> dirty;
        while (!queue.empty()) {
            auto [v, c] = queue.front();
            queue.pop_front();
            dirty.clear();
            if (!apply(v, c, queue, dirty)) return false;
            for (int u : dirty)
                if (label[u] == kYellow && !check_yellow(u, queue)) return false;
        }
        return true;
    }

    void undo_to(size_t mark, double saved_weight) {
        while (trail.size() > mark) {
            int v = trail.back();
            trail.pop_back();
            signed char c = label[v];
            for (const AdjEntry& a : g.neighbors(v)) {
                ++n_unset[a.to];
                if (c == kYellow) --n_yellow[a.to];
            }
            label[v] = kUnset;
        }
        match_weight = saved_weight;
    }

    void record_leaf() {
        std::vector<int> ids;
        for (int id = 0; id < g.edge_count(); ++id) {
            const Edge& e = g.edge(id);
            if (label[e.u] == kYellow && label[e.v] == kYellow) ids.push_back(id);
        }
        if (!found || match_weight < best_weight - kWeightTolerance ||
            (match_weight < best_weight + kWeightTolerance &&
             (ids.size() < best_ids.size() ||
              (ids.size() == best_ids.size() && ids < best_ids)))) {
            found = true;
            best_weight = match_weight;
            best_ids = std::move(ids);
        }
    }

    void search() {
        int v = -1;
        for (int u : order)
            if (label[u] == kUnset) {
                v = u;
                break;
            }
        if (v < 0) {
            record_leaf();
            return;
        }
        ++st.branchings;
        for (signed char c : {kWhite, kYellow}) {
            size_t mark = trail.size();
            double saved = match_weight;
            if (propagate({{v, c}})) search();
            undo_to(mark, saved);
        }
    }

    void run_from_seeds(const std::vector<int>& seeds) {
        if (seeds.empty()) {
            search();
            return;
        }
        int k = static_cast<int>(seeds.size());
        for (int mask = 0; mask < (1 << k); ++mask) {
            std::deque<std::pair<int, signed char>> queue;
            for (int i = 0; i < k; ++i)
                queue.emplace_back(seeds[i], (mask >> i & 1) ? kYellow : kWhite);
            size_t mark = trail.size();
            double saved = match_weight;
            if (propagate(std::move(queue))) search();
            undo_to(mark, saved);
        }
    }
};

std::optional<std::pair<EdgeSet, double>> solve_components(
    const Graph& g, const std::vector<int>& seed_vertices, SolverStats* stats) {
    SolverStats local;
    SolverStats& st = stats ? *stats : local;
    std::vector<int> all_ids;
    for (const std::vector<int>& comp : components(g)) {
        InducedSubgraph sub = induced_subgraph(g, comp);
        std::vector<int> local_seeds;
        if (!seed_vertices.empty()) {
            std::vector<int> inv(g.vertex_count(), -1);
            for (size_t i = 0; i < sub.orig_vertex.size(); ++i) inv[sub.orig_vertex[i]] = static_cast<int>(i);
            for (int s : seed_vertices)
                if (inv[s] >= 0) local_seeds.push_back(inv[s]);
        }
        DimSearch search(sub.graph, st);
        search.run_from_seeds(local_seeds);
        if (!search.found) return std::nullopt;
        for (int id : search.best_ids) all_ids.push_back(sub.orig_edge[id]);
    }
    return std::pair{EdgeSet::of(g, std::move(all_ids)), 0.0};
}

}  // namespace

std::optional<std::pair<EdgeSet, double>> dim_min_weight(const Graph& g, SolverStats* stats) {
    auto r = solve_components(g, {}, stats);
    if (!r) return std::nullopt;
    r->second = r->first.weight;
    return r;
}

std::optional<std::pair<EdgeSet, double>> dim_min_weight_seeded(const Graph& g,
                                                                const std::vector<int>& d,
                                                                SolverStats* stats) {
    if (d.size() > 4) throw std::invalid_argument("dim_min_weight_seeded: |d| must be at most 4");
    std::vector<char> dominated(g.vertex_count(), 0);
    for (int v : d) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("dim_min_weight_seeded: vertex out of range");
        dominated[v] = 1;
        for (const AdjEntry& a : g.neighbors(v)) dominated[a.to] = 1;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!dominated[v])
            throw std::invalid_argument("dim_min_weight_seeded: d is not a dominating set");
    auto r = solve_components(g, d, stats);
    if (!r) return std::nullopt;
    r->second = r->first.weight;
    return r;
}

}  // namespace pedom
