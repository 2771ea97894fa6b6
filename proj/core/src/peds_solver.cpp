#include <algorithm>
#include <array>
#include <bit>
#include <cassert>

#include "pedom/coloring.hpp"
#include "pedom/dim.hpp"
#include "pedom/queries.hpp"

namespace pedom {

namespace {

// Vertex domains over {White, Yellow, Black} as bitmasks. A valid complete
// coloring obeys: no W-W or W-B edge, an assigned yellow has exactly one
// non-white neighbor, a black vertex has only non-white neighbors (hence
// needs degree >= 2). Triangles additionally admit only BBB or YYW patterns.
enum : unsigned char { DW = 1, DY = 2, DB = 4, DALL = 7 };

struct PedsSearch {
    const Graph& g;
    SolverStats& st;
    std::vector<unsigned char> dom;
    std::vector<int> def_nw;      // neighbors that cannot be white
    std::vector<int> pos_nw;      // neighbors that can still be non-white
    std::vector<int> n_single;    // neighbors with a decided label
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::vector<int>> tri_of;
    std::vector<std::pair<int, unsigned char>> trail;
    std::vector<int> work;
    std::vector<char> in_work;
    double lb = 0.0;  // weight of edges already forced into P
    int undecided = 0;
    bool prune = true;

    bool found = false;
    double best_weight = 0.0;
    std::vector<int> best_ids;

    explicit PedsSearch(const Graph& graph, SolverStats& stats) : g(graph), st(stats) {
        const int n = g.vertex_count();
        dom.assign(n, DALL);
        def_nw.assign(n, 0);
        pos_nw.assign(n, 0);
        n_single.assign(n, 0);
        in_work.assign(n, 0);
        tri_of.assign(n, {});
        undecided = n;
        for (int v = 0; v < n; ++v) pos_nw[v] = g.degree(v);
        for (const Edge& e : g.edges())
            if (e.w < 0.0) prune = false;
        for (int id = 0; id < g.edge_count(); ++id) {
            const Edge& e = g.edge(id);
            const int u = e.u, v = e.v;
            auto scan = g.degree(u) <= g.degree(v) ? g.neighbors(u) : g.neighbors(v);
            for (const AdjEntry& a : scan) {
                if (a.to > v && g.adjacent(u, a.to) && g.adjacent(v, a.to)) {
                    int t = static_cast<int>(triangles.size());
                    triangles.push_back({u, v, a.to});
                    tri_of[u].push_back(t);
                    tri_of[v].push_back(t);
                    tri_of[a.to].push_back(t);
                }
            }
        }
    }

    void push_work(int v) {
        if (!in_work[v]) {
            in_work[v] = 1;
            work.push_back(v);
        }
    }

    bool shrink(int v, unsigned char mask) {
        unsigned char nd = dom[v] & mask;
        if (nd == dom[v]) return true;
        if (nd == 0) return false;
        unsigned char od = dom[v];
        trail.emplace_back(v, od);
        dom[v] = nd;
        ++st.propagations;
        bool gained_def_nw = (od & DW) && !(nd & DW);
        bool lost_pos_nw = (od & (DY | DB)) && !(nd & (DY | DB));
        bool now_single = std::popcount(nd) == 1 && std::popcount(od) != 1;
        if (now_single) --undecided;
        for (const AdjEntry& a : g.neighbors(v)) {
            if (gained_def_nw) {
                ++def_nw[a.to];
                if (!(dom[a.to] & DW)) lb += g.edge(a.edge).w;
            }
            if (lost_pos_nw) --pos_nw[a.to];
            if (now_single) ++n_single[a.to];
            push_work(a.to);
        }
        push_work(v);
        return true;
    }

    void undo_to(size_t mark, double saved_lb) {
        while (trail.size() > mark) {
            auto [v, od] = trail.back();
            trail.pop_back();
            unsigned char nd = dom[v];
            bool had_def_nw = !(nd & DW) && (od & DW);
            bool regains_pos_nw = !(nd & (DY | DB)) && (od & (DY | DB));
            bool was_single = std::popcount(nd) == 1 && std::popcount(od) != 1;
            if (was_single) ++undecided;
            for (const AdjEntry& a : g.neighbors(v)) {
                if (had_def_nw) --def_nw[a.to];
                if (regains_pos_nw) ++pos_nw[a.to];
                if (was_single) --n_single[a.to];
            }
            dom[v] = od;
        }
        lb = saved_lb;
        for (int v : work) in_work[v] = 0;
        work.clear();
    }

    bool tri_check(int t) {
        static constexpr unsigned char kPatterns[4][3] = {
            {DB, DB, DB}, {DY, DY, DW}, {DY, DW, DY}, {DW, DY, DY}};
        const auto& tri = triangles[t];
        unsigned char allow[3] = {0, 0, 0};
        for (const auto& pat : kPatterns) {
            if ((pat[0] & dom[tri[0]]) && (pat[1] & dom[tri[1]]) && (pat[2] & dom[tri[2]])) {
                allow[0] |= pat[0];
                allow[1] |= pat[1];
                allow[2] |= pat[2];
            }
        }
        for (int i = 0; i < 3; ++i)
            if (!shrink(tri[i], allow[i])) return false;
        return true;
    }

    bool check(int v) {
        if ((dom[v] & DY) && (def_nw[v] >= 2 || pos_nw[v] == 0)) {
            if (!shrink(v, DALL ^ DY)) return false;
        }
        unsigned char d = dom[v];
        if (!(d & DY)) {
            unsigned char mask = (d == DW) ? DY : (DY | DB);
            for (const AdjEntry& a : g.neighbors(v))
                if (!shrink(a.to, mask)) return false;
        }
        if (d == DY) {
            if (def_nw[v] == 1) {
                for (const AdjEntry& a : g.neighbors(v))
                    if (dom[a.to] & DW)
                        if (!shrink(a.to, DW)) return false;
            } else if (def_nw[v] == 0 && pos_nw[v] == 1) {
                for (const AdjEntry& a : g.neighbors(v))
                    if (dom[a.to] & (DY | DB))
                        if (!shrink(a.to, DY | DB)) return false;
            }
        }
        for (int t : tri_of[v])
            if (!tri_check(t)) return false;
        return true;
    }

    bool propagate() {
        while (!work.empty()) {
            int v = work.back();
            work.pop_back();
            in_work[v] = 0;
            if (!check(v)) return false;
        }
        return true;
    }

    void record_leaf() {
        std::vector<int> ids;
        double w = 0.0;
        for (int id = 0; id < g.edge_count(); ++id) {
            const Edge& e = g.edge(id);
            if (!(dom[e.u] & DW) && !(dom[e.v] & DW)) {
                ids.push_back(id);
                w += g.edge(id).w;
            }
        }
        if (!found || w < best_weight - kWeightTolerance ||
            (w < best_weight + kWeightTolerance &&
             (ids.size() < best_ids.size() ||
              (ids.size() == best_ids.size() && ids < best_ids)))) {
#ifndef NDEBUG
            Coloring c;
            c.color.resize(g.vertex_count());
            for (int v = 0; v < g.vertex_count(); ++v)
                c.color[v] = dom[v] == DW   ? Color::White
                             : dom[v] == DY ? Color::Yellow
                                            : Color::Black;
            assert(peds_from_coloring(g, c).has_value());
#endif
            found = true;
            best_weight = w;
            best_ids = std::move(ids);
        }
    }

    void search() {
        if (prune && found && lb >= best_weight - kWeightTolerance) return;
        if (undecided == 0) {
            record_leaf();
            return;
        }
        int v = -1;
        for (int u = 0; u < g.vertex_count(); ++u) {
            if (std::popcount(dom[u]) == 1) continue;
            if (v < 0 || n_single[u] > n_single[v] ||
                (n_single[u] == n_single[v] && g.degree(u) > g.degree(v)))
                v = u;
        }
        ++st.branchings;
        for (unsigned char c : {DW, DY, DB}) {
            if (!(dom[v] & c)) continue;
            size_t mark = trail.size();
            double saved_lb = lb;
            if (shrink(v, c) && propagate()) search();
            undo_to(mark, saved_lb);
        }
    }

    void run() {
        // the trivial set is always a valid fallback and seeds the bound
        found = true;
        best_ids.resize(g.edge_count());
        for (int i = 0; i < g.edge_count(); ++i) best_ids[i] = i;
        best_weight = g.total_weight();

        for (int v = 0; v < g.vertex_count(); ++v) {
            if (g.degree(v) == 0) dom[v] = DW;
            else if (g.degree(v) < 2) dom[v] &= static_cast<unsigned char>(DALL ^ DB);
            push_work(v);
        }
        // derive counters for the pre-restricted domains
        std::fill(def_nw.begin(), def_nw.end(), 0);
        std::fill(pos_nw.begin(), pos_nw.end(), 0);
        std::fill(n_single.begin(), n_single.end(), 0);
        undecided = 0;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (std::popcount(dom[v]) != 1) ++undecided;
        for (int v = 0; v < g.vertex_count(); ++v) {
            for (const AdjEntry& a : g.neighbors(v)) {
                if (!(dom[a.to] & DW)) ++def_nw[v];
                if (dom[a.to] & (DY | DB)) ++pos_nw[v];
                if (std::popcount(dom[a.to]) == 1) ++n_single[v];
            }
        }
        lb = 0.0;
        for (const Edge& e : g.edges())
            if (!(dom[e.u] & DW) && !(dom[e.v] & DW)) lb += e.w;

        if (propagate()) search();
        size_t zero = 0;
        undo_to(zero, 0.0);
    }
};

}  // namespace

std::pair<EdgeSet, double> peds_min_weight(const Graph& g, SolverStats* stats) {
    SolverStats local;
    SolverStats& st = stats ? *stats : local;
    std::vector<int> all_ids;
    for (const std::vector<int>& comp : components(g)) {
        InducedSubgraph sub = induced_subgraph(g, comp);
        PedsSearch search(sub.graph, st);
        search.run();
        for (int id : search.best_ids) all_ids.push_back(sub.orig_edge[id]);
    }
    EdgeSet s = EdgeSet::of(g, std::move(all_ids));
    double w = s.weight;
    return {std::move(s), w};
}

}  // namespace pedom
