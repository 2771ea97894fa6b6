#include "pedom/p5free.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "pedom/coloring.hpp"
#include "pedom/queries.hpp"

namespace pedom {

namespace {

std::array<int, 5> path_to_root(const BfsResult& bfs, int from) {
    // from is at distance 4 from the BFS root; shortest paths are induced
    std::array<int, 5> p{};
    int v = from;
    for (int i = 4; i >= 0; --i) {
        p[i] = v;
        v = bfs.parent[v];
    }
    return p;
}

}  // namespace

TestResult test_vertex(const Graph& g, int v) {
    BfsResult bfs = bfs_from(g, v);
    TestResult r;
    if (bfs.reached != g.vertex_count()) {
        r.kind = TestResult::Kind::Disconnected;
        return r;
    }
    r.eccentricity = bfs.max_dist;
    if (bfs.max_dist >= 4) {
        r.kind = TestResult::Kind::AtLeast4;
        int far = -1;
        for (int u = 0; u < g.vertex_count(); ++u)
            if (bfs.dist[u] == 4) {
                far = u;
                break;
            }
        r.p5 = path_to_root(bfs, far);
        std::reverse(r.p5->begin(), r.p5->end());  // start at v
    } else if (bfs.max_dist == 3) {
        r.kind = TestResult::Kind::Exactly3;
        int far = -1;
        for (int u = 0; u < g.vertex_count(); ++u)
            if (bfs.dist[u] == 3) {
                far = u;
                break;
            }
        std::array<int, 4> p{};
        int x = far;
        for (int i = 3; i >= 0; --i) {
            p[i] = x;
            x = bfs.parent[x];
        }
        r.p4 = p;
    } else {
        r.kind = TestResult::Kind::AtMost2;
    }
    return r;
}

namespace {

P5Certificate certify(const Graph& g, std::array<int, 5> p) {
    if (!verify_induced_path(g, p))
        throw std::logic_error("p5free: produced certificate does not induce a P5");
    return P5Certificate{p};
}

// P5 extraction for the two-probe failure case of the principal-vertex
// search. u,v1,w,z is an induced P4, x is at distance 3 from v1, chosen_set B
// and the maximality of |N(v1) ∩ B| justify the final case.
P5Certificate extract_p5(const Graph& g, int u, int v1, int w, int z, int x,
                         const BfsResult& bfs_v1, const BfsResult& bfs_w,
                         const std::vector<char>& in_b) {
    if (bfs_w.dist[x] == 3) {
        // shortest path v1,a,b,x
        int b = bfs_v1.parent[x];
        if (g.adjacent(b, u)) return certify(g, {x, b, u, v1, w});
        if (g.adjacent(b, z)) return certify(g, {x, b, z, w, v1});
        int a = bfs_v1.parent[b];
        if (!g.adjacent(w, a)) return certify(g, {w, v1, a, b, x});
        if (!g.adjacent(u, a)) return certify(g, {x, b, a, v1, u});
        if (!g.adjacent(a, z)) return certify(g, {x, b, a, w, z});
        throw std::logic_error("p5free: u,z at distance 3 share the neighbor a");
    }
    // dist(x, w) == 2
    if (g.adjacent(z, x)) return certify(g, {u, v1, w, z, x});
    int a = -1;
    for (const AdjEntry& e : g.neighbors(w))
        if (g.adjacent(e.to, x)) {
            a = e.to;
            break;
        }
    assert(a >= 0);
    if (!g.adjacent(u, a)) return certify(g, {u, v1, w, a, x});
    // a lies in A = N(u) ∩ N(w) and sees x in B; v1 maximizes neighbors in B,
    // so some y in B is adjacent to v1 but not to a.
    int y = -1;
    for (const AdjEntry& e : g.neighbors(v1))
        if (in_b[e.to] && !g.adjacent(a, e.to)) {
            y = e.to;
            break;
        }
    if (y < 0) throw std::logic_error("p5free: missing witness y in B");
    if (!g.adjacent(x, y)) return certify(g, {y, v1, u, a, x});
    return certify(g, {x, y, v1, w, z});
}

}  // namespace

PrincipalResult principal_vertex(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("principal_vertex: empty graph");

    PrincipalResult out;
    BfsResult bfs_u = bfs_from(g, 0);
    ++out.tests_used;
    if (bfs_u.reached != g.vertex_count())
        throw std::invalid_argument("principal_vertex: graph not connected");
    if (bfs_u.max_dist <= 2) {
        out.result = 0;
        return out;
    }
    if (bfs_u.max_dist >= 4) {
        int far = -1;
        for (int t = 0; t < g.vertex_count(); ++t)
            if (bfs_u.dist[t] == 4) {
                far = t;
                break;
            }
        auto p = path_to_root(bfs_u, far);
        out.result = certify(g, p);
        return out;
    }

    // eccentricity 3: induced P4 u,v,w,z along a shortest path
    const int u = 0;
    int z = -1;
    for (int t = 0; t < g.vertex_count(); ++t)
        if (bfs_u.dist[t] == 3) {
            z = t;
            break;
        }
    int w = bfs_u.parent[z];

    // B = V minus the neighborhoods of u, w and z; v1 in N(u) ∩ N(w) with the
    // most neighbors in B
    std::vector<char> in_b(g.vertex_count(), 1);
    for (int t : {u, w, z})
        for (const AdjEntry& a : g.neighbors(t)) in_b[a.to] = 0;
    int v1 = -1, v1_score = -1;
    for (const AdjEntry& a : g.neighbors(u)) {
        if (!g.adjacent(a.to, w)) continue;
        int score = 0;
        for (const AdjEntry& b : g.neighbors(a.to)) score += in_b[b.to];
        if (score > v1_score) {
            v1 = a.to;
            v1_score = score;
        }
    }
    assert(v1 >= 0);

    BfsResult bfs_v1 = bfs_from(g, v1);
    ++out.tests_used;
    if (bfs_v1.max_dist <= 2) {
        out.result = v1;
        return out;
    }
    if (bfs_v1.max_dist >= 4) {
        int far = -1;
        for (int t = 0; t < g.vertex_count(); ++t)
            if (bfs_v1.dist[t] == 4) {
                far = t;
                break;
            }
        out.result = certify(g, path_to_root(bfs_v1, far));
        return out;
    }

    BfsResult bfs_w = bfs_from(g, w);
    ++out.tests_used;
    if (bfs_w.max_dist <= 2) {
        out.result = w;
        return out;
    }
    if (bfs_w.max_dist >= 4) {
        int far = -1;
        for (int t = 0; t < g.vertex_count(); ++t)
            if (bfs_w.dist[t] == 4) {
                far = t;
                break;
            }
        out.result = certify(g, path_to_root(bfs_w, far));
        return out;
    }

    int x = -1;
    for (int t = 0; t < g.vertex_count(); ++t)
        if (bfs_v1.dist[t] == 3) {
            x = t;
            break;
        }
    out.result = extract_p5(g, u, v1, w, z, x, bfs_v1, bfs_w, in_b);
    return out;
}

DominatingStructure dominating_structure(const Graph& g, int v) {
    auto ecc = eccentricity(g, v);
    if (!ecc || *ecc > 2)
        throw std::invalid_argument("dominating_structure: vertex is not principal");

    const int n = g.vertex_count();
    std::vector<char> in_x(n, 0);
    std::vector<int> dom_count(n, 0);
    auto dominate = [&](int t, int delta) {
        dom_count[t] += delta;
        for (const AdjEntry& a : g.neighbors(t)) dom_count[a.to] += delta;
    };
    in_x[v] = 1;
    dominate(v, +1);
    for (const AdjEntry& a : g.neighbors(v)) {
        in_x[a.to] = 1;
        dominate(a.to, +1);
    }
    // Greedy shrink, keeping v: w is removable iff nothing in N[w] would lose
    // its last dominator.
    for (const AdjEntry& a : g.neighbors(v)) {
        int w = a.to;
        bool removable = dom_count[w] >= 2;
        for (const AdjEntry& b : g.neighbors(w))
            if (dom_count[b.to] < 2) {
                removable = false;
                break;
            }
        if (removable) {
            in_x[w] = 0;
            dominate(w, -1);
        }
    }
    std::vector<int> x_set;
    for (int t = 0; t < n; ++t)
        if (in_x[t]) x_set.push_back(t);

    const int p = static_cast<int>(x_set.size());
    if (p <= 2) return DominatingKp{x_set};
    if (p == 3) {
        std::vector<int> others;
        for (int t : x_set)
            if (t != v) others.push_back(t);
        if (g.adjacent(others[0], others[1])) return DominatingKp{x_set};
        return DominatingP3{others[0], v, others[1]};
    }

    bool clique = true;
    std::pair<int, int> missing{-1, -1};
    for (size_t i = 0; i < x_set.size() && clique; ++i)
        for (size_t j = i + 1; j < x_set.size(); ++j)
            if (!g.adjacent(x_set[i], x_set[j])) {
                clique = false;
                missing = {x_set[i], x_set[j]};
                break;
            }
    if (clique) return DominatingKp{x_set};

    // |X| >= 4 and not complete: pick a non-adjacent pair plus any third
    // member distinct from v, fetch their private dominated vertices, and
    // read an induced P5 off the case analysis.
    std::array<int, 3> vs{missing.first, missing.second, -1};
    for (int t : x_set)
        if (t != v && t != vs[0] && t != vs[1]) {
            vs[2] = t;
            break;
        }
    assert(vs[2] >= 0);

    auto private_of = [&](int t) {
        for (int cand = 0; cand < n; ++cand)
            if (dom_count[cand] == 1 && (cand == t || g.adjacent(cand, t)))
                return cand;
        throw std::logic_error("dominating_structure: member without a private vertex");
    };

    // arrange the triple by its edge count: 0 edges -> any order; 1 edge ->
    // the edge at positions 2,3; 2 edges -> shared endpoint in the middle
    int e12 = g.adjacent(vs[0], vs[1]), e13 = g.adjacent(vs[0], vs[2]), e23 = g.adjacent(vs[1], vs[2]);
    int edges = e12 + e13 + e23;
    std::array<int, 3> t{};
    if (edges == 0) {
        t = vs;
    } else if (edges == 1) {
        if (e12) t = {vs[2], vs[0], vs[1]};
        else if (e13) t = {vs[1], vs[0], vs[2]};
        else t = {vs[0], vs[1], vs[2]};
    } else {  // exactly 2 edges; vs[0]vs[1] is missing by construction
        t = {vs[0], vs[2], vs[1]};
    }
    int w1 = private_of(t[0]), w2 = private_of(t[1]), w3 = private_of(t[2]);

    // any non-adjacent pair of the triple with non-adjacent privates gives a
    // P5 through v directly
    std::array<std::array<int, 2>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
    std::array<int, 3> ws{w1, w2, w3};
    for (auto [i, j] : pairs) {
        if (!g.adjacent(t[i], t[j]) && !g.adjacent(ws[i], ws[j]))
            return certify(g, {ws[i], t[i], v, t[j], ws[j]});
    }
    if (edges <= 1) return certify(g, {w2, w1, t[0], v, t[2]});
    // two edges: v1-v3 missing, w1w3 present
    if (g.adjacent(w1, w2)) return certify(g, {w2, w1, t[0], v, t[2]});
    if (g.adjacent(w2, w3)) return certify(g, {w2, w3, t[2], v, t[0]});
    return certify(g, {w2, t[1], t[2], w3, w1});
}

namespace {

struct ComponentSolver {
    const Graph& g;
    SolverStats* stats;
    std::vector<EdgeSet> candidates;
    std::optional<P5Certificate> cert;

    void add(std::optional<EdgeSet> p) {
        if (p) candidates.push_back(std::move(*p));
    }
    void add_pair(std::optional<std::pair<EdgeSet, Coloring>> p) {
        if (p) candidates.push_back(std::move(p->first));
    }
    void add_completion(std::optional<std::pair<int, EdgeSet>> p) {
        if (p) candidates.push_back(std::move(p->second));
    }

    std::vector<int> open_neighborhood(int v, int except = -1) const {
        std::vector<int> out;
        for (const AdjEntry& a : g.neighbors(v))
            if (a.to != except) out.push_back(a.to);
        return out;
    }

    // Figure-pattern candidates for a dominating induced P3 (v1, v2, v3).
    void add_p3_patterns(const DominatingP3& p3) {
        const int v1 = p3.v1, v2 = p3.v2, v3 = p3.v3;
        // (a) one end yellow, the rest black: whites are the yellow end's
        // other neighbors
        add_pair(peds_from_white_set(g, open_neighborhood(v3, v2)));
        add_pair(peds_from_white_set(g, open_neighborhood(v1, v2)));
        // (b) black end, yellow middle, white end: whites are the middle's
        // neighbors minus the black end
        add_pair(peds_from_white_set(g, open_neighborhood(v2, v1)));
        add_pair(peds_from_white_set(g, open_neighborhood(v2, v3)));
        // (c) yellow ends, black middle
        {
            std::vector<int> whites;
            for (int end : {v1, v3})
                for (const AdjEntry& a : g.neighbors(end))
                    if (a.to != v2) whites.push_back(a.to);
            std::sort(whites.begin(), whites.end());
            whites.erase(std::unique(whites.begin(), whites.end()), whites.end());
            add_pair(peds_from_white_set(g, whites));
        }
        // (d) white ends, yellow middle: yellows are both ends' neighborhoods,
        // one black vertex completes
        {
            std::vector<int> yellows;
            for (int end : {v1, v3})
                for (const AdjEntry& a : g.neighbors(end)) yellows.push_back(a.to);
            std::sort(yellows.begin(), yellows.end());
            yellows.erase(std::unique(yellows.begin(), yellows.end()), yellows.end());
            add_completion(single_black_completion(g, yellows));
        }
        // (e) yellow ends, white middle
        add_e_pattern(v1, v2, v3);
    }

    void add_e_pattern(int v1, int v2, int v3) {
        int tri12 = 0, tri23 = 0;
        for (const AdjEntry& a : g.neighbors(v2)) {
            if (g.adjacent(a.to, v1)) ++tri12;
            if (g.adjacent(a.to, v3)) ++tri23;
        }
        if (tri12 >= 2 || tri23 >= 2) return;          // two triangles on one edge
        if (tri12 + tri23 == 2) return;                // one triangle on each edge
        if (tri12 + tri23 == 1) {
            add_completion(single_black_completion(g, open_neighborhood(v2)));
            return;
        }
        // no triangle on the P3: every vertex of N(v1)\N(v3) must see every
        // vertex of N(v3)\N(v1), otherwise an induced P5 appears
        std::vector<int> a13, a31;
        for (const AdjEntry& a : g.neighbors(v1))
            if (a.to != v2 && !g.adjacent(a.to, v3) && a.to != v3) a13.push_back(a.to);
        for (const AdjEntry& a : g.neighbors(v3))
            if (a.to != v2 && !g.adjacent(a.to, v1) && a.to != v1) a31.push_back(a.to);
        for (int p : a13)
            for (int q : a31)
                if (p != q && !g.adjacent(p, q)) {
                    cert = certify(g, {p, v1, v2, v3, q});
                    return;
                }
        add_completion(single_black_completion(g, open_neighborhood(v2)));
        if (a13.size() == 1 && a31.size() == 1 && a13[0] != a31[0]) {
            // two blacks, one on each side
            Coloring c;
            c.color.assign(g.vertex_count(), Color::White);
            bool consistent = true;
            for (const AdjEntry& a : g.neighbors(v2)) c.color[a.to] = Color::Yellow;
            for (int b : {a13[0], a31[0]}) {
                if (c.color[b] != Color::White) consistent = false;
                c.color[b] = Color::Black;
            }
            if (consistent) add(peds_from_coloring(g, c));
        }
    }

    SolveOutcome solve() {
        if (g.edge_count() == 0)
            return Optimal{EdgeSet{}, 0.0, PedsKind::Efficient};

        candidates.push_back(EdgeSet::all_edges(g));

        PrincipalResult pr = principal_vertex(g);
        if (auto* c = std::get_if<P5Certificate>(&pr.result)) return *c;
        int v = std::get<int>(pr.result);

        DominatingStructure ds = dominating_structure(g, v);
        if (auto* c = std::get_if<P5Certificate>(&ds)) return *c;

        if (auto* kp = std::get_if<DominatingKp>(&ds)) {
            if (kp->vertices.size() >= 4) {
                // a dominating K4 forces the trivial set as the unique PEDS
                EdgeSet all = EdgeSet::all_edges(g);
                double w = all.weight;
                return Optimal{std::move(all), w, PedsKind::Trivial};
            }
            if (auto eeds = dim_min_weight_seeded(g, kp->vertices, stats))
                candidates.push_back(std::move(eeds->first));
            std::optional<DominatingP3> upgraded;
            if (kp->vertices.size() == 2) {
                int a = kp->vertices[0], b = kp->vertices[1];
                bool common = false;
                for (const AdjEntry& e : g.neighbors(a))
                    if (g.adjacent(e.to, b)) {
                        common = true;
                        break;
                    }
                if (!common) {
                    // disjoint neighborhoods: extend the K2 to a dominating P3
                    for (const AdjEntry& e : g.neighbors(a))
                        if (e.to != b) {
                            upgraded = DominatingP3{e.to, a, b};
                            break;
                        }
                    if (!upgraded) {
                        for (const AdjEntry& e : g.neighbors(b))
                            if (e.to != a) {
                                upgraded = DominatingP3{a, b, e.to};
                                break;
                            }
                    }
                }
            }
            if (upgraded) add_p3_patterns(*upgraded);
        } else {
            const auto& p3 = std::get<DominatingP3>(ds);
            if (auto eeds = dim_min_weight_seeded(g, {p3.v1, p3.v2, p3.v3}, stats))
                candidates.push_back(std::move(eeds->first));
            add_p3_patterns(p3);
        }
        if (cert) return *cert;

        const EdgeSet* best = &candidates.front();
        for (const EdgeSet& c : candidates)
            if (better_edge_set(c, *best)) best = &c;
        EdgeSet chosen = *best;
        double w = chosen.weight;
        PedsKind kind = classify_kind(coloring_from_peds(g, chosen));
        return Optimal{std::move(chosen), w, kind};
    }
};

}  // namespace

SolveOutcome solve_p5free(const Graph& g, SolverStats* stats) {
    std::vector<int> all_ids;
    for (const std::vector<int>& comp : components(g)) {
        InducedSubgraph sub = induced_subgraph(g, comp);
        ComponentSolver solver{sub.graph, stats, {}, {}};
        SolveOutcome outcome = solver.solve();
        if (auto* c = std::get_if<P5Certificate>(&outcome)) {
            std::array<int, 5> mapped{};
            for (int i = 0; i < 5; ++i) mapped[i] = sub.orig_vertex[c->vertices[i]];
            return P5Certificate{mapped};
        }
        for (int id : std::get<Optimal>(outcome).set.ids) all_ids.push_back(sub.orig_edge[id]);
    }
    EdgeSet set = EdgeSet::of(g, std::move(all_ids));
    double w = set.weight;
    PedsKind kind = classify_kind(coloring_from_peds(g, set));
    return Optimal{std::move(set), w, kind};
}

}  // namespace pedom
