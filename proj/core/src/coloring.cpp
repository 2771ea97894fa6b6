#include "pedom/coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace pedom {

int Coloring::count(Color c) const {
    int k = 0;
    for (Color x : color)
        if (x == c) ++k;
    return k;
}

std::vector<int> Coloring::vertices_of(Color c) const {
    std::vector<int> out;
    for (size_t v = 0; v < color.size(); ++v)
        if (color[v] == c) out.push_back(static_cast<int>(v));
    return out;
}

std::string Coloring::letters() const {
    std::string s;
    s.reserve(color.size());
    for (Color c : color)
        s += (c == Color::White ? 'W' : c == Color::Yellow ? 'Y' : 'B');
    return s;
}

const char* to_string(PedsKind k) {
    switch (k) {
        case PedsKind::Efficient: return "efficient";
        case PedsKind::Proper: return "proper";
        case PedsKind::Trivial: return "trivial";
    }
    return "?";
}

PedsKind classify_kind(const Coloring& c) {
    if (!c.has(Color::Black)) return PedsKind::Efficient;
    if (!c.has(Color::White)) return PedsKind::Trivial;
    return PedsKind::Proper;
}

namespace {

std::vector<int> incident_counts(const Graph& g, const EdgeSet& p) {
    std::vector<int> cnt(g.vertex_count(), 0);
    for (int id : p.ids) {
        ++cnt[g.edge(id).u];
        ++cnt[g.edge(id).v];
    }
    return cnt;
}

}  // namespace

DominationCheck verify_peds(const Graph& g, const EdgeSet& p) {
    std::vector<int> cnt = incident_counts(g, p);
    DominationCheck out;
    out.dominators.resize(g.edge_count());
    out.ok = true;
    for (int id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        bool member = p.contains(id);
        out.dominators[id] = cnt[e.u] + cnt[e.v] - (member ? 1 : 0);
        if (!member && out.dominators[id] != 1) out.ok = false;
    }
    return out;
}

bool verify_eeds(const Graph& g, const EdgeSet& p) {
    DominationCheck c = verify_peds(g, p);
    if (!c.ok) return false;
    for (int id : p.ids)
        if (c.dominators[id] != 1) return false;
    return true;
}

Coloring coloring_from_peds(const Graph& g, const EdgeSet& p) {
    if (!verify_peds(g, p).ok)
        throw std::invalid_argument("coloring_from_peds: not a perfect edge dominating set");
    std::vector<int> cnt = incident_counts(g, p);
    Coloring c;
    c.color.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        c.color[v] = cnt[v] == 0 ? Color::White : cnt[v] == 1 ? Color::Yellow : Color::Black;
    return c;
}

std::optional<EdgeSet> peds_from_coloring(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.color.size()) != g.vertex_count())
        throw std::invalid_argument("peds_from_coloring: coloring size mismatch");
    // Degree of each non-white vertex in the graph minus whites.
    std::vector<int> nonwhite_deg(g.vertex_count(), 0);
    std::vector<int> members;
    for (int id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        Color cu = c.color[e.u], cv = c.color[e.v];
        if (cu == Color::White && cv == Color::White) return std::nullopt;
        if ((cu == Color::White && cv == Color::Black) ||
            (cu == Color::Black && cv == Color::White))
            return std::nullopt;
        if (cu != Color::White && cv != Color::White) {
            ++nonwhite_deg[e.u];
            ++nonwhite_deg[e.v];
            members.push_back(id);
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (c.color[v] == Color::Yellow && nonwhite_deg[v] != 1) return std::nullopt;
        if (c.color[v] == Color::Black && nonwhite_deg[v] < 2) return std::nullopt;
    }
    return EdgeSet::of(g, std::move(members));
}

std::optional<std::pair<EdgeSet, Coloring>> peds_from_white_set(const Graph& g,
                                                                const std::vector<int>& whites) {
    Coloring c;
    c.color.assign(g.vertex_count(), Color::Yellow);
    for (int v : whites) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("peds_from_white_set: vertex out of range");
        c.color[v] = Color::White;
    }
    std::vector<int> nonwhite_deg(g.vertex_count(), 0);
    for (const Edge& e : g.edges()) {
        if (c.color[e.u] != Color::White && c.color[e.v] != Color::White) {
            ++nonwhite_deg[e.u];
            ++nonwhite_deg[e.v];
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (c.color[v] == Color::White) continue;
        if (nonwhite_deg[v] == 0) return std::nullopt;  // non-white vertex with no P-edge
        c.color[v] = nonwhite_deg[v] == 1 ? Color::Yellow : Color::Black;
    }
    auto p = peds_from_coloring(g, c);
    if (!p) return std::nullopt;
    return std::pair{std::move(*p), std::move(c)};
}

std::optional<std::pair<int, EdgeSet>> single_black_completion(const Graph& g,
                                                               const std::vector<int>& yellows) {
    const int n = g.vertex_count();
    std::vector<char> in_y(n, 0);
    for (int v : yellows) {
        if (v < 0 || v >= n) throw std::invalid_argument("single_black_completion: vertex out of range");
        in_y[v] = 1;
    }
    // (i) yellows induce max degree 1 with at least one isolated vertex
    std::vector<int> y_deg(n, 0);
    for (const Edge& e : g.edges()) {
        if (in_y[e.u] && in_y[e.v]) {
            ++y_deg[e.u];
            ++y_deg[e.v];
        }
        // (ii) the complement of the yellows is independent
        if (!in_y[e.u] && !in_y[e.v]) return std::nullopt;
    }
    std::vector<int> isolated, matched;
    for (int v = 0; v < n; ++v) {
        if (!in_y[v]) continue;
        if (y_deg[v] > 1) return std::nullopt;
        (y_deg[v] == 0 ? isolated : matched).push_back(v);
    }
    if (isolated.empty()) return std::nullopt;

    // (iii) candidates: common neighbors of all isolated yellows that avoid
    // every matched yellow's neighborhood.
    std::vector<int> common_cnt(n, 0);
    std::vector<char> banned(n, 0);
    for (int s : isolated)
        for (const AdjEntry& a : g.neighbors(s)) ++common_cnt[a.to];
    for (int y : matched)
        for (const AdjEntry& a : g.neighbors(y)) banned[a.to] = 1;

    int best = -1;
    double best_w = 0.0;
    for (int b = 0; b < n; ++b) {
        if (in_y[b] || banned[b] || common_cnt[b] != static_cast<int>(isolated.size())) continue;
        double w = 0.0;
        for (const AdjEntry& a : g.neighbors(b)) w += g.edge(a.edge).w;
        if (best < 0 || w < best_w - kWeightTolerance) {
            best = b;
            best_w = w;
        }
    }
    if (best < 0) return std::nullopt;

    Coloring c;
    c.color.assign(n, Color::White);
    for (int v : yellows) c.color[v] = Color::Yellow;
    c.color[best] = Color::Black;
    auto p = peds_from_coloring(g, c);
    if (!p) return std::nullopt;
    return std::pair{best, std::move(*p)};
}

double weight_of(const Graph& g, const std::vector<int>& edge_ids) {
    double s = 0.0;
    for (int id : edge_ids) s += g.edge(id).w;
    return s;
}

}  // namespace pedom
