#include "pedom/oracle.hpp"

#include <algorithm>
#include <string>

namespace pedom {

namespace {

void enumerate_white_sets(const Graph& g, int v, std::vector<int>& whites,
                          std::vector<int>& blocked,
                          std::vector<std::pair<EdgeSet, PedsKind>>& out) {
    if (v == g.vertex_count()) {
        if (auto r = peds_from_white_set(g, whites))
            out.emplace_back(std::move(r->first), classify_kind(r->second));
        return;
    }
    enumerate_white_sets(g, v + 1, whites, blocked, out);
    if (blocked[v] == 0) {  // keep the white set independent
        whites.push_back(v);
        for (const AdjEntry& a : g.neighbors(v)) ++blocked[a.to];
        enumerate_white_sets(g, v + 1, whites, blocked, out);
        for (const AdjEntry& a : g.neighbors(v)) --blocked[a.to];
        whites.pop_back();
    }
}

}  // namespace

std::vector<std::pair<EdgeSet, PedsKind>> enumerate_peds(const Graph& g, int limit_n) {
    if (g.vertex_count() > limit_n)
        throw SizeLimitError("enumerate_peds: graph has " + std::to_string(g.vertex_count()) +
                             " vertices, limit is " + std::to_string(limit_n));
    std::vector<std::pair<EdgeSet, PedsKind>> out;
    std::vector<int> whites;
    std::vector<int> blocked(g.vertex_count(), 0);
    enumerate_white_sets(g, 0, whites, blocked, out);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first.ids < b.first.ids;
    });
    return out;
}

std::pair<EdgeSet, double> min_weight_peds_bruteforce(const Graph& g, int limit_n) {
    auto all = enumerate_peds(g, limit_n);
    // at least the trivial set exists (possibly empty, on edgeless graphs)
    const EdgeSet* best = &all.front().first;
    for (const auto& [p, kind] : all)
        if (better_edge_set(p, *best)) best = &p;
    return {*best, best->weight};
}

std::optional<std::pair<EdgeSet, double>> min_weight_eeds_bruteforce(const Graph& g, int limit_n) {
    auto all = enumerate_peds(g, limit_n);
    const EdgeSet* best = nullptr;
    for (const auto& [p, kind] : all) {
        if (kind != PedsKind::Efficient) continue;  // B empty <=> EEDS
        if (!best || better_edge_set(p, *best)) best = &p;
    }
    if (!best) return std::nullopt;
    return std::pair{*best, best->weight};
}

}  // namespace pedom
