#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "pedom/gen.hpp"
#include "pedom/graph.hpp"

namespace testutil {

inline pedom::Graph make(int n, std::initializer_list<std::pair<int, int>> edges) {
    std::vector<pedom::Edge> es;
    for (auto [u, v] : edges) es.push_back({u, v, 1.0});
    return pedom::Graph::from_edges(n, std::move(es));
}

inline pedom::Graph named(const char* name) {
    auto g = pedom::named_graph(name);
    REQUIRE(g.has_value());
    return *g;
}

inline std::vector<int> edge_ids(const pedom::Graph& g,
                                 std::initializer_list<std::pair<int, int>> pairs) {
    std::vector<int> ids;
    for (auto [u, v] : pairs) {
        auto id = g.edge_between(u, v);
        REQUIRE(id.has_value());
        ids.push_back(*id);
    }
    return ids;
}

inline pedom::EdgeSet edge_set(const pedom::Graph& g,
                               std::initializer_list<std::pair<int, int>> pairs) {
    return pedom::EdgeSet::of(g, edge_ids(g, pairs));
}

}  // namespace testutil
