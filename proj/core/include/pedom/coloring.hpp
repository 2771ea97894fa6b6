#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pedom/graph.hpp"

namespace pedom {

enum class Color : unsigned char { White, Yellow, Black };

/// Vertex 3-coloring induced by a perfect edge dominating set P: black means
/// at least two incident P-edges, yellow exactly one, white none.
struct Coloring {
    std::vector<Color> color;

    Color operator[](int v) const { return color[v]; }
    int count(Color c) const;
    bool has(Color c) const { return count(c) > 0; }
    std::vector<int> vertices_of(Color c) const;
    std::string letters() const;  // "WYB..." in vertex order
};

enum class PedsKind { Efficient, Proper, Trivial };
const char* to_string(PedsKind k);

/// B empty -> Efficient (the set is an induced dominating matching), else
/// W empty -> Trivial, else Proper.
PedsKind classify_kind(const Coloring& c);

struct DominationCheck {
    bool ok = false;
    // Per edge: number of members of P dominating it; members count themselves.
    std::vector<int> dominators;
};

/// True iff every edge outside p has exactly one dominator in p.
DominationCheck verify_peds(const Graph& g, const EdgeSet& p);

/// True iff every edge (members included) has exactly one dominator in p.
bool verify_eeds(const Graph& g, const EdgeSet& p);

Coloring coloring_from_peds(const Graph& g, const EdgeSet& p);  // throws on non-PEDS input

/// Validity gate for a full coloring: whites independent, whites see only
/// yellows, and in the graph minus whites yellows have degree exactly one and
/// blacks at least two. Returns P = all edges between non-white vertices when
/// the coloring is valid, nullopt otherwise.
std::optional<EdgeSet> peds_from_coloring(const Graph& g, const Coloring& c);

/// Reconstructs the unique PEDS whose white class is exactly `whites`, if one
/// exists: yellow/black fall out of degrees in the graph minus whites.
std::optional<std::pair<EdgeSet, Coloring>> peds_from_white_set(const Graph& g,
                                                                const std::vector<int>& whites);

/// Completion with coloring (B = {b}, Y = yellows, W = rest). Requires the
/// yellow-induced subgraph to have max degree 1 with an isolated vertex and
/// the complement of yellows to be independent; b is chosen among the common
/// neighbors of the isolated yellows (excluding neighbors of matched yellows)
/// minimizing the weight sum of its incident edges, ties to the smallest id.
std::optional<std::pair<int, EdgeSet>> single_black_completion(const Graph& g,
                                                               const std::vector<int>& yellows);

double weight_of(const Graph& g, const std::vector<int>& edge_ids);

}  // namespace pedom
