#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pedom/coloring.hpp"
#include "pedom/graph.hpp"

namespace pedom {

struct SizeLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// All perfect edge dominating sets of g, found by enumerating independent
/// white sets and reconstructing (the white-set map is a bijection onto the
/// PEDS family). Sorted by (cardinality, lexicographic edge ids).
/// Throws SizeLimitError when g has more than limit_n vertices.
std::vector<std::pair<EdgeSet, PedsKind>> enumerate_peds(const Graph& g, int limit_n = 24);

std::pair<EdgeSet, double> min_weight_peds_bruteforce(const Graph& g, int limit_n = 24);

std::optional<std::pair<EdgeSet, double>> min_weight_eeds_bruteforce(const Graph& g,
                                                                     int limit_n = 24);

}  // namespace pedom
