#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pedom/graph.hpp"

namespace pedom {

struct SolverStats {
    long long branchings = 0;
    long long propagations = 0;

    SolverStats& operator+=(const SolverStats& o) {
        branchings += o.branchings;
        propagations += o.propagations;
        return *this;
    }
};

/// Exact minimum-weight efficient edge dominating set (dominating induced
/// matching), or nullopt when none exists. Branches on white/yellow vertex
/// labels with forced-label propagation; correctness-only contract, the
/// worst case is exponential.
std::optional<std::pair<EdgeSet, double>> dim_min_weight(const Graph& g,
                                                         SolverStats* stats = nullptr);

/// Same contract, but the search is seeded with the 2^|d| label assignments
/// of a vertex dominating set d with |d| <= 4. Throws if d does not dominate.
std::optional<std::pair<EdgeSet, double>> dim_min_weight_seeded(const Graph& g,
                                                                const std::vector<int>& d,
                                                                SolverStats* stats = nullptr);

/// Exact minimum-weight perfect edge dominating set, always defined (the
/// trivial set is a fallback). Branch and propagate over white/yellow/black
/// vertex domains; prunes on a weight bound when all weights are nonnegative.
std::pair<EdgeSet, double> peds_min_weight(const Graph& g, SolverStats* stats = nullptr);

}  // namespace pedom
