#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "pedom/dim.hpp"
#include "pedom/graph.hpp"
#include "pedom/outcome.hpp"

namespace pedom {

/// Outcome of the eccentricity probe at one vertex.
struct TestResult {
    enum class Kind { Disconnected, AtLeast4, Exactly3, AtMost2 };
    Kind kind;
    int eccentricity = -1;                      // meaningful unless Disconnected
    std::optional<std::array<int, 5>> p5;       // set when AtLeast4
    std::optional<std::array<int, 4>> p4;       // set when Exactly3, starts at v
};
TestResult test_vertex(const Graph& g, int v);

/// Principal vertex (eccentricity at most 2) or an induced P5, found with at
/// most three eccentricity probes. Requires g connected and nonempty.
struct PrincipalResult {
    std::variant<int, P5Certificate> result;
    int tests_used = 0;
};
PrincipalResult principal_vertex(const Graph& g);

struct DominatingKp {
    std::vector<int> vertices;  // a clique that dominates; p = vertices.size()
};
struct DominatingP3 {
    int v1, v2, v3;  // induced path, v2 in the middle; the set dominates
};
using DominatingStructure = std::variant<DominatingKp, DominatingP3, P5Certificate>;

/// Shrinks N[v] greedily to a minimal dominating set and classifies it as a
/// dominating clique or induced P3, or extracts an induced P5 when the
/// remainder is large and not complete. Requires v principal.
DominatingStructure dominating_structure(const Graph& g, int v);

/// Robust weighted solver: a verified minimum-weight PEDS for P5-free inputs,
/// or an induced P5 certificate. Disconnected inputs are solved per component.
SolveOutcome solve_p5free(const Graph& g, SolverStats* stats = nullptr);

}  // namespace pedom
