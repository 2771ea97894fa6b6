#pragma once

#include <optional>
#include <string>

#include "pedom/dim.hpp"
#include "pedom/graph.hpp"
#include "pedom/outcome.hpp"

namespace pedom {

struct ClassCheck {
    bool ok = false;
    int witness_vertex = -1;
    std::string reason;
};

/// True iff g is 3-regular and every vertex lies in a triangle, which for
/// cubic graphs is the same as claw-free.
ClassCheck check_class_cubic_clawfree(const Graph& g);

/// Replays the structural argument that graphs whose vertices all lie in
/// triangles admit no proper perfect edge dominating set: seeds one vertex
/// black, propagates blackness, and reports whether everything ended black.
/// Requires g connected with every vertex in a triangle.
bool check_no_proper_peds(const Graph& g);

/// Weighted solver for cubic claw-free graphs, including the degree-two
/// extension (claw-free, every degree-2 vertex has adjacent neighbors;
/// pendant vertices and K1/K2 components allowed). Per component the answer
/// is the lighter of the trivial set and the best EEDS.
SolveOutcome solve_cubic_clawfree(const Graph& g, SolverStats* stats = nullptr);

}  // namespace pedom
