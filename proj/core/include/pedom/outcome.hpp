#pragma once

#include <array>
#include <string>
#include <variant>

#include "pedom/coloring.hpp"
#include "pedom/graph.hpp"

namespace pedom {

struct Optimal {
    EdgeSet set;
    double weight = 0.0;
    PedsKind kind = PedsKind::Trivial;
};

struct P5Certificate {
    std::array<int, 5> vertices;
};

struct NotInClass {
    std::string reason;
    int witness_vertex = -1;
};

/// Tagged solver result: an optimum, a robustness certificate, or a report
/// that the instance is outside the solver's class.
using SolveOutcome = std::variant<Optimal, P5Certificate, NotInClass>;

}  // namespace pedom
