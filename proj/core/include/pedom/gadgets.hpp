#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "pedom/coloring.hpp"
#include "pedom/dim.hpp"
#include "pedom/graph.hpp"

namespace pedom {

/// Exact fraction over long long, always normalized with positive denominator.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d = 1);
    bool integral() const { return den == 1; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
    bool operator==(const Rational&) const = default;
};
bool operator<=(const Rational& a, const Rational& b);

/// The fixed 12-vertex gadget: a 12-cycle with chords v2v4, v6v8, v10v12
/// (0-based: 1-3, 5-7, 9-11). Contact vertices are v3, v7, v11.
Graph shield();
inline constexpr std::array<int, 3> kShieldContacts = {2, 6, 10};  // 0-based

/// Provenance of a gadget construction: what each source vertex and edge
/// became, plus the contact vertices of each shield for magnifications.
struct GadgetMap {
    std::vector<std::vector<int>> vertex_images;  // source vertex -> gadget vertices
    std::vector<std::vector<int>> edge_images;    // source edge -> gadget edge ids
    std::vector<std::array<int, 3>> contacts;     // per source vertex (magnify only)
};

/// Replaces every vertex of a cubic graph by a shield, reattaching the three
/// former edges at the contact vertices. Output has 12n vertices, 33n/2
/// edges, max degree 3, and no claws.
std::pair<Graph, GadgetMap> magnify(const Graph& g);

/// The 3k-subdivision: every edge becomes a path with 3k fresh internal
/// degree-2 vertices. k = 0 returns a copy of g.
std::pair<Graph, GadgetMap> subdivide(const Graph& g, int k);

struct ReductionNumbers {
    Rational eeds_size;           // rn / (4r-2); EEDS impossible when fractional
    bool eeds_possible = false;   // eeds_size integral
    Rational magnify_threshold;   // 57n / 10
    Rational subdivision_bound;   // nr/(2(2r-1)) * (2rk - k + 1)
    long long k_prime = 1;        // max(1, ceil((k-3)/9)) for girth target k
    long long girth_guarantee = 0;  // 9*k_prime + 3
};
ReductionNumbers reduction_numbers(long long r, long long n, long long k);

struct MagnifyReport {
    bool eeds_exists = false;
    std::optional<EdgeSet> eeds;          // of the source graph
    long long min_peds_size = 0;          // min-cardinality PEDS of M(g)
    Rational threshold;                    // 57n/10
    bool within_threshold = false;
    bool biconditional_holds = false;
    std::optional<EdgeSet> witness;        // PEDS of M(g) built from the EEDS
    bool witness_valid = false;
    int white_shields = 0, yellow_shields = 0;
};
/// Checks both sides of the magnification equivalence on a cubic graph:
/// EEDS existence in g against min-cardinality PEDS of M(g) vs 57n/10, and
/// rebuilds the witness PEDS shield by shield when an EEDS exists.
MagnifyReport verify_reduction_magnify(const Graph& g, SolverStats* stats = nullptr);

struct SubdivideReport {
    bool peds_of_bound_size = false;  // S(G) has a PEDS of exactly the bound size
    bool wy_coloring_exists = false;  // 2-coloring with yellows matched once
    bool eeds_exists = false;
    bool equivalent = false;
    Rational bound;
    long long min_peds_size = 0;
    std::optional<EdgeSet> witness;  // PEDS of S(G) built from an EEDS of g
    bool witness_valid = false;
    bool witness_size_exact = false;
};
/// Checks the three-way equivalence for the 3k-subdivision of an r-regular
/// graph, r >= 3, and replays the constructive witness.
SubdivideReport verify_reduction_subdivide(const Graph& g, int k, SolverStats* stats = nullptr);

struct Polynomial {
    int q = 0;
    long long component_bound = 0;  // (d^(q-1) - 1) / (d - 1)
};
struct ContainsCycle {
    int length = 0;
};
struct ForestWithBranchVertex {
    int vertex = -1;
};
using DichotomyVerdict = std::variant<Polynomial, ContainsCycle, ForestWithBranchVertex>;

/// Complexity side of perfect edge domination on H-free graphs of max degree
/// d >= 3: polynomial iff h is a linear forest, with q = |V(h)| + #components
/// - 1 and the per-component vertex bound; NP-complete otherwise.
DichotomyVerdict classify_dichotomy(const Graph& h, int d);

struct HFreeError : std::runtime_error {
    int witness = -1;
    HFreeError(const std::string& msg, int w) : std::runtime_error(msg), witness(w) {}
};

/// Exact solver for h-free graphs of max degree d when h is a linear forest:
/// every component has boundedly many vertices, so each is solved exactly.
/// Throws HFreeError when a degree, induced-P_q, or component-size check
/// disproves class membership.
std::pair<EdgeSet, double> solve_hfree_bounded(const Graph& g, const Graph& h, int d,
                                               SolverStats* stats = nullptr);

}  // namespace pedom
