#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "pedom/graph.hpp"

namespace pedom {

/// Deterministic RNG wrapper. Bounded draws avoid std::uniform_*_distribution
/// so that seeded output is identical across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    int below(int n);                    // uniform in [0, n)
    double real(double lo, double hi);   // uniform in [lo, hi)
    bool chance(double p) { return real(0.0, 1.0) < p; }

  private:
    std::mt19937_64 engine_;
};

/// Random 3-regular graph via the pairing model with rejection of loops and
/// multi-edges. n must be even and at least 4.
Graph random_cubic(int n, Rng& rng);

/// Replaces every vertex of a cubic graph by a triangle; the result is cubic
/// and claw-free.
Graph triangle_inflation(const Graph& cubic);

/// Split graph: clique of size k, independent set of size n-k; every
/// independent vertex gets one clique neighbor plus extras with probability p.
Graph random_split(int n, int k, double p, Rng& rng);

/// Erdos-Renyi.
Graph random_graph(int n, double p, Rng& rng);

/// Random spanning tree plus extra random edges; always connected.
Graph random_connected_graph(int n, int extra_edges, Rng& rng);

Graph random_bipartite(int left, int right, double p, Rng& rng);
Graph complement(const Graph& g);

void assign_random_weights(std::vector<Edge>& edges, double lo, double hi, Rng& rng);
Graph with_random_weights(const Graph& g, double lo, double hi, Rng& rng);

/// Small named instances for the CLI and tests: "k<n>", "c<n>", "p<n>",
/// "k<a>,<b>" (complete bipartite), "petersen", "prism", "shield", "paw",
/// "claw". Case-insensitive. Returns nullopt for unknown names.
std::optional<Graph> named_graph(const std::string& name);

}  // namespace pedom
