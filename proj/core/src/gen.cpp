#include "pedom/gen.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "pedom/gadgets.hpp"

namespace pedom {

int Rng::below(int n) {
    if (n <= 0) throw std::invalid_argument("rng: empty range");
    // rejection sampling keeps the draw unbiased and portable
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % static_cast<std::uint64_t>(n);
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return static_cast<int>(x % static_cast<std::uint64_t>(n));
}

double Rng::real(double lo, double hi) {
    double unit = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
}

Graph random_cubic(int n, Rng& rng) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("random_cubic: n must be even and at least 4");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<int> stubs(3 * n);
        for (int i = 0; i < 3 * n; ++i) stubs[i] = i / 3;
        for (int i = 3 * n - 1; i > 0; --i) std::swap(stubs[i], stubs[rng.below(i + 1)]);
        std::set<std::pair<int, int>> seen;
        std::vector<Edge> edges;
        bool simple = true;
        for (int i = 0; i < 3 * n && simple; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) simple = false;
            else {
                auto key = std::minmax(u, v);
                if (!seen.insert({key.first, key.second}).second) simple = false;
                else edges.push_back({u, v, 1.0});
            }
        }
        if (simple) return Graph::from_edges(n, std::move(edges));
    }
    throw std::runtime_error("random_cubic: rejection sampling failed");
}

Graph triangle_inflation(const Graph& cubic) {
    for (int v = 0; v < cubic.vertex_count(); ++v)
        if (cubic.degree(v) != 3)
            throw std::invalid_argument("triangle_inflation: base graph must be cubic");
    std::vector<Edge> edges;
    for (int v = 0; v < cubic.vertex_count(); ++v) {
        edges.push_back({3 * v, 3 * v + 1, 1.0});
        edges.push_back({3 * v, 3 * v + 2, 1.0});
        edges.push_back({3 * v + 1, 3 * v + 2, 1.0});
    }
    auto corner = [&](int v, int nbr) {
        auto nb = cubic.neighbors(v);
        for (size_t i = 0; i < nb.size(); ++i)
            if (nb[i].to == nbr) return 3 * v + static_cast<int>(i);
        throw std::logic_error("triangle_inflation: neighbor lookup failed");
    };
    for (const Edge& e : cubic.edges())
        edges.push_back({corner(e.u, e.v), corner(e.v, e.u), 1.0});
    return Graph::from_edges(3 * cubic.vertex_count(), std::move(edges));
}

Graph random_split(int n, int k, double p, Rng& rng) {
    if (k < 1 || k > n) throw std::invalid_argument("random_split: need 1 <= k <= n");
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) edges.push_back({i, j, 1.0});
    for (int v = k; v < n; ++v) {
        int anchor = rng.below(k);
        edges.push_back({anchor, v, 1.0});
        for (int j = 0; j < k; ++j)
            if (j != anchor && rng.chance(p)) edges.push_back({j, v, 1.0});
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph random_graph(int n, double p, Rng& rng) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.chance(p)) edges.push_back({i, j, 1.0});
    return Graph::from_edges(n, std::move(edges));
}

Graph random_connected_graph(int n, int extra_edges, Rng& rng) {
    if (n < 1) throw std::invalid_argument("random_connected_graph: n must be positive");
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);
    std::set<std::pair<int, int>> seen;
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) {
        int u = order[i], v = order[rng.below(i)];
        auto key = std::minmax(u, v);
        seen.insert({key.first, key.second});
        edges.push_back({u, v, 1.0});
    }
    for (int tries = 0; tries < 20 * extra_edges && static_cast<int>(edges.size()) < n - 1 + extra_edges;
         ++tries) {
        int u = rng.below(n), v = rng.below(n);
        if (u == v) continue;
        auto key = std::minmax(u, v);
        if (seen.insert({key.first, key.second}).second) edges.push_back({u, v, 1.0});
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph random_bipartite(int left, int right, double p, Rng& rng) {
    std::vector<Edge> edges;
    for (int i = 0; i < left; ++i)
        for (int j = 0; j < right; ++j)
            if (rng.chance(p)) edges.push_back({i, left + j, 1.0});
    return Graph::from_edges(left + right, std::move(edges));
}

Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = i + 1; j < g.vertex_count(); ++j)
            if (!g.adjacent(i, j)) edges.push_back({i, j, 1.0});
    return Graph::from_edges(g.vertex_count(), std::move(edges));
}

void assign_random_weights(std::vector<Edge>& edges, double lo, double hi, Rng& rng) {
    for (Edge& e : edges) e.w = rng.real(lo, hi);
}

Graph with_random_weights(const Graph& g, double lo, double hi, Rng& rng) {
    std::vector<Edge> edges = g.edges();
    assign_random_weights(edges, lo, hi, rng);
    return Graph::from_edges(g.vertex_count(), std::move(edges));
}

namespace {

Graph complete(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j, 1.0});
    return Graph::from_edges(n, std::move(edges));
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n must be at least 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1.0});
    return Graph::from_edges(n, std::move(edges));
}

Graph path(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
    return Graph::from_edges(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.push_back({i, a + j, 1.0});
    return Graph::from_edges(a + b, std::move(edges));
}

Graph petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5, 1.0});          // outer cycle
        edges.push_back({5 + i, 5 + (i + 2) % 5, 1.0});  // inner pentagram
        edges.push_back({i, 5 + i, 1.0});                // spokes
    }
    return Graph::from_edges(10, std::move(edges));
}

Graph prism() {
    std::vector<Edge> edges;
    for (int i = 0; i < 3; ++i) {
        edges.push_back({i, (i + 1) % 3, 1.0});
        edges.push_back({3 + i, 3 + (i + 1) % 3, 1.0});
        edges.push_back({i, 3 + i, 1.0});
    }
    return Graph::from_edges(6, std::move(edges));
}

}  // namespace

std::optional<Graph> named_graph(const std::string& name) {
    std::string s;
    for (char c : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "petersen") return petersen();
    if (s == "prism") return prism();
    if (s == "shield") return shield();
    if (s == "claw") return complete_bipartite(1, 3);
    if (s == "paw") {
        return Graph::from_edges(4, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}, {2, 3, 1.0}});
    }
    try {
        if (s.size() > 1 && (s[0] == 'k' || s[0] == 'c' || s[0] == 'p')) {
            std::string rest = s.substr(1);
            auto comma = rest.find(',');
            if (comma != std::string::npos && s[0] == 'k')
                return complete_bipartite(std::stoi(rest.substr(0, comma)),
                                          std::stoi(rest.substr(comma + 1)));
            int n = std::stoi(rest);
            if (s[0] == 'k') return complete(n);
            if (s[0] == 'c') return cycle(n);
            return path(n);
        }
    } catch (const std::exception&) {
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace pedom
