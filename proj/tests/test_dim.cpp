#include <doctest.h>

#include "pedom/coloring.hpp"
#include "pedom/dim.hpp"
#include "pedom/gadgets.hpp"
#include "pedom/gen.hpp"
#include "pedom/oracle.hpp"
#include "test_util.hpp"

using namespace pedom;
using testutil::named;

TEST_CASE("dim solver basic examples") {
    CHECK_FALSE(dim_min_weight(named("prism")).has_value());
    CHECK_FALSE(dim_min_weight(named("k4")).has_value());

    Graph p3 = Graph::from_edges(3, {{0, 1, 5.0}, {1, 2, 1.0}});
    auto r = dim_min_weight(p3);
    REQUIRE(r.has_value());
    CHECK(r->second == doctest::Approx(1.0));
    CHECK(r->first.ids == std::vector<int>{1});

    auto petersen = dim_min_weight(named("petersen"));
    auto oracle = min_weight_eeds_bruteforce(named("petersen"));
    CHECK(petersen.has_value() == oracle.has_value());
    if (petersen) CHECK(petersen->first.size() == 3);
}

TEST_CASE("dim matches the oracle on random graph families") {
    Rng rng(61);
    int checked = 0;
    for (int it = 0; it < 500; ++it) {
        Graph g;
        switch (it % 4) {
            case 0: g = with_random_weights(random_graph(4 + rng.below(9), 0.35, rng), -4, 4, rng); break;
            case 1: {
                int n = 4 + 2 * rng.below(5);
                g = with_random_weights(random_cubic(n, rng), -4, 4, rng);
                break;
            }
            case 2: {
                int n = 4 + rng.below(9);
                g = with_random_weights(random_split(n, 1 + rng.below(n / 2 + 1), 0.4, rng), -4, 4, rng);
                break;
            }
            default: {
                Graph base = random_graph(4 + rng.below(9), 0.3, rng);
                // claw-free-ish family: line-graph style thickening not needed,
                // inflations qualify when the base happens to be cubic
                g = with_random_weights(base, -4, 4, rng);
                break;
            }
        }
        auto fast = dim_min_weight(g);
        auto slow = min_weight_eeds_bruteforce(g);
        REQUIRE(fast.has_value() == slow.has_value());
        if (fast) {
            CHECK(fast->second == doctest::Approx(slow->second).epsilon(1e-9));
            CHECK(verify_eeds(g, fast->first));
            ++checked;
        }
    }
    CHECK(checked > 50);  // the pool must actually exercise feasible instances
}

TEST_CASE("seeded search equals unseeded for every small dominating set") {
    Rng rng(67);
    for (int it = 0; it < 120; ++it) {
        Graph g = with_random_weights(random_connected_graph(3 + rng.below(8), rng.below(8), rng),
                                      -3, 3, rng);
        auto plain = dim_min_weight(g);
        // try all dominating sets of size <= 3
        int n = g.vertex_count();
        for (int mask = 1; mask < (1 << n); ++mask) {
            if (__builtin_popcount(static_cast<unsigned>(mask)) > 3) continue;
            std::vector<int> d;
            std::vector<char> dominated(n, 0);
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) {
                    d.push_back(v);
                    dominated[v] = 1;
                    for (const AdjEntry& a : g.neighbors(v)) dominated[a.to] = 1;
                }
            bool dominating = true;
            for (int v = 0; v < n; ++v)
                if (!dominated[v]) dominating = false;
            if (!dominating) continue;
            auto seeded = dim_min_weight_seeded(g, d);
            REQUIRE(seeded.has_value() == plain.has_value());
            if (seeded) CHECK(seeded->second == doctest::Approx(plain->second).epsilon(1e-9));
        }
    }
}

TEST_CASE("seeded search rejects bad seeds") {
    Graph p5 = named("p5");
    CHECK_THROWS_AS(dim_min_weight_seeded(p5, {0}), std::invalid_argument);  // not dominating
    Graph k5 = named("k5");
    CHECK_THROWS_AS(dim_min_weight_seeded(k5, {0, 1, 2, 3, 4}), std::invalid_argument);
}

TEST_CASE("seeded examples from the star and the shield") {
    Graph star = named("k1,4");
    auto r = dim_min_weight_seeded(star, {0});
    REQUIRE(r.has_value());
    CHECK(r->first.size() == 1);

    Graph k3 = named("k3");
    auto rk = dim_min_weight_seeded(k3, {1});
    REQUIRE(rk.has_value());
    CHECK(rk->first.size() == 1);

    Graph sh = shield();
    auto rs = dim_min_weight_seeded(sh, {1, 5, 9});
    REQUIRE(rs.has_value());
    CHECK(rs->first == testutil::edge_set(sh, {{1, 3}, {5, 7}, {9, 11}}));
}

TEST_CASE("peds_min_weight matches the oracle") {
    Rng rng(71);
    for (int it = 0; it < 300; ++it) {
        Graph g = it % 3 == 0
                      ? with_random_weights(random_graph(3 + rng.below(8), 0.4, rng), -4, 4, rng)
                      : random_graph(3 + rng.below(8), 0.4, rng);
        auto [set, w] = peds_min_weight(g);
        auto [oset, ow] = min_weight_peds_bruteforce(g);
        CHECK(verify_peds(g, set).ok);
        CHECK(w == doctest::Approx(ow).epsilon(1e-9));
    }
}

TEST_CASE("peds_min_weight on structured instances") {
    Graph sh = shield();
    auto [set, w] = peds_min_weight(sh);
    CHECK(w == doctest::Approx(3.0));

    auto [k4set, k4w] = peds_min_weight(named("k4"));
    CHECK(k4w == doctest::Approx(6.0));

    auto [c5set, c5w] = peds_min_weight(named("c5"));
    CHECK(c5w == doctest::Approx(3.0));
}
