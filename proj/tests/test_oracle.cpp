#include <doctest.h>

#include <set>

#include "pedom/coloring.hpp"
#include "pedom/gadgets.hpp"
#include "pedom/gen.hpp"
#include "pedom/oracle.hpp"
#include "test_util.hpp"

using namespace pedom;
using testutil::edge_ids;
using testutil::edge_set;
using testutil::named;

TEST_CASE("the shield has exactly the five known PEDS") {
    Graph sh = shield();
    auto all = enumerate_peds(sh);
    REQUIRE(all.size() == 5);
    CHECK(all[0].first.size() == 3);
    CHECK(all[1].first.size() == 7);
    CHECK(all[2].first.size() == 7);
    CHECK(all[3].first.size() == 7);
    CHECK(all[4].first.size() == 15);

    CHECK(all[0].first == edge_set(sh, {{1, 3}, {5, 7}, {9, 11}}));
    CHECK(all[0].second == PedsKind::Efficient);

    // the three proper sets, 1-based in the source: rotations of one another
    std::set<std::vector<int>> proper;
    for (int i = 1; i <= 3; ++i) {
        CHECK(all[i].second == PedsKind::Proper);
        proper.insert(all[i].first.ids);
    }
    std::set<std::vector<int>> expected{
        edge_ids(sh, {{2, 3}, {5, 6}, {8, 9}, {9, 10}, {10, 11}, {11, 0}, {9, 11}}),
        edge_ids(sh, {{1, 2}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {5, 7}, {10, 11}}),
        edge_ids(sh, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 3}, {6, 7}, {9, 10}})};
    for (auto& ids : expected) {
        std::vector<int> sorted = ids;
        std::sort(sorted.begin(), sorted.end());
        CHECK(proper.count(sorted) == 1);
    }

    CHECK(all[4].first == EdgeSet::all_edges(sh));
    CHECK(all[4].second == PedsKind::Trivial);
}

TEST_CASE("K4 has exactly one PEDS, the trivial one") {
    auto all = enumerate_peds(named("k4"));
    REQUIRE(all.size() == 1);
    CHECK(all[0].first.size() == 6);
    CHECK(all[0].second == PedsKind::Trivial);
}

TEST_CASE("P3 has the two single edges and the trivial set") {
    auto all = enumerate_peds(named("p3"));
    REQUIRE(all.size() == 3);
    CHECK(all[0].first.size() == 1);
    CHECK(all[1].first.size() == 1);
    CHECK(all[2].first.size() == 2);
}

TEST_CASE("size limit is enforced") {
    Rng rng(5);
    Graph big = random_graph(25, 0.2, rng);
    CHECK_THROWS_AS(enumerate_peds(big), SizeLimitError);
    CHECK_NOTHROW(enumerate_peds(big, 25));
}

TEST_CASE("minimum weight PEDS examples") {
    Graph sh = shield();
    auto [best, w] = min_weight_peds_bruteforce(sh);
    CHECK(w == doctest::Approx(3.0));

    auto [k4best, k4w] = min_weight_peds_bruteforce(named("k4"));
    CHECK(k4w == doctest::Approx(6.0));

    Graph c4 = Graph::from_edges(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {0, 3, 10.0}});
    auto [c4best, c4w] = min_weight_peds_bruteforce(c4);
    CHECK(c4w == doctest::Approx(2.0));
    CHECK(c4best == edge_set(c4, {{0, 1}, {1, 2}}));  // lexicographic among the two optima
}

TEST_CASE("minimum weight EEDS examples") {
    CHECK_FALSE(min_weight_eeds_bruteforce(named("k4")).has_value());

    Graph k3 = Graph::from_edges(3, {{0, 1, 3.0}, {1, 2, 1.0}, {0, 2, 2.0}});
    auto r = min_weight_eeds_bruteforce(k3);
    REQUIRE(r.has_value());
    CHECK(r->second == doctest::Approx(1.0));

    CHECK_FALSE(min_weight_eeds_bruteforce(named("c7")).has_value());
    auto c9 = min_weight_eeds_bruteforce(named("c9"));
    REQUIRE(c9.has_value());
    CHECK(c9->first.size() == 3);
}

TEST_CASE("cycles have an EEDS exactly when the length is divisible by 3") {
    for (int k = 3; k <= 12; ++k) {
        Graph c = *named_graph(("c" + std::to_string(k)).c_str());
        CHECK(min_weight_eeds_bruteforce(c).has_value() == (k % 3 == 0));
    }
}

TEST_CASE("every enumerated set passes its verifier") {
    Rng rng(53);
    for (int it = 0; it < 30; ++it) {
        Graph g = random_graph(3 + rng.below(7), 0.35, rng);
        for (const auto& [p, kind] : enumerate_peds(g)) {
            CHECK(verify_peds(g, p).ok);
            if (kind == PedsKind::Efficient) CHECK(verify_eeds(g, p));
        }
    }
}

TEST_CASE("every EEDS of an r-regular graph has size rn/(4r-2)") {
    Rng rng(59);
    std::vector<Graph> pool{named("k4"), named("prism"), named("petersen"), named("k3,3")};
    for (int n : {6, 8, 10, 12, 14})
        for (int i = 0; i < 3; ++i) pool.push_back(random_cubic(n, rng));
    for (const Graph& g : pool) {
        int n = g.vertex_count();
        int r = g.degree(0);
        ReductionNumbers nums = reduction_numbers(r, n, 0);
        bool any = false;
        for (const auto& [p, kind] : enumerate_peds(g)) {
            if (kind != PedsKind::Efficient) continue;
            any = true;
            REQUIRE(nums.eeds_possible);
            CHECK(p.size() == nums.eeds_size.num);
        }
        if (!nums.eeds_possible) CHECK_FALSE(any);
    }
}
