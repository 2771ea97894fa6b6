#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "pedom/coloring.hpp"
#include "pedom/gadgets.hpp"
#include "pedom/gen.hpp"
#include "pedom/oracle.hpp"
#include "test_util.hpp"

using namespace pedom;
using testutil::edge_set;
using testutil::make;
using testutil::named;

namespace {

// shield chords, the unique EEDS of the shield (1-based 2-4, 6-8, 10-12)
EdgeSet shield_eeds(const Graph& sh) { return edge_set(sh, {{1, 3}, {5, 7}, {9, 11}}); }

}  // namespace

TEST_CASE("verify_peds on the shield") {
    Graph sh = shield();
    CHECK(verify_peds(sh, shield_eeds(sh)).ok);

    auto bad = verify_peds(sh, edge_set(sh, {{0, 1}}));
    CHECK_FALSE(bad.ok);
    // an edge far from 1-2 has no dominator at all
    int e67 = *sh.edge_between(5, 6);
    CHECK(bad.dominators[e67] == 0);

    CHECK(verify_peds(sh, EdgeSet::all_edges(sh)).ok);
    CHECK(verify_peds(named("k4"), EdgeSet::all_edges(named("k4"))).ok);
}

TEST_CASE("verify_eeds examples") {
    Graph k3 = named("k3");
    CHECK(verify_eeds(k3, edge_set(k3, {{0, 1}})));

    Graph c4 = named("c4");
    for (int mask = 0; mask < 16; ++mask) {  // C4 has no EEDS at all
        std::vector<int> ids;
        for (int e = 0; e < 4; ++e)
            if (mask >> e & 1) ids.push_back(e);
        CHECK_FALSE(verify_eeds(c4, EdgeSet::of(c4, ids)));
    }

    Graph sh = shield();
    CHECK(verify_eeds(sh, shield_eeds(sh)));
}

TEST_CASE("verify agrees with the definitional check on random sets") {
    Rng rng(31);
    for (int it = 0; it < 200; ++it) {
        Graph g = random_graph(3 + rng.below(5), 0.5, rng);
        std::vector<char> in_set(g.edge_count(), 0);
        std::vector<int> ids;
        for (int e = 0; e < g.edge_count(); ++e)
            if (rng.chance(0.4)) {
                in_set[e] = 1;
                ids.push_back(e);
            }
        EdgeSet p = EdgeSet::of(g, ids);
        CHECK(verify_peds(g, p).ok == testoracle::naive_is_peds(g, in_set));
        CHECK(verify_eeds(g, p) == testoracle::naive_is_eeds(g, in_set));
    }
}

TEST_CASE("coloring_from_peds examples") {
    Graph sh = shield();
    Coloring c = coloring_from_peds(sh, shield_eeds(sh));
    CHECK(c.letters() == "WYWYWYWYWYWY");  // odd cycle positions white, chords' ends yellow

    Graph k4 = named("k4");
    Coloring trivial = coloring_from_peds(k4, EdgeSet::all_edges(k4));
    CHECK(trivial.letters() == "BBBB");
    CHECK(classify_kind(trivial) == PedsKind::Trivial);

    Graph k2 = named("k2");
    Coloring both = coloring_from_peds(k2, EdgeSet::all_edges(k2));
    CHECK(both.letters() == "YY");
    CHECK(classify_kind(both) == PedsKind::Efficient);

    CHECK_THROWS_AS(coloring_from_peds(sh, edge_set(sh, {{0, 1}})), std::invalid_argument);
}

TEST_CASE("peds_from_white_set examples") {
    Graph sh = shield();
    auto rec = peds_from_white_set(sh, {0, 2, 4, 6, 8, 10});
    REQUIRE(rec.has_value());
    CHECK(rec->first == shield_eeds(sh));

    Graph k3 = named("k3");
    CHECK_FALSE(peds_from_white_set(k3, {0, 1, 2}).has_value());  // whites not independent

    CHECK_FALSE(peds_from_white_set(sh, {3}).has_value());
}

TEST_CASE("white-set round trip on every oracle-enumerated PEDS") {
    Rng rng(37);
    for (int it = 0; it < 40; ++it) {
        Graph g = random_graph(3 + rng.below(6), 0.45, rng);
        for (const auto& [p, kind] : enumerate_peds(g)) {
            Coloring c = coloring_from_peds(g, p);
            auto rec = peds_from_white_set(g, c.vertices_of(Color::White));
            REQUIRE(rec.has_value());
            CHECK(rec->first == p);
            CHECK(rec->second.letters() == c.letters());
        }
    }
}

TEST_CASE("white sets accepted equal PEDS found by raw edge-subset search") {
    Rng rng(41);
    for (int it = 0; it < 25; ++it) {
        int n = 3 + rng.below(6);
        Graph g = random_graph(n, 0.4, rng);
        if (g.edge_count() > 14) continue;
        auto brute = testoracle::naive_enumerate_peds(g);
        auto ours = enumerate_peds(g);
        REQUIRE(brute.size() == ours.size());
        std::set<std::vector<int>> brute_sets(brute.begin(), brute.end());
        for (const auto& [p, kind] : ours) CHECK(brute_sets.count(p.ids) == 1);
    }
}

TEST_CASE("single_black_completion examples") {
    Graph star = named("k1,4");
    auto r = single_black_completion(star, {1, 2, 3, 4});
    REQUIRE(r.has_value());
    CHECK(r->first == 0);
    CHECK(r->second.size() == 4);

    Graph p3 = named("p3");
    auto rp = single_black_completion(p3, {0, 2});
    REQUIRE(rp.has_value());
    CHECK(rp->first == 1);
    CHECK(rp->second.size() == 2);

    // C4 with one heavy edge: two candidate blacks, the light side wins
    Graph c4 = Graph::from_edges(
        4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {0, 3, 10.0}});
    auto rc = single_black_completion(c4, {0, 2});
    REQUIRE(rc.has_value());
    CHECK(rc->first == 1);  // incident sum 2 beats vertex 3's 11
    CHECK(rc->second.weight == doctest::Approx(2.0));

    // star plus a pendant hanging off one leaf
    Graph star_pendant = make(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}});
    auto rs = single_black_completion(star_pendant, {1, 2, 3});
    REQUIRE(rs.has_value());
    CHECK(rs->first == 0);
    CHECK(verify_peds(star_pendant, rs->second).ok);

    CHECK_FALSE(single_black_completion(p3, {0, 1}).has_value());  // complement not independent
    CHECK_FALSE(single_black_completion(p3, {}).has_value());
}

TEST_CASE("single black completion rejects a lone isolated yellow") {
    // b would end up pendant in the non-white part, so no valid completion
    Graph p2 = named("k2");
    CHECK_FALSE(single_black_completion(p2, {0}).has_value());
}

TEST_CASE("weight examples") {
    Graph k3 = Graph::from_edges(3, {{0, 1, 1.0}, {1, 2, 2.0}, {0, 2, 3.0}});
    CHECK(EdgeSet::all_edges(k3).weight == doctest::Approx(6.0));
    CHECK(EdgeSet::of(k3, {}).weight == 0.0);
    CHECK(shield_eeds(shield()).weight == doctest::Approx(3.0));
}

TEST_CASE("eeds implies peds with empty black class") {
    Rng rng(43);
    for (int it = 0; it < 40; ++it) {
        Graph g = random_graph(3 + rng.below(6), 0.4, rng);
        for (const auto& [p, kind] : enumerate_peds(g)) {
            if (verify_eeds(g, p)) {
                CHECK(verify_peds(g, p).ok);
                CHECK(kind == PedsKind::Efficient);
                CHECK_FALSE(coloring_from_peds(g, p).has(Color::Black));
            } else {
                CHECK(kind != PedsKind::Efficient);
            }
        }
    }
}

TEST_CASE("triangle and clique color patterns hold in every valid coloring") {
    Rng rng(47);
    for (int it = 0; it < 30; ++it) {
        int n = 4 + rng.below(5);
        Graph g = random_graph(n, 0.55, rng);
        for (const auto& [p, kind] : enumerate_peds(g)) {
            Coloring c = coloring_from_peds(g, p);
            // triangles: all black, or two yellow and one white
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    for (int d = b + 1; d < n; ++d) {
                        if (!(g.adjacent(a, b) && g.adjacent(a, d) && g.adjacent(b, d))) continue;
                        int blacks = (c[a] == Color::Black) + (c[b] == Color::Black) +
                                     (c[d] == Color::Black);
                        int yellows = (c[a] == Color::Yellow) + (c[b] == Color::Yellow) +
                                      (c[d] == Color::Yellow);
                        int whites = (c[a] == Color::White) + (c[b] == Color::White) +
                                     (c[d] == Color::White);
                        bool all_black = blacks == 3;
                        bool two_yellow_one_white = yellows == 2 && whites == 1;
                        CHECK((all_black || two_yellow_one_white));
                    }
            // K4s: all black
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    for (int d = b + 1; d < n; ++d)
                        for (int e = d + 1; e < n; ++e) {
                            if (g.adjacent(a, b) && g.adjacent(a, d) && g.adjacent(a, e) &&
                                g.adjacent(b, d) && g.adjacent(b, e) && g.adjacent(d, e)) {
                                CHECK(c[a] == Color::Black);
                                CHECK(c[b] == Color::Black);
                                CHECK(c[d] == Color::Black);
                                CHECK(c[e] == Color::Black);
                            }
                        }
        }
    }
}
