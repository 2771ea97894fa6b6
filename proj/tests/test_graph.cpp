#include <doctest.h>

#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "pedom/dimacs.hpp"
#include "pedom/gadgets.hpp"
#include "pedom/gen.hpp"
#include "pedom/queries.hpp"
#include "test_util.hpp"

using namespace pedom;
using testutil::make;
using testutil::named;

TEST_CASE("parse K3") {
    Graph g = parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    for (const Edge& e : g.edges()) CHECK(e.w == 1.0);
}

TEST_CASE("parse shield file") {
    Graph g = load_graph(std::string(TEST_DATA_DIR) + "/shield.dimacs");
    CHECK(g.vertex_count() == 12);
    CHECK(g.edge_count() == 15);
    // same graph as the built-in construction
    CHECK(serialize_graph(g) == serialize_graph(shield()));
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 1\n"), ParseError);           // loop
    CHECK_THROWS_AS(parse_graph("p edge 2 2\ne 1 2\ne 2 1\n"), ParseError);    // multi-edge
    CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 3\n"), ParseError);           // id range
    CHECK_THROWS_AS(parse_graph("e 1 2\n"), ParseError);                       // no header
    CHECK_THROWS_AS(parse_graph("p edge 2 2\ne 1 2\n"), ParseError);           // count mismatch
    CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 2 nan\n"), ParseError);       // bad weight
    try {
        parse_graph("p edge 3 2\ne 1 2\ne 3 3\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("weights parse and serialize round-trip") {
    std::string doc = "p edge 3 2\ne 1 2 2.5\ne 2 3\n";
    Graph g = parse_graph(doc);
    CHECK(g.edge(*g.edge_between(0, 1)).w == 2.5);
    CHECK(serialize_graph(g) == doc);
    CHECK(serialize_graph(parse_graph(serialize_graph(g))) == serialize_graph(g));
}

TEST_CASE("serialize then parse is the identity on random graphs") {
    Rng rng(7);
    for (int it = 0; it < 30; ++it) {
        Graph g = with_random_weights(random_graph(8, 0.4, rng), -5, 5, rng);
        Graph h = parse_graph(serialize_graph(g));
        CHECK(serialize_graph(h) == serialize_graph(g));
    }
}

TEST_CASE("girth examples") {
    CHECK(girth(named("k3")) == 3);
    CHECK_FALSE(girth(named("p4")).has_value());
    auto [s, map] = subdivide(named("petersen"), 1);  // every edge becomes a 4-edge path
    CHECK(girth(s) == 20);
}

TEST_CASE("girth matches cycle enumeration on small random graphs") {
    Rng rng(11);
    for (int it = 0; it < 120; ++it) {
        int n = 3 + rng.below(7);
        Graph g = random_graph(n, 0.25 + 0.08 * rng.below(5), rng);
        CHECK(girth(g) == testoracle::naive_girth(g));
    }
}

TEST_CASE("eccentricity examples") {
    CHECK(eccentricity(named("k1,4"), 0) == 1);  // the star center comes first
    Graph p5 = named("p5");
    CHECK(eccentricity(p5, 0) == 4);
    Graph two_edges = make(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(eccentricity(two_edges, 0).has_value());
    CHECK(eccentricity(named("k1"), 0) == 0);
}

TEST_CASE("claw detection examples") {
    Graph claw = named("claw");
    auto found = find_claw(claw);
    REQUIRE(found.has_value());
    CHECK(found->center == 0);
    for (int leaf : found->leaves) {
        CHECK(claw.adjacent(found->center, leaf));
    }
    CHECK(is_claw_free(named("k4")));
    CHECK(is_claw_free(magnify(named("k4")).first));
}

TEST_CASE("claw detection matches exhaustive scan") {
    Rng rng(13);
    for (int it = 0; it < 120; ++it) {
        int n = 4 + rng.below(6);
        Graph g = random_graph(n, 0.2 + 0.1 * rng.below(5), rng);
        CHECK(is_claw_free(g) == !testoracle::naive_has_claw(g));
        if (auto c = find_claw(g)) {
            CHECK(g.adjacent(c->center, c->leaves[0]));
            CHECK(g.adjacent(c->center, c->leaves[1]));
            CHECK(g.adjacent(c->center, c->leaves[2]));
            CHECK_FALSE(g.adjacent(c->leaves[0], c->leaves[1]));
            CHECK_FALSE(g.adjacent(c->leaves[0], c->leaves[2]));
            CHECK_FALSE(g.adjacent(c->leaves[1], c->leaves[2]));
        }
    }
}

TEST_CASE("linear forest") {
    CHECK(is_linear_forest(named("p4")));
    CHECK_FALSE(is_linear_forest(named("claw")));
    CHECK_FALSE(is_linear_forest(named("c4")));
    CHECK(is_linear_forest(make(6, {{0, 1}, {2, 3}, {3, 4}})));  // P2 + P3 + isolated
}

TEST_CASE("induced P5 search") {
    Graph p5 = named("p5");
    auto cert = find_induced_p5(p5);
    REQUIRE(cert.has_value());
    CHECK(verify_induced_path(p5, *cert));

    Graph c6 = named("c6");
    auto c6cert = find_induced_p5(c6);
    REQUIRE(c6cert.has_value());
    CHECK(verify_induced_path(c6, *c6cert));

    Rng rng(17);
    for (int it = 0; it < 20; ++it) {
        Graph g = random_split(10, 1 + rng.below(5), 0.3, rng);
        CHECK_FALSE(find_induced_p5(g).has_value());  // split graphs are P5-free
    }
}

TEST_CASE("induced P5 search matches exhaustive scan") {
    Rng rng(19);
    for (int it = 0; it < 80; ++it) {
        int n = 5 + rng.below(4);
        Graph g = random_graph(n, 0.2 + 0.1 * rng.below(5), rng);
        auto cert = find_induced_p5(g);
        CHECK(cert.has_value() == testoracle::naive_has_induced_p5(g));
        if (cert) CHECK(verify_induced_path(g, *cert));
    }
}

TEST_CASE("eccentricity at least 4 implies an induced P5 certificate") {
    Rng rng(23);
    for (int it = 0; it < 60; ++it) {
        Graph g = random_connected_graph(3 + rng.below(12), rng.below(6), rng);
        auto ecc = eccentricity(g, 0);
        REQUIRE(ecc.has_value());
        if (*ecc >= 4) CHECK(find_induced_p5(g).has_value());
    }
}

TEST_CASE("components and induced subgraphs") {
    Graph two_k3 = make(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(components(two_k3).size() == 2);

    Graph sh = shield();
    std::vector<int> all;
    for (int v = 0; v < 12; ++v) all.push_back(v);
    InducedSubgraph copy = induced_subgraph(sh, all);
    CHECK(serialize_graph(copy.graph) == serialize_graph(sh));
    for (int v = 0; v < 12; ++v) CHECK(copy.orig_vertex[v] == v);

    std::vector<int> minus_v1;
    for (int v = 1; v < 12; ++v) minus_v1.push_back(v);
    InducedSubgraph sub = induced_subgraph(sh, minus_v1);
    CHECK(sub.graph.vertex_count() == 11);
    CHECK(sub.graph.edge_count() == 13);
    // edge map points back at the right endpoints
    for (int id = 0; id < sub.graph.edge_count(); ++id) {
        const Edge& e = sub.graph.edge(id);
        const Edge& orig = sh.edge(sub.orig_edge[id]);
        CHECK(orig.u == sub.orig_vertex[e.u]);
        CHECK(orig.v == sub.orig_vertex[e.v]);
    }
}

TEST_CASE("induced subgraph preserves weights") {
    Rng rng(29);
    Graph g = with_random_weights(random_graph(9, 0.5, rng), -3, 3, rng);
    InducedSubgraph sub = induced_subgraph(g, {0, 2, 4, 6, 8});
    for (int id = 0; id < sub.graph.edge_count(); ++id)
        CHECK(sub.graph.edge(id).w == g.edge(sub.orig_edge[id]).w);
}
