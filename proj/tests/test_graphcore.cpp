#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "ppt/canonical.hpp"
#include "ppt/corpus.hpp"
#include "ppt/graph.hpp"
#include "ppt/graph6.hpp"

using namespace ppt;

TEST_SUITE_BEGIN("graphcore");

TEST_CASE("build constructs the stated small graphs") {
    Graph p3 = Graph::build(3, {{0, 1}, {1, 2}});
    CHECK(p3.order() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.degree(1) == 2);

    Graph k1 = Graph::build(1, {});
    CHECK(k1.order() == 1);
    CHECK(k1.edge_count() == 0);

    Graph c3 = Graph::build(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(c3.edge_count() == 3);
    CHECK(is_isomorphic(c3, complete_graph(3)));
}

TEST_CASE("build rejects bad input") {
    CHECK_THROWS_AS(Graph::build(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Edge(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(Graph::build(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::build(65, {}), std::invalid_argument);
}

TEST_CASE("graph invariants hold on construction") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 50; ++rep) {
        Graph g = oracle::random_graph(10, 0.4, rng);
        for (int v = 0; v < g.order(); ++v) {
            CHECK(!g.neighbors(v).contains(v));
            CHECK(g.neighbors(v).subset_of(g.vertices()));
            g.neighbors(v).for_each([&](int u) { CHECK(g.neighbors(u).contains(v)); });
        }
    }
}

TEST_CASE("family constructors") {
    CHECK(is_isomorphic(spider({1, 1, 1}), star_graph(3)));
    CHECK(spider({1, 1, 1}).order() == 4);

    Graph l31 = lollipop(3, 1);
    CHECK(l31.order() == 4);
    CHECK(l31.edge_count() == 4);  // triangle plus the bridge
    CHECK(leaf_vertices(l31).count() == 1);

    CHECK(is_isomorphic(join_k2_empty(1), complete_graph(3)));
    CHECK(join_k2_empty(4).order() == 6);
    CHECK(spider({1, 1, 4}).order() == 7);
    CHECK(complete_bipartite(2, 3).edge_count() == 6);

    CHECK_THROWS_AS(path_graph(0), std::invalid_argument);
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
    CHECK_THROWS_AS(lollipop(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(spider({}), std::invalid_argument);
    CHECK_THROWS_AS(spider({1, 0}), std::invalid_argument);
}

TEST_CASE("family descriptors parse") {
    CHECK(family_from_descriptor("path:6") == path_graph(6));
    CHECK(family_from_descriptor("spider:1,1,4") == spider({1, 1, 4}));
    CHECK(family_from_descriptor("complete-bipartite:2,3") == complete_bipartite(2, 3));
    CHECK_THROWS_AS(family_from_descriptor("frob:3"), std::invalid_argument);
    CHECK_THROWS_AS(family_from_descriptor("path"), std::invalid_argument);
}

TEST_CASE("complement") {
    CHECK(complement(complete_graph(4)) == empty_graph(4));
    CHECK(is_isomorphic(complement(path_graph(3)),
                        disjoint_union(complete_graph(2), empty_graph(1))));
    CHECK(is_isomorphic(complement(path_graph(4)), path_graph(4)));

    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 30; ++rep) {
        Graph g = oracle::random_graph(9, 0.5, rng);
        CHECK(complement(complement(g)) == g);  // label-preserving involution
    }
}

TEST_CASE("subdivide") {
    CHECK(is_isomorphic(subdivide(complete_graph(3), Edge(0, 1)), cycle_graph(4)));
    CHECK(is_isomorphic(subdivide(path_graph(2), Edge(0, 1)), path_graph(3)));
    CHECK(is_isomorphic(subdivide(cycle_graph(5), Edge(0, 1)), cycle_graph(6)));

    Graph g = cycle_graph(5);
    Graph ge = subdivide(g, Edge(1, 2));
    CHECK(ge.order() == g.order() + 1);
    CHECK(ge.edge_count() == g.edge_count() + 1);
    CHECK(ge.has_edge(1, 5));
    CHECK(ge.has_edge(2, 5));
    CHECK(!ge.has_edge(1, 2));
    CHECK_THROWS_AS(subdivide(path_graph(3), Edge(0, 2)), std::invalid_argument);
}

TEST_CASE("contract") {
    CHECK(is_isomorphic(contract(cycle_graph(4), Edge(0, 1)), cycle_graph(3)));
    CHECK(is_isomorphic(contract(path_graph(3), Edge(0, 1)), path_graph(2)));
    CHECK_THROWS_AS(contract(path_graph(3), Edge(0, 2)), std::invalid_argument);

    // subdividing then contracting a new edge restores the graph
    Graph g = cycle_graph(5);
    Graph ge = subdivide(g, Edge(2, 3));
    CHECK(is_isomorphic(contract(ge, Edge(2, 5)), g));
    CHECK(is_isomorphic(contract(ge, Edge(3, 5)), g));

    // deterministic relabeling: merged vertex keeps min(u,v), higher indices shift
    Graph h = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    Graph hc = contract(h, Edge(1, 2));
    CHECK(hc == Graph::build(3, {{0, 1}, {1, 2}, {0, 2}}));
}

TEST_CASE("components") {
    auto comps = components(disjoint_union(empty_graph(1), complete_graph(2)));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].count() == 1);
    CHECK(comps[1].count() == 2);

    CHECK(components(cycle_graph(5)).size() == 1);
    CHECK(components(empty_graph(3)).size() == 3);

    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 40; ++rep) {
        Graph g = oracle::random_graph(9, 0.15, rng);
        auto cs = components(g);
        VertexSet all;
        for (VertexSet c : cs) {
            CHECK((all & c).empty());  // pairwise disjoint
            all |= c;
            // internally connected, no edges leaving
            CHECK(components(induced(g, c)).size() == 1);
            c.for_each([&](int v) { CHECK((g.neighbors(v) - c).empty()); });
        }
        CHECK(all == g.vertices());
    }
}

TEST_CASE("is_isomorphic on the stated pairs") {
    CHECK(is_isomorphic(path_graph(4), complement(path_graph(4))));
    CHECK(!is_isomorphic(cycle_graph(4), complete_minus_edge(4)));
    Graph t = Graph::build(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}});  // degrees 3,2,1,1,1
    CHECK(is_isomorphic(spider({1, 1, 2}), t));
}

TEST_CASE("is_isomorphic agrees with the all-permutations oracle") {
    std::mt19937_64 rng(31);
    for (int n = 2; n <= 7; ++n) {
        for (int rep = 0; rep < 60; ++rep) {
            Graph a = oracle::random_graph(n, 0.5, rng);
            Graph b = oracle::random_graph(n, 0.5, rng);
            CHECK(is_isomorphic(a, b) == oracle::isomorphic_all_perms(a, b));
            // a shuffled copy must always match
            std::vector<int> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<Edge> es;
            for (Edge e : a.edges())
                es.emplace_back(perm[static_cast<std::size_t>(e.u)],
                                perm[static_cast<std::size_t>(e.v)]);
            CHECK(is_isomorphic(a, Graph::build(n, es)));
        }
    }
}

TEST_CASE("is_isomorphic is an equivalence on a small corpus") {
    std::vector<Graph> pool;
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : enumerate_graphs(n, false)) pool.push_back(g);
    for (const Graph& a : pool) CHECK(is_isomorphic(a, a));
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
            bool ij = is_isomorphic(pool[i], pool[j]);
            CHECK(ij == is_isomorphic(pool[j], pool[i]));
            CHECK(ij == oracle::isomorphic_all_perms(pool[i], pool[j]));
        }
}

TEST_CASE("canonical form is invariant under relabeling at tree-corpus scale") {
    std::mt19937_64 rng(37);
    for (int n : {10, 11, 12}) {
        for (int rep = 0; rep < 25; ++rep) {
            Graph a = oracle::random_graph(n, 0.25, rng);
            std::vector<int> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<Edge> es;
            for (Edge e : a.edges())
                es.emplace_back(perm[static_cast<std::size_t>(e.u)],
                                perm[static_cast<std::size_t>(e.v)]);
            CHECK(canonical_g6(a) == canonical_g6(Graph::build(n, es)));
            CHECK(graph6_decode(canonical_g6(a)) == canonical_graph(a));
        }
    }
}

TEST_CASE("contains_induced") {
    CHECK(contains_induced(complete_graph(4), cycle_graph(3)));
    CHECK(!contains_induced(cycle_graph(5), cycle_graph(3)));
    CHECK(contains_induced(complete_bipartite(2, 3), complete_bipartite(2, 2)));
    CHECK(!contains_induced(path_graph(3), complete_graph(4)));  // |H| > |G|
}

TEST_SUITE_END();
