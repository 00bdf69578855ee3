#include <set>
#include <stdexcept>

#include "doctest.h"
#include "ppt/canonical.hpp"
#include "ppt/corpus.hpp"
#include "ppt/gadgets.hpp"
#include "ppt/graph6.hpp"
#include "ppt/solver.hpp"
#include "ppt/verify.hpp"

using namespace ppt;

TEST_SUITE_BEGIN("verify");

TEST_CASE("ng family construction and values") {
    Graph g9 = ng_family(9);
    CHECK(g9.order() == 9);
    CHECK(g9.degree(4) == 4);  // v_5
    CHECK(gamma_pk(g9, 1) == 1);
    CHECK(ppt_k(g9, 1) == 6);
    CHECK(ppt_k(complement(g9), 1) == 3);
    CHECK(ppt_k(ng_family(12), 1) == 9);
    CHECK(ppt_k(complement(ng_family(12)), 1) == 3);
    CHECK_THROWS_AS(ng_family(8), std::invalid_argument);
}

TEST_CASE("subdivision-decrease gadget values") {
    auto [g, e] = subdiv_decrease_gadget(7);
    CHECK(g.order() == 13);
    CHECK(e == Edge(4, 5));
    CHECK(ppt_k(g, 1) == 5);

    auto [g9, e9] = subdiv_decrease_gadget(9);
    CHECK(ppt_k(g9, 1) == 7);
    Graph ge = subdivide(g9, e9);
    CHECK(ppt_of_set(ge, VertexSet::of({0, 6, 8}), 1) == 3);  // ceil((9-4)/2)
    CHECK_THROWS_AS(subdiv_decrease_gadget(6), std::invalid_argument);
}

TEST_CASE("subdivision-increase gadget values") {
    auto [g, e] = subdiv_increase_gadget(10);
    CHECK(g.order() == 10);
    auto mins = all_min_kpds(g, 1);
    REQUIRE(mins.size() == 1);
    CHECK(mins[0] == VertexSet::single(0));
    CHECK(ppt_k(g, 1) == 3);
    CHECK(ppt_k(subdivide(g, e), 1) == 6);
    CHECK_THROWS_AS(subdiv_increase_gadget(7), std::invalid_argument);
}

TEST_CASE("subdivision can move the propagation time by any offset, both ways") {
    for (int t = 0; t <= 5; ++t) {
        {
            int l = std::max(7, 2 * t + 1);
            auto [g, e] = subdiv_decrease_gadget(l);
            CHECK(ppt_k(subdivide(g, e), 1) <= ppt_k(g, 1) - t);
        }
        {
            int n = std::max(8, 2 * t + 4);
            auto [g, e] = subdiv_increase_gadget(n);
            CHECK(ppt_k(subdivide(g, e), 1) >= ppt_k(g, 1) + t);
        }
    }
}

TEST_CASE("contraction mirrors subdivision on the gadgets") {
    auto [g, e] = subdiv_decrease_gadget(8);
    Graph ge = subdivide(g, e);
    Graph back = contract(ge, Edge(5, 14));  // one of the two new edges
    CHECK(back == g);
    CHECK(ppt_k(back, 1) == ppt_k(g, 1));

    auto [h, f] = subdiv_increase_gadget(9);
    Graph he = subdivide(h, f);
    CHECK(contract(he, Edge(1, 9)) == h);
}

TEST_CASE("deg3 example bounds") {
    CHECK(deg3_example(5).order() == 7);
    CHECK_THROWS_AS(deg3_example(4), std::invalid_argument);
}

TEST_CASE("verifier: path-cycle formulas") {
    VerifyOptions o;
    o.n_max = 12;
    o.k_max = 2;
    VerificationResult r = verify_theorem("path-cycle-ppt", o);
    CHECK(r.passed);
    CHECK(r.checked == 2 * (12 + 10));
}

TEST_CASE("verifier: extremal characterizations at small order") {
    VerifyOptions o;
    o.n_max = 5;
    for (const char* tag : {"extreme-n-minus-1", "extreme-n-minus-2"}) {
        VerificationResult r = verify_theorem(tag, o);
        CHECK(r.passed);
        CHECK(r.counterexamples.empty());
    }
    VerificationResult r3 = verify_theorem("extreme-n-minus-3-kge2", o);
    CHECK(r3.passed);
    VerificationResult rg = verify_theorem("gammaP23-n-minus-3", o);
    CHECK(rg.passed);
}

TEST_CASE("verifier: trees attaining n-3, attainers at n = 8") {
    VerifyOptions o;
    o.n_max = 10;
    VerificationResult r = verify_theorem("trees-n-minus-3", o);
    CHECK(r.passed);

    // at n = 8 the only attaining tree is the two-short-one-long spider
    std::string expect = canonical_g6(spider({1, 1, 5}));
    for (const Graph& t : enumerate_trees(8)) {
        bool attains = ppt_k(t, 1) == t.order() - 3;
        CHECK(attains == (canonical_g6(t) == expect));
    }
}

TEST_CASE("verifier: one-step characterization on a reduced corpus") {
    VerifyOptions o;
    o.n_max = 6;
    VerificationResult r = verify_theorem("ppt1-characterization", o);
    CHECK(r.passed);
    CHECK(r.checked > 0);
}

TEST_CASE("verifier: sum bounds") {
    VerifyOptions o;
    o.n_max = 6;
    VerificationResult up = verify_theorem("ng-upper", o);
    CHECK(up.passed);
    CHECK(up.summary.find("max sum") == 0);

    VerifyOptions leaf;
    leaf.n_max = 6;
    CHECK(verify_theorem("ng-leaf", leaf).passed);

    VerifyOptions gp;
    gp.n_max = 6;
    CHECK(verify_theorem("ng-gammap", gp).passed);
}

TEST_CASE("verifier: family and gadget tags over short ranges") {
    VerifyOptions fam;
    fam.range_lo = 9;
    fam.range_hi = 11;
    VerificationResult r = verify_theorem("ng-family", fam);
    CHECK(r.passed);
    CHECK(r.checked == 3);

    VerifyOptions dec;
    dec.range_lo = 7;
    dec.range_hi = 9;
    CHECK(verify_theorem("subdiv-decrease", dec).passed);

    VerifyOptions inc;
    inc.range_lo = 8;
    inc.range_hi = 10;
    CHECK(verify_theorem("subdiv-increase", inc).passed);
}

TEST_CASE("verifier: minimum sets with private expansion room") {
    VerifyOptions o;
    o.n_max = 6;
    CHECK(verify_theorem("sizedecrease-lemma", o).passed);
}

TEST_CASE("every connected 5-vertex graph of maximum degree 3 settles in two steps") {
    std::size_t members = 0;
    for (const Graph& g : enumerate_graphs(5, true)) {
        if (g.max_degree() != 3) continue;
        ++members;
        for (int k : {2, 3}) CHECK(ppt_k(g, k) == 2);
    }
    CHECK(members > 0);
}

TEST_CASE("unknown tags and bad scales are rejected") {
    CHECK_THROWS_AS(verify_theorem("no-such-theorem"), std::invalid_argument);
    VerifyOptions o;
    o.n_max = 40;  // beyond the built-in enumeration
    CHECK_THROWS_AS(verify_theorem("extreme-n-minus-1", o), std::invalid_argument);
    VerifyOptions fam;
    fam.range_lo = 3;
    fam.range_hi = 5;
    CHECK_THROWS_AS(verify_theorem("ng-family", fam), std::invalid_argument);
}

TEST_CASE("result serialization") {
    VerificationResult r;
    r.theorem_id = "demo";
    r.corpus = "nothing";
    r.checked = 7;
    r.passed = false;
    r.counterexamples.push_back({"A_", "saw 1", "wanted 2"});
    r.counterexamples.push_back({"A?", "saw 0", "wanted 2"});
    CHECK(r.to_tsv() == "demo\tnothing\t7\tfail\tA_,A?");

    VerificationResult ok;
    ok.theorem_id = "demo";
    ok.corpus = "nothing";
    ok.checked = 1;
    ok.passed = true;
    CHECK(ok.to_tsv() == "demo\tnothing\t1\tpass\t-");
}

TEST_CASE("theorem tag list is stable") {
    const auto& tags = theorem_tags();
    CHECK(tags.size() == 14);
    for (const std::string& t : tags) CHECK_NOTHROW(static_cast<void>(t));
}

TEST_SUITE_END();
