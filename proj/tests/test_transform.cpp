#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "topocode/graph.hpp"
#include "topocode/labeling.hpp"
#include "topocode/search.hpp"
#include "topocode/transform.hpp"
#include "topocode/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace topocode;

namespace {

std::vector<long long> vcolors(const Graph& g, const Labeling& L) {
    std::vector<long long> out;
    for (int v = 0; v < g.p; ++v) out.push_back(L.vcolor(v));
    return out;
}

std::set<long long> ecolor_set(const Graph& g, const Labeling& L) {
    std::set<long long> out;
    for (const auto& e : g.edges) out.insert(L.ecolor(e.first, e.second));
    return out;
}

// P4 with the classic set-ordered graceful labeling 0,3,1,2
Labeling p4_graceful(const Graph& g) {
    return make_vertex_labeling(g, {0, 3, 1, 2}, "set-ordered-graceful");
}

// graceful on P5 but set-ordered under neither orientation
Labeling p5_unordered(const Graph& g) {
    return make_vertex_labeling(g, {3, 0, 4, 2, 1}, "graceful");
}

// random caterpillar: spine of 2..5 vertices, legs filled up to at most 8 total
Graph random_caterpillar(std::mt19937& rng) {
    int spine = 2 + static_cast<int>(rng() % 4);
    Graph g = path_graph(spine);
    int budget = 8 - spine;
    for (int v = 0; v < spine && budget > 0; ++v) {
        int legs = static_cast<int>(rng() % (budget + 1));
        for (int i = 0; i < legs; ++i) {
            g.p += 1;
            g.add_edge(v, g.p - 1);
        }
        budget -= legs;
    }
    g.canonicalize();
    return g;
}

}  // namespace

TEST_CASE("dual flips every color across the combined extremes") {
    Graph g = path_graph(4);
    Labeling L = make_vertex_labeling(g, {0, 3, 1, 2}, "graceful", EdgeRule::none);
    Labeling D = dual(L);
    CHECK(vcolors(g, D) == std::vector<long long>{3, 0, 2, 1});
    CHECK(D.edge.empty());

    // totally labeled input: extremes span vertices and edges together
    Labeling T = p4_graceful(g);
    Labeling DT = dual(T);
    CHECK(vcolors(g, DT) == std::vector<long long>{3, 0, 2, 1});
    CHECK(DT.ecolor(0, 1) == 0);
    CHECK(DT.ecolor(1, 2) == 1);
    CHECK(DT.ecolor(2, 3) == 2);

    // involution
    Labeling back = dual(DT);
    CHECK(back.vertex == T.vertex);
    CHECK(back.edge == T.edge);

    // a single color is its own dual
    Graph k1;
    k1.p = 1;
    Labeling one = make_vertex_labeling(k1, {5}, "vertex", EdgeRule::none);
    CHECK(dual(one).vcolor(0) == 5);

    Labeling empty;
    CHECK_THROWS_AS(dual(empty), std::invalid_argument);
}

TEST_CASE("set-dual variants on P4 hit their target kinds with the traced constants") {
    Graph g = path_graph(4);
    Labeling f = p4_graceful(g);

    Labeling fd = set_dual_transform(g, f, "f_dual");
    CHECK(vcolors(g, fd) == std::vector<long long>{3, 0, 2, 1});
    CHECK(fd.kind == "set-ordered-graceful");
    CHECK(verify(g, fd, fd.kind).accepted);

    Labeling fsd = set_dual_transform(g, f, "f*_dual");
    CHECK(vcolors(g, fsd) == std::vector<long long>{3, 0, 2, 1});
    CHECK(fsd.kind == "edge-difference-total-coloring");
    CHECK(fsd.param("k") == 4);  // q + 1
    CHECK(ecolor_set(g, fsd) == std::set<long long>{1, 2, 3});

    Labeling gs = set_dual_transform(g, f, "g_setXY");
    CHECK(vcolors(g, gs) == std::vector<long long>{1, 2, 0, 3});
    CHECK(gs.kind == "set-ordered-graceful");

    Labeling gsd = set_dual_transform(g, f, "g*_setXY");
    CHECK(vcolors(g, gsd) == std::vector<long long>{1, 2, 0, 3});
    CHECK(gsd.kind == "graceful-difference-total-coloring");
    CHECK(gsd.param("k") == 0);

    Labeling hx = set_dual_transform(g, f, "h_setX");
    CHECK(vcolors(g, hx) == std::vector<long long>{1, 3, 0, 2});
    CHECK(hx.kind == "felicitous-difference-total-coloring");
    CHECK(hx.param("k") == 1);

    Labeling hxs = set_dual_transform(g, f, "h*_setX");
    CHECK(vcolors(g, hxs) == std::vector<long long>{1, 3, 0, 2});
    CHECK(hxs.kind == "edge-magic-total-coloring");
    CHECK(hxs.param("k") == 5);  // q + 1 + max f(X)

    Labeling hy = set_dual_transform(g, f, "h_setY");
    CHECK(vcolors(g, hy) == std::vector<long long>{0, 2, 1, 3});
    CHECK(hy.kind == "edge-magic-total-coloring");
    CHECK(hy.param("k") == 5);

    Labeling hys = set_dual_transform(g, f, "h*_setY");
    CHECK(vcolors(g, hys) == std::vector<long long>{0, 2, 1, 3});
    CHECK(hys.kind == "felicitous-difference-total-coloring");
    CHECK(hys.param("k") == 1);

    for (const auto* v : {"f_dual", "f*_dual", "g_setXY", "g*_setXY",
                          "h_setX", "h*_setX", "h_setY", "h*_setY"}) {
        Labeling out = set_dual_transform(g, f, v);
        CHECK(verify(g, out, out.kind).accepted);
    }
}

TEST_CASE("set-dual rejects non-set-ordered input and unknown variants") {
    Graph p5 = path_graph(5);
    Labeling bad = p5_unordered(p5);
    REQUIRE(verify(p5, bad, "graceful").accepted);  // graceful, yet not set-ordered
    CHECK_THROWS_AS(set_dual_transform(p5, bad, "f_dual"), std::invalid_argument);

    Graph g = path_graph(4);
    CHECK_THROWS_AS(set_dual_transform(g, p4_graceful(g), "dual-5"), std::invalid_argument);
}

TEST_CASE("reciprocal on X reverses the X color order and can keep edges") {
    Graph g = path_graph(4);
    Labeling f = p4_graceful(g);

    Labeling rx = reciprocal_transform(g, f, "X", "keep");
    CHECK(vcolors(g, rx) == std::vector<long long>{1, 3, 0, 2});
    CHECK(rx.ecolor(0, 1) == 3);
    CHECK(rx.ecolor(1, 2) == 2);
    CHECK(rx.ecolor(2, 3) == 1);

    // the full reversal is an involution
    Labeling rt = reciprocal_transform(g, f, "total", "keep");
    Labeling back = reciprocal_transform(g, rt, "total", "keep");
    CHECK(back.vertex == f.vertex);
    CHECK(back.edge == f.edge);

    // complementing the edges preserves the color set [1, q]
    Labeling rc = reciprocal_transform(g, f, "Y", "complement");
    CHECK(ecolor_set(g, rc) == std::set<long long>{1, 2, 3});

    // recompute derives the new absolute differences
    Labeling rr = reciprocal_transform(g, f, "X", "recompute");
    CHECK(rr.ecolor(0, 1) == 2);
    CHECK(rr.ecolor(1, 2) == 3);
    CHECK(rr.ecolor(2, 3) == 2);
}

TEST_CASE("reciprocal validates its arguments") {
    Graph g = path_graph(4);
    Labeling f = p4_graceful(g);
    CHECK_THROWS_AS(reciprocal_transform(g, f, "Z", "keep"), std::invalid_argument);
    CHECK_THROWS_AS(reciprocal_transform(g, f, "X", "invert"), std::invalid_argument);

    // repeated vertex colors are rejected
    Graph p3 = path_graph(3);
    Labeling rep = make_vertex_labeling(p3, {0, 0, 1}, "vertex");
    CHECK_THROWS_AS(reciprocal_transform(p3, rep, "X", "recompute"), std::invalid_argument);

    // not set-ordered under either orientation
    Graph p5 = path_graph(5);
    CHECK_THROWS_AS(reciprocal_transform(p5, p5_unordered(p5), "X", "keep"),
                    std::invalid_argument);

    // a supplied bipartition is taken literally
    Bipartition flipped{{1, 3}, {0, 2}};
    CHECK_THROWS_AS(reciprocal_transform(g, f, "X", "keep", flipped), std::invalid_argument);
}

TEST_CASE("equivalent labelings of P4 match the hand-computed images") {
    Graph g = path_graph(4);
    Labeling f = p4_graceful(g);

    Labeling kd = equivalent_labeling(g, f, "kd-graceful", {{"k", 1}, {"d", 2}});
    CHECK(vcolors(g, kd) == std::vector<long long>{0, 5, 2, 3});
    CHECK(ecolor_set(g, kd) == std::set<long long>{1, 3, 5});
    CHECK(verify(g, kd, "kd-graceful").accepted);

    Labeling oe = equivalent_labeling(g, f, "odd-elegant");
    CHECK(vcolors(g, oe) == std::vector<long long>{2, 5, 0, 3});
    CHECK(ecolor_set(g, oe) == std::set<long long>{1, 3, 5});

    Labeling ke = equivalent_labeling(g, f, "kd-elegant", {{"k", 3}, {"d", 2}});
    CHECK(vcolors(g, ke) == std::vector<long long>{2, 7, 0, 5});
    CHECK(ecolor_set(g, ke) == std::set<long long>{0, 2, 4});

    Labeling emt = equivalent_labeling(g, f, "kd-edge-magic-total", {{"k", 1}, {"d", 1}});
    CHECK(vcolors(g, emt) == std::vector<long long>{1, 4, 0, 3});
    CHECK(emt.ecolor(0, 1) == 0);
    CHECK(emt.ecolor(1, 2) == 1);
    CHECK(emt.ecolor(2, 3) == 2);
    CHECK(emt.param("lambda") == 5);

    Labeling super = equivalent_labeling(g, f, "super-edge-magic-total");
    CHECK(vcolors(g, super) == std::vector<long long>{2, 4, 1, 3});
    CHECK(ecolor_set(g, super) == std::set<long long>{5, 6, 7});
    CHECK(super.param("c") == 11);  // |X| + 2p + 1

    // the difference pair shares one construction; k defaults to (|X|-1)d + 1
    Labeling gd = equivalent_labeling(g, f, "kd-graceful-difference");
    CHECK(gd.param("k") == 2);
    CHECK(gd.param("c") == 1);
    CHECK(verify(g, gd, "kd-graceful-difference").accepted);
    Labeling fd = equivalent_labeling(g, f, "kd-felicitous-difference", {{"k", 4}, {"d", 2}});
    CHECK(verify(g, fd, "kd-felicitous-difference").accepted);
    CHECK_THROWS_AS(
        equivalent_labeling(g, f, "kd-graceful-difference", {{"k", 1}, {"d", 1}}),
        std::invalid_argument);
}

TEST_CASE("equivalent labeling rejects unsupported targets and non-trees") {
    Graph g = path_graph(4);
    Labeling f = p4_graceful(g);
    CHECK_THROWS_AS(equivalent_labeling(g, f, "harmonious"), std::invalid_argument);
    CHECK_THROWS_AS(equivalent_labeling(g, f, "kd-arithmetic"), std::invalid_argument);

    Graph c4 = cycle_graph(4);
    Labeling cf = make_vertex_labeling(c4, {0, 4, 1, 2}, "graceful");
    CHECK_THROWS_AS(equivalent_labeling(c4, cf, "kd-graceful"), std::invalid_argument);
}

TEST_CASE("equivalent labelings verify on a spread of trees and parameters") {
    std::vector<Graph> trees = {path_graph(4), path_graph(6), star_graph(4)};
    {
        Graph spider = star_graph(3);  // subdivide one arm: S(2,1,1)
        spider.p += 1;
        spider.add_edge(3, 4);
        trees.push_back(spider);
    }
    const std::vector<std::string> targets = {
        "kd-graceful", "odd-elegant", "kd-elegant", "kd-edge-magic-total",
        "kd-graceful-difference", "kd-felicitous-difference", "super-edge-magic-total"};
    for (const auto& t : trees) {
        SearchResult r = search_labeling(t, "set-ordered-graceful");
        REQUIRE(r.status == SearchStatus::found);
        for (const auto& target : targets) {
            for (long long k : {1LL, 3LL}) {
                for (long long d : {1LL, 2LL}) {
                    std::map<std::string, long long> ps{{"k", k}, {"d", d}};
                    if (target == "kd-graceful-difference" ||
                        target == "kd-felicitous-difference")
                        ps.erase("k");  // keep the valid default
                    Labeling out = equivalent_labeling(t, *r.labeling, target, ps);
                    CHECK(verify(t, out, out.kind).accepted);
                }
            }
        }
    }
}

TEST_CASE("graceful join of two K2 blocks matches the worked examples") {
    Graph k2 = path_graph(2);
    Labeling f = make_vertex_labeling(k2, {0, 1}, "set-ordered-graceful");
    Labeling gt = make_vertex_labeling(k2, {0, 1}, "graceful");

    JoinedGraph bridged = graceful_join(k2, f, k2, gt, "bridge");
    CHECK(bridged.graph.p == 4);
    CHECK(bridged.graph.q() == 3);
    CHECK(is_tree(bridged.graph).tree);
    CHECK(vcolors(bridged.graph, bridged.labeling) == std::vector<long long>{0, 3, 1, 2});
    CHECK(ecolor_set(bridged.graph, bridged.labeling) == std::set<long long>{1, 2, 3});

    JoinedGraph cx = graceful_join(k2, f, k2, gt, "coincide-x");
    CHECK(cx.graph.p == 3);
    CHECK(cx.graph.q() == 2);
    CHECK(ecolor_set(cx.graph, cx.labeling) == std::set<long long>{1, 2});

    JoinedGraph cy = graceful_join(k2, f, k2, gt, "coincide-y");
    CHECK(cy.graph.p == 3);
    CHECK(cy.graph.q() == 2);
    CHECK(verify(cy.graph, cy.labeling, "graceful").accepted);

    JoinedGraph ec = graceful_join(k2, f, k2, gt, "edge-coincide");
    CHECK(ec.graph.p == 2);
    CHECK(ec.graph.q() == 1);
    CHECK(verify(ec.graph, ec.labeling, "graceful").accepted);
}

TEST_CASE("graceful join rejects bad operands and bad modes") {
    Graph k2 = path_graph(2);
    Labeling f = make_vertex_labeling(k2, {0, 1}, "set-ordered-graceful");
    Graph p3 = path_graph(3);
    Labeling ladder = make_vertex_labeling(p3, {0, 1, 2}, "graceful");
    CHECK_THROWS_AS(graceful_join(k2, f, p3, ladder, "bridge"), std::invalid_argument);

    Graph p5 = path_graph(5);
    Labeling bad = p5_unordered(p5);
    Labeling gt = make_vertex_labeling(k2, {0, 1}, "graceful");
    CHECK_THROWS_AS(graceful_join(p5, bad, k2, gt, "bridge"), std::invalid_argument);
    CHECK_THROWS_AS(graceful_join(k2, f, k2, gt, "weld"), std::invalid_argument);
}

TEST_CASE("graceful join keeps producing graceful labelings on random caterpillar pairs") {
    std::mt19937 rng(20260815);
    const std::vector<std::string> modes = {"bridge", "coincide-x", "coincide-y",
                                            "edge-coincide"};
    for (int trial = 0; trial < 200; ++trial) {
        Graph a = random_caterpillar(rng);
        Graph b = random_caterpillar(rng);
        SearchResult fa = search_labeling(a, "set-ordered-graceful");
        SearchResult fb = search_labeling(b, "graceful");
        REQUIRE(fa.status == SearchStatus::found);
        REQUIRE(fb.status == SearchStatus::found);
        const std::string& mode = modes[trial % modes.size()];
        JoinedGraph out = graceful_join(a, *fa.labeling, b, *fb.labeling, mode);
        int expect_q = a.q() + b.q() + (mode == "bridge" ? 1 : mode == "edge-coincide" ? -1 : 0);
        int expect_p = a.p + b.p - (mode == "coincide-x" || mode == "coincide-y" ? 1
                                    : mode == "edge-coincide"                    ? 2
                                                                                 : 0);
        CHECK(out.graph.q() == expect_q);
        CHECK(out.graph.p == expect_p);
        CHECK(verify(out.graph, out.labeling, "graceful").accepted);
    }
}

TEST_CASE("totally (k,d)-sequential images of gracefully labeled trees") {
    Graph p2 = path_graph(2);
    Labeling f2 = make_vertex_labeling(p2, {0, 1}, "graceful");
    Labeling t2 = totally_kd_sequential(p2, f2, 1, 1);
    CHECK(vcolors(p2, t2) == std::vector<long long>{1, 3});
    CHECK(t2.ecolor(0, 1) == 2);

    Graph p4 = path_graph(4);
    Labeling f4 = p4_graceful(p4);
    Labeling t4 = totally_kd_sequential(p4, f4, 1, 1);
    CHECK(vcolors(p4, t4) == std::vector<long long>{1, 7, 3, 5});
    std::set<long long> all(ecolor_set(p4, t4));
    for (int v = 0; v < p4.p; ++v) all.insert(t4.vcolor(v));
    CHECK(all == std::set<long long>{1, 2, 3, 4, 5, 6, 7});

    CHECK_THROWS_AS(totally_kd_sequential(p2, f2, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(totally_kd_sequential(p2, f2, 1, 0), std::invalid_argument);

    Graph p3 = path_graph(3);
    Labeling ladder = make_vertex_labeling(p3, {0, 1, 2}, "graceful");
    CHECK_THROWS_AS(totally_kd_sequential(p3, ladder, 1, 1), std::invalid_argument);

    Graph c4 = cycle_graph(4);
    Labeling cf = make_vertex_labeling(c4, {0, 4, 1, 2}, "graceful");
    CHECK_THROWS_AS(totally_kd_sequential(c4, cf, 1, 1), std::invalid_argument);

    // every (k, d) in {1,2,3}^2 on a handful of trees
    std::vector<Graph> trees = {path_graph(3), path_graph(5), star_graph(3)};
    for (const auto& t : trees) {
        SearchResult r = search_labeling(t, "graceful");
        REQUIRE(r.status == SearchStatus::found);
        for (long long k = 1; k <= 3; ++k)
            for (long long d = 1; d <= 3; ++d) {
                Labeling out = totally_kd_sequential(t, *r.labeling, k, d);
                CHECK(verify(t, out, "totally-kd-sequential").accepted);
            }
    }
}

TEST_CASE("multi-dimension composition zips layers componentwise") {
    Graph k2 = path_graph(2);
    Labeling a = make_vertex_labeling(k2, {0, 1}, "graceful");
    Labeling b = make_vertex_labeling(k2, {1, 0}, "graceful");
    TupleColoring tc = multi_dimension_compose(k2, {a, b});
    CHECK(tc.vertex.at(0) == std::vector<long long>{0, 1});
    CHECK(tc.vertex.at(1) == std::vector<long long>{1, 0});
    CHECK(tc.edge.at(make_edge(0, 1)) == std::vector<long long>{1, 1});

    Graph p4 = path_graph(4);
    Labeling f = p4_graceful(p4);
    Labeling d = dual(f);
    TupleColoring zipped = multi_dimension_compose(p4, {f, d});
    for (int v = 0; v < p4.p; ++v) {
        CHECK(zipped.vertex.at(v)[0] == f.vcolor(v));
        CHECK(zipped.vertex.at(v)[1] == d.vcolor(v));
    }
    for (const auto& e : p4.edges)
        CHECK(zipped.edge.at(e) ==
              std::vector<long long>{f.ecolor(e.first, e.second), d.ecolor(e.first, e.second)});

    CHECK_THROWS_AS(multi_dimension_compose(k2, {a}), std::invalid_argument);
    Labeling partial = make_vertex_labeling(k2, {0, 1}, "vertex", EdgeRule::none);
    CHECK_THROWS_AS(multi_dimension_compose(k2, {a, partial}), std::invalid_argument);
}
