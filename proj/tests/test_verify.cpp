#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "topocode/graph.hpp"
#include "topocode/labeling.hpp"
#include "topocode/verify.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

using namespace topocode;

namespace {

using Params = std::map<std::string, long long>;

// vertex-only labeling (edge colors left to the verifier's rule)
Labeling vlab(const Graph& g, const std::vector<long long>& vc, Params params = {}) {
    Labeling L = make_vertex_labeling(g, vc, "", EdgeRule::none);
    L.params = std::move(params);
    return L;
}

// total labeling: edge colors given in g.edges order
Labeling tlab(const Graph& g, const std::vector<long long>& vc, const std::vector<long long>& ec,
              Params params = {}) {
    Labeling L = vlab(g, vc, std::move(params));
    REQUIRE(ec.size() == g.edges.size());
    for (size_t i = 0; i < ec.size(); ++i) L.edge[g.edges[i]] = ec[i];
    return L;
}

bool has_cond(const VerificationReport& r, const std::string& needle) {
    for (const auto& v : r.violations)
        if (v.condition.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("kind catalog and aliases") {
    CHECK(known_kinds().size() == 70);
    CHECK(canonical_kind("graceful") == "graceful");
    CHECK(canonical_kind("Set-Ordered Graceful") == "set-ordered-graceful");
    CHECK(canonical_kind("(k,d)-graceful") == "kd-graceful");
    CHECK(canonical_kind("(k,d)-edge antimagic total") == "kd-edge-antimagic-total");
    CHECK(canonical_kind("(k,λ)-magic total") == "kl-magic-total");
    CHECK(canonical_kind("6C-labeling") == "6c");
    CHECK(canonical_kind("totally (k,d)-sequential") == "totally-kd-sequential");
    CHECK_THROWS_AS(canonical_kind("bogus-kind"), std::invalid_argument);
}

TEST_CASE("graceful basics") {
    auto k2 = path_graph(2);
    CHECK(verify(k2, vlab(k2, {0, 1}), "graceful").accepted);

    auto p3 = path_graph(3);
    auto bad = verify(p3, vlab(p3, {0, 1, 2}), "graceful");
    CHECK_FALSE(bad.accepted);
    CHECK(has_cond(bad, "B-4"));
    CHECK(bad.violations.front().witness.find("duplicate edge color 1") != std::string::npos);

    auto c3 = cycle_graph(3);
    CHECK(verify(c3, vlab(c3, {0, 1, 3}), "graceful").accepted);
    // no bipartition exists, so the set-ordered clause cannot hold
    auto so = verify(c3, vlab(c3, {0, 1, 3}), "set-ordered-graceful");
    CHECK_FALSE(so.accepted);
    CHECK(has_cond(so, "B-6"));

    // stored edge colors that contradict the induced rule are flagged
    auto tampered = tlab(k2, {0, 1}, {2});
    CHECK_FALSE(verify(k2, tampered, "graceful").accepted);
}

TEST_CASE("set-ordered graceful and orientation retry") {
    auto p4 = path_graph(4);
    CHECK(verify(p4, vlab(p4, {0, 3, 1, 2}), "set-ordered-graceful").accepted);
    // only the reversed orientation is ordered; the wrapper must retry
    CHECK(verify(p4, vlab(p4, {3, 0, 2, 1}), "set-ordered-graceful").accepted);
    // an explicit bipartition is taken literally
    Bipartition good{{0, 2}, {1, 3}}, flipped{{1, 3}, {0, 2}};
    CHECK(verify(p4, vlab(p4, {0, 3, 1, 2}), "set-ordered-graceful", good).accepted);
    CHECK_FALSE(verify(p4, vlab(p4, {0, 3, 1, 2}), "set-ordered-graceful", flipped).accepted);
}

TEST_CASE("strongly graceful needs the tree matching") {
    auto p4 = path_graph(4);
    CHECK(verify(p4, vlab(p4, {0, 3, 1, 2}), "strongly-graceful").accepted);
    CHECK(verify(p4, vlab(p4, {0, 3, 1, 2}), "set-ordered-strongly-graceful").accepted);

    auto p5 = path_graph(5);
    auto r = verify(p5, vlab(p5, {0, 4, 1, 3, 2}), "strongly-graceful");
    CHECK_FALSE(r.accepted);
    CHECK(has_cond(r, "B-7"));

    auto c4 = cycle_graph(4);
    CHECK(has_cond(verify(c4, vlab(c4, {0, 1, 3, 2}), "strongly-graceful"), "B-7"));
}

TEST_CASE("odd-graceful family") {
    auto c4 = cycle_graph(4);
    CHECK(verify(c4, vlab(c4, {0, 5, 4, 7}), "odd-graceful").accepted);
    auto p4 = path_graph(4);
    CHECK(verify(p4, vlab(p4, {0, 5, 2, 3}), "odd-graceful").accepted);
    CHECK(verify(p4, vlab(p4, {0, 5, 2, 3}), "set-ordered-odd-graceful").accepted);
    CHECK(verify(p4, vlab(p4, {0, 5, 2, 3}), "strongly-odd-graceful").accepted);
    CHECK_FALSE(verify(p4, vlab(p4, {0, 5, 2, 4}), "odd-graceful").accepted);
}

TEST_CASE("edge-magic total") {
    auto p3 = path_graph(3);
    auto L = tlab(p3, {2, 1, 3}, {5, 4});
    CHECK(verify(p3, L, "edge-magic-total").accepted);
    CHECK(verify(p3, L, "super-edge-magic-total").accepted);
    auto M = tlab(p3, {1, 5, 2}, {4, 3});
    CHECK(verify(p3, M, "edge-magic-total").accepted);
    CHECK_FALSE(verify(p3, M, "super-edge-magic-total").accepted);
    // the constant can be pinned by a param
    auto N = tlab(p3, {2, 1, 3}, {5, 4}, {{"c", 8}});
    CHECK(verify(p3, N, "edge-magic-total").accepted);
    auto W = tlab(p3, {2, 1, 3}, {5, 4}, {{"c", 9}});
    CHECK_FALSE(verify(p3, W, "edge-magic-total").accepted);
    // independent edge data is required
    CHECK_THROWS_AS(verify(p3, vlab(p3, {2, 1, 3}), "edge-magic-total"), std::invalid_argument);
}

TEST_CASE("felicitous and odd-elegant") {
    auto c4 = cycle_graph(4);
    CHECK(verify(c4, vlab(c4, {0, 1, 2, 4}), "felicitous").accepted);
    CHECK_FALSE(verify(c4, vlab(c4, {0, 1, 2, 3}), "felicitous").accepted);
    auto c3 = cycle_graph(3);
    CHECK(verify(c3, vlab(c3, {1, 2, 3}), "super-felicitous").accepted);

    auto p4 = path_graph(4);
    CHECK(verify(p4, vlab(p4, {0, 1, 2, 3}), "odd-elegant").accepted);

    // the coloring variant tolerates a repeated non-adjacent vertex color
    auto p5 = path_graph(5);
    CHECK(verify(p5, vlab(p5, {0, 1, 4, 7, 0}), "odd-elegant-coloring").accepted);
    auto inj = verify(p5, vlab(p5, {0, 1, 4, 7, 0}), "odd-elegant");
    CHECK_FALSE(inj.accepted);
    CHECK(has_cond(inj, "vertex-injective"));
}

TEST_CASE("k-graceful") {
    auto p3 = path_graph(3);
    CHECK(verify(p3, vlab(p3, {3, 0, 2}, {{"k", 2}}), "k-graceful").accepted);
    CHECK_THROWS_AS(verify(p3, vlab(p3, {3, 0, 2}), "k-graceful"), std::invalid_argument);
}

TEST_CASE("edge-magic graceful and edge-difference total") {
    auto p3 = path_graph(3);
    CHECK(verify(p3, tlab(p3, {4, 1, 5}, {2, 3}), "edge-magic-graceful").accepted);
    CHECK(verify(p3, tlab(p3, {4, 1, 5}, {2, 3}, {{"k", 3}}), "edge-magic-graceful").accepted);
    CHECK_FALSE(verify(p3, tlab(p3, {4, 1, 5}, {2, 3}, {{"k", 2}}), "edge-magic-graceful").accepted);

    CHECK(verify(p3, tlab(p3, {2, 5, 1}, {4, 3}), "edge-difference-total").accepted);
    CHECK_FALSE(verify(p3, tlab(p3, {2, 5, 1}, {4, 3}, {{"super", 1}}), "edge-difference-total").accepted);
    CHECK(verify(p3, tlab(p3, {1, 3, 2}, {4, 5}, {{"super", 1}}), "edge-difference-total").accepted);
}

TEST_CASE("pan kinds allow a per-edge branch") {
    auto p3 = path_graph(3);
    // one branch per edge, same constant 5
    auto L = tlab(p3, {3, 5, 1}, {2, 4});
    CHECK(verify(p3, L, "pan-edge-difference-total").accepted);
    CHECK_FALSE(verify(p3, L, "edge-difference-total").accepted);

    CHECK(verify(p3, tlab(p3, {4, 1, 5}, {2, 3}), "pan-edge-magic-graceful").accepted);

    auto M = tlab(p3, {0, 3, 1}, {3, 1});
    CHECK(verify(p3, M, "pan-odd-graceful").accepted);
    CHECK_FALSE(verify(p3, M, "odd-graceful").accepted);
}

TEST_CASE("6C labeling") {
    auto p3 = path_graph(3);
    // all six clauses hold; the ordered clause needs the reversed orientation
    CHECK(verify(p3, tlab(p3, {4, 3, 5}, {2, 1}), "6c").accepted);
    // fails only the vertex/edge matching clause
    auto r = verify(p3, tlab(p3, {1, 5, 3}, {2, 4}), "6c");
    CHECK_FALSE(r.accepted);
    CHECK(has_cond(r, "6C-(v)"));
    CHECK_FALSE(has_cond(r, "6C-(i)"));
    CHECK_FALSE(has_cond(r, "6C-(iv)"));
}

TEST_CASE("totally graceful family") {
    auto p3 = path_graph(3);
    CHECK(verify(p3, vlab(p3, {4, 5, 2}), "totally-graceful").accepted);
    CHECK_FALSE(verify(p3, vlab(p3, {4, 5, 2}), "super-totally-graceful").accepted);
    CHECK(verify(p3, vlab(p3, {4, 3, 5}), "super-totally-graceful").accepted);
    CHECK(verify(p3, vlab(p3, {4, 3, 5}), "set-ordered-totally-graceful").accepted);
    CHECK(verify(p3, vlab(p3, {4, 3, 5}), "super-set-ordered-totally-graceful").accepted);
}

TEST_CASE("(k,d)-graceful, arithmetic, harmonious") {
    auto p3 = path_graph(3);
    CHECK(verify(p3, vlab(p3, {0, 5, 3}, {{"k", 2}, {"d", 3}}), "kd-graceful").accepted);
    auto p4 = path_graph(4);
    CHECK(verify(p4, vlab(p4, {0, 3, 1, 2}, {{"k", 1}, {"d", 1}}), "kd-graceful").accepted);
    CHECK(verify(p3, vlab(p3, {0, 1, 2}, {{"k", 1}, {"d", 2}}), "kd-arithmetic").accepted);
    CHECK(verify(p3, vlab(p3, {0, 1, 2}, {{"k", 1}, {"d", 2}}), "kd-harmonious").accepted);
    CHECK_FALSE(verify(p3, vlab(p3, {0, 1, 3}, {{"k", 1}, {"d", 2}}), "kd-harmonious").accepted);
    CHECK_THROWS_AS(verify(p3, vlab(p3, {0, 1, 2}, {{"k", 1}}), "kd-arithmetic"),
                    std::invalid_argument);
}

TEST_CASE("(k,d)-edge antimagic total") {
    auto p3 = path_graph(3);
    auto L = tlab(p3, {1, 4, 2}, {3, 5}, {{"k", 8}, {"d", 3}});
    CHECK(verify(p3, L, "kd-edge-antimagic-total").accepted);
    CHECK_FALSE(verify(p3, L, "super-kd-edge-antimagic-total").accepted);
    auto M = tlab(p3, {1, 3, 2}, {4, 5}, {{"k", 8}, {"d", 2}});
    CHECK(verify(p3, M, "super-kd-edge-antimagic-total").accepted);
    auto wrong = tlab(p3, {1, 4, 2}, {3, 5}, {{"k", 7}, {"d", 3}});
    CHECK_FALSE(verify(p3, wrong, "kd-edge-antimagic-total").accepted);
}

TEST_CASE("(k,d)-elegant frames") {
    auto p3 = path_graph(3);
    CHECK(verify(p3, vlab(p3, {0, 3, 2}, {{"k", 3}, {"d", 2}}), "kd-elegant").accepted);
    // vertex repeats are fine but edge colors must not collide
    CHECK_FALSE(verify(p3, vlab(p3, {0, 3, 0}, {{"k", 3}, {"d", 2}}), "kd-elegant").accepted);
}

TEST_CASE("(k,d)-odd-graceful and odd-elegant") {
    auto p3 = path_graph(3);
    CHECK(verify(p3, vlab(p3, {0, 7, 4}, {{"k", 1}, {"d", 2}}), "kd-odd-graceful").accepted);
    CHECK(verify(p3, vlab(p3, {0, 3, 2}, {{"k", 2}, {"d", 1}}), "kd-odd-elegant").accepted);
    CHECK(verify(p3, vlab(p3, {0, 1, 2}, {{"k", 1}, {"d", 2}}), "kd-odd-elegant-coloring").accepted);
}

TEST_CASE("(k,d)-edge-magic total labeling") {
    auto p3 = path_graph(3);
    auto L = tlab(p3, {0, 1, 2}, {4, 2}, {{"k", 1}, {"d", 1}});
    CHECK(verify(p3, L, "kd-edge-magic-total").accepted);
    auto M = tlab(p3, {0, 1, 2}, {4, 2}, {{"k", 1}, {"d", 1}, {"lambda", 5}});
    CHECK(verify(p3, M, "kd-edge-magic-total").accepted);
    auto W = tlab(p3, {0, 1, 2}, {4, 2}, {{"k", 1}, {"d", 1}, {"lambda", 6}});
    CHECK_FALSE(verify(p3, W, "kd-edge-magic-total").accepted);
}

TEST_CASE("(k,d) graceful- and felicitous-difference labelings") {
    auto p3 = path_graph(3);
    auto L = tlab(p3, {0, 4, 1}, {2, 1}, {{"k", 1}, {"d", 1}});
    CHECK(verify(p3, L, "kd-graceful-difference").accepted);
    auto L2 = tlab(p3, {0, 4, 1}, {2, 1}, {{"k", 1}, {"d", 1}, {"c", 2}});
    CHECK(verify(p3, L2, "kd-graceful-difference").accepted);
    auto L3 = tlab(p3, {0, 4, 1}, {2, 1}, {{"k", 1}, {"d", 1}, {"c", 3}});
    CHECK_FALSE(verify(p3, L3, "kd-graceful-difference").accepted);

    auto F = tlab(p3, {0, 3, 1}, {2, 1}, {{"k", 1}, {"d", 1}});
    CHECK(verify(p3, F, "kd-felicitous-difference").accepted);
}

TEST_CASE("gracefully total colorings") {
    auto p5 = path_graph(5);
    CHECK(verify(p5, vlab(p5, {2, 1, 5, 2, 4}), "gracefully-total-coloring").accepted);
    CHECK(verify(p5, vlab(p5, {1, 3, 2, 5, 1}), "set-ordered-gracefully-total-coloring").accepted);
    // all vertex colors distinct is disallowed
    auto p4 = path_graph(4);
    auto r = verify(p4, vlab(p4, {1, 4, 2, 3}), "gracefully-total-coloring");
    CHECK_FALSE(r.accepted);
    CHECK(has_cond(r, "vertex-repeat"));
    // complete graphs are excluded
    auto k3 = complete_graph(3);
    CHECK(has_cond(verify(k3, vlab(k3, {1, 2, 3}), "gracefully-total-coloring"), "not-complete"));
}

TEST_CASE("(k,d)-gracefully total colorings") {
    auto p5 = path_graph(5);
    auto L = vlab(p5, {0, 11, 3, 8, 6}, {{"k", 2}, {"d", 3}});
    CHECK(verify(p5, L, "kd-gracefully-total").accepted);
    CHECK(has_cond(verify(p5, L, "kd-strongly-gracefully-total"), "matching-sum"));
    auto bad = vlab(p5, {0, 11, 3, 8, 9}, {{"k", 2}, {"d", 3}});
    CHECK_FALSE(verify(p5, bad, "kd-gracefully-total").accepted);

    auto p4 = path_graph(4);
    CHECK(verify(p4, vlab(p4, {0, 3, 1, 2}, {{"k", 1}, {"d", 1}}),
                 "kd-strongly-gracefully-total").accepted);
    CHECK(verify(p4, vlab(p4, {0, 3, 1, 2}, {{"k", 1}, {"d", 1}, {"proper", 1}}),
                 "kd-gracefully-total").accepted);
}

TEST_CASE("(k,d)-odd-gracefully total colorings") {
    auto p3 = path_graph(3);
    CHECK(verify(p3, vlab(p3, {0, 7, 4}, {{"k", 1}, {"d", 2}}), "kd-odd-gracefully-total").accepted);
    auto p4 = path_graph(4);
    CHECK(verify(p4, vlab(p4, {0, 6, 2, 4}, {{"k", 1}, {"d", 1}}),
                 "kd-strongly-odd-gracefully-total").accepted);
}

TEST_CASE("(k,d)-edge-antimagic total coloring derives the offset") {
    auto p3 = path_graph(3);
    auto L = tlab(p3, {0, 2, 1}, {2, 3}, {{"k", 1}, {"d", 1}});
    CHECK(verify(p3, L, "kd-edge-antimagic-total-coloring").accepted);
    auto pinned = tlab(p3, {0, 2, 1}, {2, 3}, {{"k", 1}, {"d", 1}, {"a", 1}});
    CHECK(verify(p3, pinned, "kd-edge-antimagic-total-coloring").accepted);
    auto off = tlab(p3, {0, 2, 1}, {2, 3}, {{"k", 1}, {"d", 1}, {"a", 0}});
    CHECK_FALSE(verify(p3, off, "kd-edge-antimagic-total-coloring").accepted);
}

TEST_CASE("(k,d)-harmonious and odd-elegant total colorings") {
    auto p3 = path_graph(3);
    CHECK(verify(p3, vlab(p3, {0, 1, 2}, {{"k", 1}, {"d", 2}}),
                 "kd-harmonious-total-coloring").accepted);
    CHECK(verify(p3, vlab(p3, {0, 7, 4}, {{"k", 1}, {"d", 2}}),
                 "kd-odd-elegant-total-coloring").accepted);
}

TEST_CASE("(k,d) magic-style total colorings, strongly and relaxed") {
    auto p3 = path_graph(3);
    Params kd{{"k", 1}, {"d", 1}};
    auto em = tlab(p3, {0, 2, 1}, {2, 1}, kd);
    CHECK(verify(p3, em, "kd-strongly-edge-magic-total-coloring").accepted);
    CHECK(verify(p3, em, "kd-edge-magic-total-coloring").accepted);
    auto relaxed = tlab(p3, {0, 2, 1}, {3, 2}, kd);
    CHECK(verify(p3, relaxed, "kd-edge-magic-total-coloring").accepted);
    CHECK_FALSE(verify(p3, relaxed, "kd-strongly-edge-magic-total-coloring").accepted);

    CHECK(verify(p3, tlab(p3, {0, 2, 1}, {1, 2}, kd),
                 "kd-strongly-edge-difference-total-coloring").accepted);
    CHECK(verify(p3, tlab(p3, {0, 2, 1}, {1, 2}, kd),
                 "kd-strongly-felicitous-difference-total-coloring").accepted);
    auto fd_relaxed = tlab(p3, {0, 2, 1}, {2, 3}, kd);
    CHECK(verify(p3, fd_relaxed, "kd-felicitous-difference-total-coloring").accepted);
    CHECK_FALSE(verify(p3, fd_relaxed, "kd-strongly-felicitous-difference-total-coloring").accepted);
    CHECK(verify(p3, tlab(p3, {0, 2, 1}, {1, 2}, kd),
                 "kd-strongly-graceful-difference-total-coloring").accepted);
}

TEST_CASE("proper param rejects touching repeats") {
    auto p3 = path_graph(3);
    auto L = tlab(p3, {0, 1, 0}, {2, 2}, {{"k", 1}, {"d", 1}});
    CHECK(verify(p3, L, "kd-edge-magic-total-coloring").accepted);
    auto P = tlab(p3, {0, 1, 0}, {2, 2}, {{"k", 1}, {"d", 1}, {"proper", 1}});
    auto r = verify(p3, P, "kd-edge-magic-total-coloring");
    CHECK_FALSE(r.accepted);
    CHECK(has_cond(r, "proper-edge"));
}

TEST_CASE("gracefully total sequence colorings") {
    auto p4 = path_graph(4);
    Params AB{{"a0", 0}, {"a1", 1}, {"a2", 2}, {"a3", 3}, {"b0", 1}, {"b1", 2}, {"b2", 3}};
    CHECK(verify(p4, vlab(p4, {0, 3, 1, 2}, AB), "gracefully-total-sequence-coloring").accepted);
    auto r = verify(p4, vlab(p4, {0, 3, 1, 2}, AB), "proper-gracefully-total-sequence-coloring");
    CHECK_FALSE(r.accepted);
    CHECK(has_cond(r, "proper-incidence"));

    Params AB2{{"a0", 0}, {"a1", 1}, {"a2", 3}, {"a3", 4}, {"b0", 1}, {"b1", 2}, {"b2", 3}};
    CHECK(verify(p4, vlab(p4, {3, 4, 1, 3}, AB2), "proper-gracefully-total-sequence-coloring").accepted);

    // a pair with 0 < b - a outside B breaks the sequence-ordered precondition
    Params badAB{{"a0", 0}, {"a1", 1}, {"b0", 2}, {"b1", 3}, {"b2", 4}};
    auto p3 = path_graph(3);
    CHECK_THROWS_AS(verify(p3, vlab(p3, {0, 2, 1}, badAB), "gracefully-total-sequence-coloring"),
                    std::invalid_argument);
    // A shorter than the vertex count
    Params shortA{{"a0", 0}, {"a1", 1}, {"b0", 1}, {"b1", 2}, {"b2", 3}};
    CHECK_THROWS_AS(verify(p4, vlab(p4, {0, 3, 1, 2}, shortA), "gracefully-total-sequence-coloring"),
                    std::invalid_argument);
}

TEST_CASE("magic-family total colorings accept zero colors") {
    auto p3 = path_graph(3);
    CHECK(verify(p3, tlab(p3, {0, 2, 1}, {2, 1}), "edge-magic-total-coloring").accepted);
    CHECK(verify(p3, tlab(p3, {0, 2, 1}, {1, 2}), "graceful-difference-total-coloring").accepted);
    CHECK(verify(p3, tlab(p3, {0, 2, 1}, {1, 2}), "edge-difference-total-coloring").accepted);
    CHECK(verify(p3, tlab(p3, {0, 2, 1}, {2, 3}), "felicitous-difference-total-coloring").accepted);
    // a zero edge color is legitimate
    CHECK(verify(p3, tlab(p3, {0, 2, 1}, {0, 1}), "edge-difference-total-coloring").accepted);
    // but the edge-magic constant must stay positive
    CHECK_FALSE(verify(p3, tlab(p3, {0, 0, 0}, {0, 0}), "edge-magic-total-coloring").accepted);

    // the set-ordered variant
    auto L = tlab(p3, {0, 1, 2}, {3, 1}, {{"set_ordered", 1}});
    CHECK_FALSE(verify(p3, L, "edge-magic-total-coloring").accepted);
    auto M = tlab(p3, {0, 1, 2}, {3, 1});
    CHECK(verify(p3, M, "edge-magic-total-coloring").accepted);
}

TEST_CASE("parameterized proper total colorings") {
    auto p3 = path_graph(3);
    Params em{{"a", 1}, {"b", 1}, {"c", 2}};
    CHECK(verify(p3, tlab(p3, {1, 2, 3}, {5, 4}, em),
                 "parameterized-edge-magic-proper-total-coloring").accepted);
    Params ed{{"a", 2}, {"b", 1}, {"c", 1}};
    CHECK(verify(p3, tlab(p3, {1, 2, 3}, {5, 1}, ed),
                 "parameterized-edge-difference-proper-total-coloring").accepted);
    Params fd{{"a", 1}, {"b", 1}, {"c", 2}};
    CHECK(verify(p3, tlab(p3, {1, 2, 3}, {4, 5}, fd),
                 "parameterized-felicitous-difference-proper-total-coloring").accepted);
    Params gd{{"a", 2}, {"b", 1}, {"c", 1}};
    CHECK(verify(p3, tlab(p3, {1, 2, 3}, {4, 8}, gd),
                 "parameterized-graceful-difference-proper-total-coloring").accepted);

    // unequal c_f values across edges
    Params flat{{"a", 1}, {"b", 1}, {"c", 1}};
    auto r = verify(p3, tlab(p3, {1, 2, 3}, {5, 4}, flat),
                    "parameterized-edge-magic-proper-total-coloring");
    CHECK_FALSE(r.accepted);
    CHECK(has_cond(r, "B*"));

    CHECK_THROWS_AS(verify(p3, tlab(p3, {1, 2, 3}, {5, 4}),
                           "parameterized-edge-magic-proper-total-coloring"),
                    std::invalid_argument);
}

TEST_CASE("magic total labeling identity") {
    // the seven-vertex path with its published identity constant
    auto p7 = path_graph(7);
    auto L = tlab(p7, {1, 3, 9, 6, 8, 5, 4}, {2, 10, 13, 12, 11, 7}, {{"k", 2}});
    L.kind = "kl-magic-total";
    CHECK(verify(p7, L).accepted);
    CHECK(verify(p7, L, "(k,λ)-magic total").accepted);
    auto wrong = tlab(p7, {1, 3, 9, 6, 8, 5, 4}, {2, 10, 13, 12, 11, 7}, {{"k", 3}});
    CHECK_FALSE(verify(p7, wrong, "kl-magic-total").accepted);

    auto p3 = path_graph(3);
    auto M = tlab(p3, {5, 4, 3}, {2, 1}, {{"lambda", 2}});
    CHECK(verify(p3, M, "kl-magic-total").accepted);
    auto M2 = tlab(p3, {5, 4, 3}, {2, 1}, {{"lambda", 2}, {"k", 5}});
    CHECK(verify(p3, M2, "kl-magic-total").accepted);
    CHECK(verify(p3, tlab(p3, {3, 2, 1}, {5, 4}, {{"lambda", 2}}), "super-kl-magic-total").accepted);
}

TEST_CASE("edge-difference magically total labelings") {
    auto p3 = path_graph(3);
    CHECK(verify(p3, tlab(p3, {5, 1, 4}, {3, 2}), "kl-edge-difference-magically").accepted);
    CHECK_FALSE(verify(p3, tlab(p3, {5, 1, 4}, {3, 2}), "super-kl-edge-difference-magically").accepted);
    auto S = tlab(p3, {3, 1, 2}, {4, 5}, {{"lambda", -1}});
    CHECK(verify(p3, S, "super-kl-edge-difference-magically").accepted);
    auto Z = tlab(p3, {5, 1, 4}, {3, 2}, {{"lambda", 0}});
    CHECK_THROWS_AS(verify(p3, Z, "kl-edge-difference-magically"), std::invalid_argument);

    auto F = tlab(p3, {0, 5, 2}, {4, 2}, {{"k", 3}, {"d", 2}, {"lambda", 1}});
    CHECK(verify(p3, F, "kd-edge-difference-kl-magically").accepted);
    auto F2 = tlab(p3, {0, 5, 2}, {4, 2}, {{"k", 3}, {"d", 2}, {"lambda", 1}, {"kstar", 1}});
    CHECK(verify(p3, F2, "kd-edge-difference-kl-magically").accepted);
}

TEST_CASE("totally (k,d)-sequential") {
    auto p3 = path_graph(3);
    CHECK(verify(p3, vlab(p3, {2, 6, 3}, {{"k", 2}, {"d", 1}}), "totally-kd-sequential").accepted);
    CHECK(verify(p3, vlab(p3, {1, 9, 3}, {{"k", 1}, {"d", 2}}), "totally-kd-sequential").accepted);
    CHECK_THROWS_AS(verify(p3, vlab(p3, {2, 6, 3}, {{"k", 0}, {"d", 1}}), "totally-kd-sequential"),
                    std::invalid_argument);
}

TEST_CASE("(k,d)-gracefully e-image") {
    auto p5 = path_graph(5);
    auto L = tlab(p5, {0, 11, 3, 8, 6}, {2, 5, 8, 11}, {{"k", 2}, {"d", 3}});
    CHECK(verify(p5, L, "kd-gracefully-e-image").accepted);
    auto pinned = tlab(p5, {0, 11, 3, 8, 6}, {2, 5, 8, 11}, {{"k", 2}, {"d", 3}, {"cc", 13}});
    CHECK(verify(p5, pinned, "kd-gracefully-e-image").accepted);
    auto bad = tlab(p5, {0, 11, 3, 8, 6}, {2, 5, 8, 3}, {{"k", 2}, {"d", 3}});
    CHECK_FALSE(verify(p5, bad, "kd-gracefully-e-image").accepted);
}

TEST_CASE("verify preconditions") {
    auto p3 = path_graph(3);
    Labeling partial;
    partial.vertex = {{0, 0}, {1, 1}};
    CHECK_THROWS_AS(verify(p3, partial, "graceful"), std::invalid_argument);
    CHECK_THROWS_AS(verify(p3, vlab(p3, {0, 2, 1}), "no-such-kind"), std::invalid_argument);
}

TEST_CASE("twin odd-graceful matching") {
    auto p4 = path_graph(4);
    auto s3 = star_graph(3);
    auto f = vlab(p4, {0, 5, 2, 3});
    CHECK(verify_matching(p4, f, s3, vlab(s3, {0, 1, 3, 5}), "twin-odd-graceful").accepted);
    CHECK_FALSE(verify_matching(p4, f, s3, vlab(s3, {0, 1, 3, 7}), "twin-odd-graceful").accepted);
    auto p3 = path_graph(3);
    CHECK_THROWS_AS(verify_matching(p4, f, p3, vlab(p3, {0, 1, 3}), "twin-odd-graceful"),
                    std::invalid_argument);
}

TEST_CASE("image matchings") {
    auto p3 = path_graph(3);
    auto f = vlab(p3, {0, 3, 1});
    CHECK(verify_matching(p3, f, p3, vlab(p3, {5, 2, 4}), "v-image").accepted);
    CHECK_FALSE(verify_matching(p3, f, p3, vlab(p3, {5, 2, 3}), "v-image").accepted);
    CHECK(verify_matching(p3, f, p3, vlab(p3, {1, 3, 0}), "e-image").accepted);

    Params kd{{"k", 1}, {"d", 2}};
    auto h1 = vlab(p3, {0, 1, 2}, kd);
    auto h2 = vlab(p3, {0, 3, 2}, kd);
    CHECK(verify_matching(p3, h1, p3, h2, "kd-harmonious-image").accepted);
    auto h3 = vlab(p3, {0, 1, 2}, kd);
    CHECK_FALSE(verify_matching(p3, h1, p3, h3, "kd-harmonious-image").accepted);
}

TEST_CASE("complementary and reciprocal-inverse matchings") {
    auto p3 = path_graph(3);
    auto f6c = tlab(p3, {4, 3, 5}, {2, 1});
    auto self = verify_matching(p3, f6c, p3, f6c, "6c-complementary");
    CHECK_FALSE(self.accepted);
    CHECK(has_cond(self, "X*"));

    auto p4 = path_graph(4);
    auto f = tlab(p3, {1, 5, 2}, {3, 4});
    auto g = tlab(p4, {3, 4, 5, 3}, {1, 2, 1});
    CHECK(verify_matching(p3, f, p4, g, "reciprocal-inverse").accepted);
    auto g2 = tlab(p4, {3, 4, 2, 3}, {1, 2, 1});
    CHECK_FALSE(verify_matching(p3, f, p4, g2, "reciprocal-inverse").accepted);
}
