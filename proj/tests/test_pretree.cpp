#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cutcactus/corpus.hpp"
#include "cutcactus/errors.hpp"
#include "cutcactus/pretree.hpp"

using namespace cutcactus;

namespace {

Pretree line(int k) {
    std::vector<std::string> names;
    for (int i = 0; i < k; ++i) names.push_back("p" + std::to_string(i));
    std::vector<std::array<std::string, 3>> triples;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            for (int m = i + 1; m < j; ++m) triples.push_back({names[i], names[m], names[j]});
    return Pretree(names, triples);
}

Pretree star3() {
    return Pretree({"c", "l1", "l2", "l3"},
                   {{"l1", "c", "l2"}, {"l1", "c", "l3"}, {"l2", "c", "l3"}});
}

// random tree on node_count nodes; returns (names, edges)
std::pair<std::vector<std::string>, std::vector<std::pair<int, int>>> random_tree(Rng& rng,
                                                                                  int node_count) {
    std::vector<std::string> names;
    for (int i = 0; i < node_count; ++i) names.push_back("t" + std::to_string(i));
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < node_count; ++v) edges.emplace_back(rng.range(0, v - 1), v);
    return {names, edges};
}

} // namespace

TEST_CASE("axioms: linear triple passes, twisted relation fails axiom 3") {
    Pretree ok({"x", "y", "z"}, {{"x", "y", "z"}});
    CHECK(check_axioms(ok).empty());
    Pretree bad({"x", "y", "z"}, {{"x", "y", "z"}, {"x", "z", "y"}});
    auto v = check_axioms(bad);
    REQUIRE(!v.empty());
    bool saw3 = false;
    for (auto& viol : v) saw3 |= viol.axiom == 3;
    CHECK(saw3);
}

TEST_CASE("axiom 4 violations are caught") {
    // y between x,z but unrelated to w from either side
    Pretree bad({"w", "x", "y", "z"}, {{"x", "y", "z"}});
    auto v = check_axioms(bad);
    REQUIRE(!v.empty());
    CHECK(v[0].axiom == 4);
}

TEST_CASE("intervals") {
    Pretree l = line(5);
    CHECK(l.interval(l.point("p0"), l.point("p0"), true) == VSet{l.point("p0")});
    CHECK(l.interval(l.point("p0"), l.point("p4"), false).size() == 3);
    CHECK(l.interval(l.point("p0"), l.point("p4"), true).size() == 5);
}

TEST_CASE("medians") {
    Pretree s = star3();
    auto med = medians(s, s.point("l1"), s.point("l2"), s.point("l3"));
    CHECK(med == VSet{s.point("c")});
    CHECK(is_median_pretree(s));

    Pretree free3({"a", "b", "c"}, {});
    CHECK(medians(free3, 0, 1, 2).empty());
    CHECK(!is_median_pretree(free3));

    Pretree l = line(3);
    CHECK(medians(l, l.point("p0"), l.point("p1"), l.point("p2")) == VSet{l.point("p1")});
}

TEST_CASE("realize a line gives a path") {
    Pretree l = line(4);
    RealizedTree t = realize(l);
    CHECK(t.node_names.size() == 4);
    CHECK(t.edges.size() == 3);
    for (int v = 0; v < 4; ++v) CHECK(t.degree(v) <= 2);
    CHECK(t.tree_between(t.point_to_node[1], t.point_to_node[2], t.point_to_node[3]));
}

TEST_CASE("realize three incomparable points adds one median") {
    Pretree free3({"a", "b", "c"}, {});
    RealizedTree t = realize(free3);
    REQUIRE(t.node_names.size() == 4);
    CHECK(t.median_triple[3].has_value());
    CHECK(t.node_names[3] == "m(a,b,c)");
    CHECK(t.degree(3) == 3);
    for (int v = 0; v < 3; ++v) CHECK(t.degree(v) == 1);
}

TEST_CASE("median completion: idempotent, logs the defining triple") {
    Pretree free3({"a", "b", "c"}, {});
    auto res = median_completion(free3);
    REQUIRE(res.added.size() == 1);
    CHECK(res.added[0].first == "m(a,b,c)");
    CHECK(is_median_pretree(res.completed));
    auto again = median_completion(res.completed);
    CHECK(again.added.empty());
    CHECK(again.completed.n() == res.completed.n());

    Pretree s = star3();
    auto rs = median_completion(s);
    CHECK(rs.added.empty());
}

TEST_CASE("median completion: two 3-stars joined by a line add nothing") {
    // c1 with leaves a,b joined to c2 with leaves d,e
    std::vector<std::string> names{"c1", "c2", "a", "b", "d", "e"};
    std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}};
    VSet all{0, 1, 2, 3, 4, 5};
    Pretree p = pretree_from_tree(names, edges, all);
    CHECK(is_median_pretree(p));
    CHECK(median_completion(p).added.empty());
}

TEST_CASE("quotient examples") {
    Pretree l = line(6);
    SUBCASE("singleton blocks reproduce the pretree") {
        ConvexPartition part;
        for (int i = 0; i < 6; ++i) part.blocks.push_back({i});
        Pretree q = quotient(l, part);
        CHECK(q.n() == 6);
        CHECK(q.relation() == l.relation());
    }
    SUBCASE("6-line to 3-line") {
        ConvexPartition part{{{0, 1}, {2}, {3, 4, 5}}};
        Pretree q = quotient(l, part);
        CHECK(q.n() == 3);
        CHECK(q.is_between(q.point("p0"), q.point("p2"), q.point("p3")));
    }
    SUBCASE("one block collapses everything") {
        ConvexPartition part{{{0, 1, 2, 3, 4, 5}}};
        Pretree q = quotient(l, part);
        CHECK(q.n() == 1);
    }
    SUBCASE("non-convex block is rejected") {
        ConvexPartition part{{{0, 2}, {1}, {3, 4, 5}}};
        CHECK_THROWS_WITH_AS(quotient(l, part), doctest::Contains("NonConvexBlock"), Error);
    }
}

TEST_CASE("insert_linear examples") {
    SUBCASE("two points into a 2-point pretree give a 4-line") {
        Pretree p({"x", "y"}, {});
        LinearInsertion ins{p.point("x"), p.point("y"), {"j1", "j2"}};
        Pretree r = insert_linear(p, {ins});
        CHECK(r.n() == 4);
        CHECK(r.is_between(r.point("x"), r.point("j1"), r.point("j2")));
        CHECK(r.is_between(r.point("x"), r.point("j1"), r.point("y")));
        CHECK(r.is_between(r.point("j1"), r.point("j2"), r.point("y")));
        CHECK(!r.is_between(r.point("j1"), r.point("x"), r.point("j2")));
        RealizedTree t = realize(r);
        CHECK(t.node_names.size() == 4);
        CHECK(t.edges.size() == 3);
    }
    SUBCASE("empty insertion list is the identity") {
        Pretree s = star3();
        Pretree r = insert_linear(s, {});
        CHECK(r.relation() == s.relation());
    }
    SUBCASE("one point into a star arm subdivides it") {
        Pretree s = star3();
        LinearInsertion ins{s.point("c"), s.point("l1"), {"j"}};
        Pretree r = insert_linear(s, {ins});
        CHECK(r.n() == 5);
        CHECK(r.is_between(r.point("c"), r.point("j"), r.point("l1")));
        CHECK(r.is_between(r.point("l2"), r.point("j"), r.point("l1")));
        CHECK(r.is_between(r.point("l2"), r.point("c"), r.point("j")));
        RealizedTree t = realize(r);
        CHECK(t.node_names.size() == 5);
    }
    SUBCASE("non-adjacent pair is rejected") {
        Pretree l = line(3);
        LinearInsertion ins{l.point("p0"), l.point("p2"), {"j"}};
        CHECK_THROWS_WITH_AS(insert_linear(l, {ins}), doctest::Contains("NotAdjacent"), Error);
    }
}

TEST_CASE("maximal linear subsets and dedekind gaps") {
    SUBCASE("isolated line has no gaps") {
        Pretree l = line(4);
        auto ls = maximal_linear_subsets(l);
        REQUIRE(ls.size() == 1);
        CHECK(dedekind_gaps(l, ls[0]).empty());
    }
    SUBCASE("line with a side branch has a gap at the branch point") {
        // a - x - b with s hanging at x
        std::vector<std::string> names{"a", "x", "b", "s"};
        std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {1, 3}};
        Pretree p = pretree_from_tree(names, edges, {0, 1, 2, 3});
        auto ls = maximal_linear_subsets(p);
        CHECK(ls.size() == 3);
        // L = {a,x,b}
        VSet l_axb = vset_of({p.point("a"), p.point("x"), p.point("b")});
        auto gaps = dedekind_gaps(p, l_axb);
        REQUIRE(!gaps.empty());
        for (auto& gp : gaps) CHECK(gp.at == p.point("x"));
    }
    SUBCASE("star center is a gap on every maximal line") {
        Pretree s = star3();
        auto ls = maximal_linear_subsets(s);
        REQUIRE(ls.size() == 3);
        for (auto& l : ls) {
            auto gaps = dedekind_gaps(s, l);
            REQUIRE(!gaps.empty());
            for (auto& gp : gaps) CHECK(gp.at == s.point("c"));
        }
    }
}

TEST_CASE("property: random tree pretrees survive quotient/insert/completion/realize") {
    Rng rng(0xC0FFEEu);
    int checked = 0;
    for (int it = 0; it < 200; ++it) {
        auto [names, edges] = random_tree(rng, rng.range(4, 12));
        int n = static_cast<int>(names.size());
        // random subset of nodes (at least 3) as the pretree points
        VSet pts;
        for (int v = 0; v < n; ++v)
            if (rng.below(100) < 70) pts.push_back(v);
        if (pts.size() < 3) continue;
        Pretree p = pretree_from_tree(names, edges, pts);
        REQUIRE(check_axioms(p).empty());

        // realize round-trips betweenness (asserted internally too)
        RealizedTree t = realize(p);
        for (int x = 0; x < p.n(); ++x)
            for (int y = 0; y < p.n(); ++y)
                for (int z = 0; z < p.n(); ++z) {
                    if (x == y || y == z || x == z) continue;
                    CHECK(p.is_between(x, y, z) ==
                          t.tree_between(t.point_to_node[x], t.point_to_node[y], t.point_to_node[z]));
                }

        // completion is idempotent
        auto comp = median_completion(p);
        CHECK(median_completion(comp.completed).added.empty());

        // random convex partition from tree-connected chunks
        {
            int parts = rng.range(1, std::max(1, p.n() / 2));
            std::vector<VSet> blocks;
            VSet rest;
            for (int i = 0; i < p.n(); ++i) rest.push_back(i);
            for (int b = 0; b + 1 < parts && rest.size() > 1; ++b) {
                // grow a convex block greedily from a random seed
                int seed_pt = rest[rng.below(rest.size())];
                VSet block{seed_pt};
                for (int grow = rng.range(0, 2); grow > 0; --grow) {
                    VSet cands = vset_diff(rest, block);
                    if (cands.empty()) break;
                    int c = cands[rng.below(cands.size())];
                    VSet test = vset_union(block, {c});
                    // convex closure inside rest
                    bool ok = true;
                    VSet closure = test;
                    for (int x : test)
                        for (int y : test) closure = vset_union(closure, p.open_interval(x, y));
                    if (!vset_subset(closure, rest)) ok = false;
                    if (ok) block = closure;
                }
                blocks.push_back(block);
                rest = vset_diff(rest, block);
            }
            if (!rest.empty()) blocks.push_back(rest);
            // rest may be non-convex; only quotient when it is
            bool rest_convex = true;
            for (int x : blocks.back())
                for (int y : blocks.back())
                    if (!vset_subset(p.open_interval(x, y), blocks.back())) rest_convex = false;
            if (rest_convex) {
                Pretree q = quotient(p, ConvexPartition{blocks});
                CHECK(check_axioms(q).empty());
                ++checked;
            }
        }

        // insertion at a random adjacent pair (edge-adjacent in the realization)
        {
            std::vector<std::pair<int, int>> adjacent;
            for (int x = 0; x < p.n(); ++x)
                for (int y = x + 1; y < p.n(); ++y)
                    if (p.open_interval(x, y).empty() &&
                        t.path(t.point_to_node[x], t.point_to_node[y]).size() == 2)
                        adjacent.emplace_back(x, y);
            if (!adjacent.empty()) {
                auto [a, b] = adjacent[rng.below(adjacent.size())];
                int jn = rng.range(1, 3);
                std::vector<std::string> js;
                for (int i = 0; i < jn; ++i) js.push_back("new" + std::to_string(i));
                Pretree r = insert_linear(p, {LinearInsertion{a, b, js}});
                CHECK(check_axioms(r).empty());
                CHECK(r.n() == p.n() + jn);
            }
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("pretree json round trip") {
    Pretree s = star3();
    Pretree r = Pretree::from_json_text(s.to_json_text());
    CHECK(r.relation() == s.relation());
    CHECK(r.point_names() == s.point_names());
}
