#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cutcactus/cactus.hpp"
#include "cutcactus/corpus.hpp"
#include "cutcactus/errors.hpp"

using namespace cutcactus;

namespace {

EnumOptions fast() {
    EnumOptions o;
    o.use_fast = true;
    return o;
}

VSet named(const Graph& g, std::initializer_list<const char*> names) {
    VSet s;
    for (auto* n : names) s.push_back(g.vertex(n));
    vset_normalize(s);
    return s;
}

} // namespace

TEST_CASE("not4 cactus is the path A1-A2-A3-A4") {
    CactusTree t = build_cactus(corpus::not4(), fast());
    REQUIRE(t.elements.size() == 4);
    for (auto& e : t.elements) CHECK(e.kind == CactusElement::Kind::IsolatedCut);
    CHECK(t.realized.node_names.size() == 4);
    CHECK(t.realized.edges.size() == 3);
    // linear order: A1 A2 A3 A4 by construction of names
    int a1 = t.node_of_element(0), a2 = t.node_of_element(1), a3 = t.node_of_element(2),
        a4 = t.node_of_element(3);
    CHECK(t.realized.tree_between(a1, a2, a3));
    CHECK(t.realized.tree_between(a2, a3, a4));
    CHECK(t.realized.tree_between(a1, a2, a4));
    CHECK(!t.realized.tree_between(a2, a1, a4));
    CHECK(t.realized.degree(a1) == 1);
    CHECK(t.realized.degree(a4) == 1);
}

TEST_CASE("C6 cactus is a single wheel node") {
    CactusTree t = build_cactus(corpus::cycle(6), fast());
    REQUIRE(t.elements.size() == 1);
    CHECK(t.elements[0].kind == CactusElement::Kind::MaximalWheel);
    CHECK(t.realized.node_names.size() == 1);
    CHECK(t.node_subsets[0] == t.host.all_vertices());
}

TEST_CASE("clique chain cactus is a path of isolated cuts, gaps as expected") {
    CactusTree t = build_cactus(corpus::clique_chain(4, 2, 1), fast());
    REQUIRE(t.elements.size() == 3);
    CHECK(t.realized.edges.size() == 2);
    // end cut: both gaps, one terminal (outer block) and one nonterminal
    auto order = [&] {
        std::vector<int> idx(3);
        for (int i = 0; i < 3; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](int a, int b) {
            return t.realized.degree(t.node_of_element(a)) < t.realized.degree(t.node_of_element(b));
        });
        return idx;
    }();
    int end_elem = order[0];
    auto gaps = gaps_of(t, end_elem);
    REQUIRE(gaps.size() == 2);
    int terminal = 0, nonterminal = 0;
    for (auto& gp : gaps) (gp.terminal ? terminal : nonterminal)++;
    CHECK(terminal == 1);
    CHECK(nonterminal == 1);
    int mid_elem = order[2];
    auto mid_gaps = gaps_of(t, mid_elem);
    REQUIRE(mid_gaps.size() == 2);
    for (auto& gp : mid_gaps) CHECK(gp.terminal); // single cut on each side: no B,C pair
}

TEST_CASE("not4 gaps: the side holding A3,A4 is nonterminal") {
    CactusTree t = build_cactus(corpus::not4(), fast());
    // element 1 is A2 = cut[a3,a4,b1,x] by name order
    CHECK(t.elements[1].name == "cut[a3,a4,b1,x]");
    auto gaps = gaps_of(t, 1);
    REQUIRE(gaps.size() == 2);
    const Graph& g = t.host;
    for (auto& gp : gaps) {
        bool holds_a3 = vset_subset(named(g, {"a4", "y", "b1", "b2"}), gp.side);
        CHECK(gp.terminal == !holds_a3);
    }
    auto inj = gap_components_injection(t, 1);
    REQUIRE(inj.component_to_gap.size() == 2);
    CHECK(inj.component_to_gap[0].second != inj.component_to_gap[1].second);
}

TEST_CASE("suspension cactus is a star at the apex cut") {
    CactusTree t = build_cactus(corpus::suspension(4, 1), fast());
    REQUIRE(t.elements.size() == 5); // 4 strand wheels + {u,w}
    CHECK(t.realized.node_names.size() == 5);
    int center = -1;
    for (std::size_t e = 0; e < t.elements.size(); ++e)
        if (t.elements[e].kind == CactusElement::Kind::IsolatedCut) center = static_cast<int>(e);
    REQUIRE(center >= 0);
    CHECK(t.realized.degree(t.node_of_element(center)) == 4);
    auto inj = gap_components_injection(t, center);
    CHECK(inj.component_to_gap.size() == 4);
}

TEST_CASE("cyclic ladder cactus is a star at the wheel") {
    CactusTree t = build_cactus(corpus::cyclic_ladder(5, 1), fast());
    REQUIRE(t.elements.size() == 6); // the wheel + 5 adjacent-interface cuts
    int wheel = -1;
    for (std::size_t e = 0; e < t.elements.size(); ++e)
        if (t.elements[e].kind == CactusElement::Kind::MaximalWheel) wheel = static_cast<int>(e);
    REQUIRE(wheel >= 0);
    CHECK(t.realized.degree(t.node_of_element(wheel)) == 5);
    auto inj = gap_components_injection(t, wheel);
    CHECK(inj.component_to_gap.size() == 5);
}

TEST_CASE("cycle chain cactus: wheel - glue cut - wheel") {
    CactusTree t = build_cactus(corpus::cycle_chain({6, 6}), fast());
    REQUIRE(t.elements.size() == 3);
    int cutelem = -1;
    for (std::size_t e = 0; e < t.elements.size(); ++e)
        if (t.elements[e].kind == CactusElement::Kind::IsolatedCut) cutelem = static_cast<int>(e);
    REQUIRE(cutelem >= 0);
    CHECK(t.realized.degree(t.node_of_element(cutelem)) == 2);
}

TEST_CASE("tripod: median node appears and its median set is the central clique") {
    CactusTree t = build_cactus(corpus::tripod(1, 1), fast());
    REQUIRE(t.elements.size() == 6); // 3 anchors + 3 cap interfaces
    REQUIRE(t.realized.node_names.size() == 7);
    int med = -1;
    for (std::size_t v = 0; v < t.realized.node_names.size(); ++v)
        if (t.realized.is_median_node(static_cast<int>(v))) med = static_cast<int>(v);
    REQUIRE(med >= 0);
    CHECK(t.realized.degree(med) == 3);
    VSet hub = named(t.host, {"h0", "h1", "h2", "h3", "h4"});
    CHECK(median_set(t, med) == hub);
    CHECK(t.node_subsets[med] == hub);
}

TEST_CASE("subtree_to_subset") {
    CactusTree t = build_cactus(corpus::not4(), fast());
    const Graph& g = t.host;
    SUBCASE("single cut node gives the cut members") {
        int a2 = t.node_of_element(1);
        CHECK(subtree_to_subset(t, {a2}) == t.elements[1].cut.members);
    }
    SUBCASE("whole tree gives every vertex") {
        std::vector<int> all;
        for (std::size_t v = 0; v < t.realized.node_names.size(); ++v)
            all.push_back(static_cast<int>(v));
        CHECK(subtree_to_subset(t, all) == g.all_vertices());
    }
    SUBCASE("the arc [A2,A3] is disk D3 plus its boundary cuts") {
        int a2 = t.node_of_element(1), a3 = t.node_of_element(2);
        VSet expect = vset_union(named(g, {"a3", "x", "y", "b2"}),
                                 vset_union(t.elements[1].cut.members, t.elements[2].cut.members));
        CHECK(subtree_to_subset(t, {a2, a3}) == expect);
    }
    SUBCASE("monotone in K") {
        int a2 = t.node_of_element(1), a3 = t.node_of_element(2);
        VSet small = subtree_to_subset(t, {a2});
        VSet large = subtree_to_subset(t, {a2, a3});
        CHECK(vset_subset(small, large));
    }
    SUBCASE("disconnected node sets are rejected") {
        int a1 = t.node_of_element(0), a3 = t.node_of_element(2);
        CHECK_THROWS_AS(subtree_to_subset(t, {a1, a3}), Error);
    }
}

TEST_CASE("betweenness coherence: pretree equals realized tree on elements") {
    for (const char* which : {"not4", "chain", "suspension", "cyclechain"}) {
        Graph g = std::string(which) == "not4"         ? corpus::not4()
                  : std::string(which) == "chain"      ? corpus::clique_chain(5, 3, 1)
                  : std::string(which) == "suspension" ? corpus::suspension(3, 1)
                                                       : corpus::cycle_chain({5, 5});
        CactusTree t = build_cactus(g, fast());
        const int n = static_cast<int>(t.elements.size());
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    if (x == y || y == z || x == z) continue;
                    bool sep = element_between(g, t.elements[x], t.elements[y], t.elements[z]);
                    bool tree = t.realized.tree_between(t.node_of_element(x), t.node_of_element(y),
                                                        t.node_of_element(z));
                    CHECK(sep == tree);
                }
    }
}

TEST_CASE("subsetMap respects separation") {
    CactusTree t = build_cactus(corpus::clique_chain(4, 2, 1), fast());
    // if y between x,z then the x/z subsets meet only inside y's set
    const int n = static_cast<int>(t.elements.size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (x == y || y == z || x == z) continue;
                if (!element_between(t.host, t.elements[x], t.elements[y], t.elements[z])) continue;
                VSet common = vset_intersect(t.elements[x].carrier(), t.elements[z].carrier());
                CHECK(vset_subset(common, t.elements[y].carrier()));
            }
}
