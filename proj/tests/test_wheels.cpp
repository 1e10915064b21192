#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cutcactus/corpus.hpp"
#include "cutcactus/errors.hpp"
#include "cutcactus/wheels.hpp"

using namespace cutcactus;

namespace {

WheelAnalysis analyze(const Graph& g) {
    EnumOptions fast;
    fast.use_fast = true;
    return detect_wheels(g, enumerate_min_cuts(g, fast));
}

} // namespace

TEST_CASE("C6 wheel: support 0..5, empty center, q=1, n=6") {
    Graph g = corpus::cycle(6);
    auto wa = analyze(g);
    REQUIRE(wa.wheels.size() == 1);
    const Wheel& w = wa.wheels[0];
    CHECK(w.support == g.all_vertices());
    CHECK(w.center.empty());
    CHECK(w.pieces.size() == 6);
    CHECK(w.half_cuts.size() == 6);
    CHECK(w.half_cuts[0].size() == 1);
    CHECK(w.paper_q() == 1);
    CHECK(wa.isolated_cuts.empty());
    CHECK(w.member_cuts.size() == 9);
    // every piece is a closed arc {i, i+1}
    for (auto& p : w.pieces) CHECK(p.size() == 2);
}

TEST_CASE("wheel graph W6: center is the hub, m = 2q - |I| = 3") {
    Graph g = corpus::wheel_graph(6);
    auto wa = analyze(g);
    REQUIRE(wa.wheels.size() == 1);
    const Wheel& w = wa.wheels[0];
    CHECK(w.center == VSet{g.vertex("hub")});
    CHECK(w.pieces.size() == 6);
    CHECK(w.half_cuts[0].size() == 1);
    CHECK(2 * w.paper_q() - static_cast<int>(w.center.size()) == 3);
}

TEST_CASE("double wheel: two-hub center, m = 4") {
    Graph g = corpus::double_wheel(6);
    auto wa = analyze(g);
    REQUIRE(wa.wheels.size() == 1);
    const Wheel& w = wa.wheels[0];
    CHECK(w.center == VSet{g.vertex("hubA"), g.vertex("hubB")});
    CHECK(2 * w.paper_q() - static_cast<int>(w.center.size()) == 4);
}

TEST_CASE("cyclic ladder: half-cut pairs (q=2), adjacent unions are real cuts") {
    Graph g = corpus::cyclic_ladder(5, 1);
    auto wa = analyze(g);
    REQUIRE(wa.wheels.size() == 1);
    const Wheel& w = wa.wheels[0];
    CHECK(w.half_cuts[0].size() == 2);
    CHECK(w.center.empty());
    CHECK(w.pieces.size() == 5);
    CHECK(w.member_cuts.size() == 5);
    CHECK(wa.isolated_cuts.size() == 5);
    CHECK(wa.degenerate_union_pairs == 0); // block privates make every union visible
}

TEST_CASE("Example-not4 has no wheels") {
    Graph g = corpus::not4();
    auto wa = analyze(g);
    CHECK(wa.wheels.empty());
    CHECK(wa.isolated_cuts.size() == 4);
}

TEST_CASE("no crossing pair means no wheels") {
    Graph g = corpus::clique_chain(5, 2, 1);
    auto wa = analyze(g);
    CHECK(wa.wheels.empty());
    CHECK(wa.isolated_cuts.size() == 4);
}

TEST_CASE("K33 is reported as an unfaithful model") {
    Graph g = corpus::complete_bipartite(3, 3);
    auto cuts = enumerate_min_cuts(g);
    REQUIRE(cuts.size() == 2);
    CHECK(crosses(g, cuts[0], cuts[1]));
    CHECK_THROWS_WITH_AS(detect_wheels(g, cuts), doctest::Contains("MalformedWheel"), Error);
}

TEST_CASE("long-strand theta: one wheel per strand, the rest as one piece") {
    Graph g = corpus::theta(3, 4);
    auto wa = analyze(g);
    CHECK(wa.wheels.size() == 3);
    CHECK(wa.isolated_cuts.size() == 1); // {u,w}
    for (auto& w : wa.wheels) {
        CHECK(w.pieces.size() == 6); // 5 strand arcs + the merged rest
        CHECK(w.center.empty());
        CHECK(w.paper_q() == 1);
    }
}

TEST_CASE("cycle chain: one wheel per cycle, glue edges isolated") {
    Graph g = corpus::cycle_chain({6, 6});
    auto wa = analyze(g);
    REQUIRE(wa.wheels.size() == 2);
    CHECK(wa.isolated_cuts.size() == 1);
    CHECK(!vset_subset(wa.wheels[0].support, wa.wheels[1].support));
    CHECK(!is_subwheel(g, wa.wheels[0], wa.wheels[1]));
    CHECK(!is_subwheel(g, wa.wheels[1], wa.wheels[0]));
}

TEST_CASE("sub-wheel of C8 from a restricted cut family") {
    Graph g = corpus::cycle(8);
    auto wa = analyze(g);
    REQUIRE(wa.wheels.size() == 1);
    std::vector<Cut> sub{Cut{vset_of({0, 4})}, Cut{vset_of({2, 6})}};
    Wheel w = build_wheel(g, sub);
    CHECK(w.pieces.size() == 4);
    CHECK(w.half_cuts[0].size() == 1);
    CHECK(is_subwheel(g, w, wa.wheels[0]));
    CHECK(is_subwheel(g, w, w));
    CHECK(!is_subwheel(g, wa.wheels[0], w));
    CHECK(verify_half_cut_unions(g, w, enumerate_min_cuts(g)) == 0);
}

TEST_CASE("wheel arithmetic and member-cut facts across the corpus") {
    for (auto& entry : corpus::standard_corpus()) {
        EnumOptions fast;
        fast.use_fast = true;
        auto cuts = enumerate_min_cuts(entry.graph, fast);
        auto wa = detect_wheels(entry.graph, cuts);
        if (entry.expected_wheels >= 0) CHECK(static_cast<int>(wa.wheels.size()) == entry.expected_wheels);
        CHECK(wa.wheels.size() * 2 + 0 >= 0);
        std::size_t in_wheels = 0;
        for (auto& w : wa.wheels) {
            in_wheels += w.member_cuts.size();
            CHECK(2 * w.paper_q() - static_cast<int>(w.center.size()) == entry.expected_thickness);
            for (auto& h : w.half_cuts) CHECK(h.size() == w.half_cuts[0].size());
            CHECK(w.pieces.size() > 3);
        }
        CHECK(in_wheels + wa.isolated_cuts.size() == cuts.size());
    }
}

TEST_CASE("gap sides and adjacent gaps") {
    Graph g = corpus::cycle(6);
    auto wa = analyze(g);
    auto gaps = gap_sides_of_wheel(wa.wheels[0]);
    CHECK(gaps.size() == 6);
    auto pairs = adjacent_gaps(g, wa.wheels[0]);
    CHECK(pairs.size() == 6);

    Graph w6 = corpus::wheel_graph(6);
    auto ww = analyze(w6);
    auto p6 = adjacent_gaps(w6, ww.wheels[0]);
    CHECK(p6.size() == 6);
    for (auto& [p, q] : p6) CHECK(vset_intersect(p, q).size() >= 2); // m = 3 regime

    Graph n4 = corpus::not4();
    Cut a2{vset_of({n4.vertex("a3"), n4.vertex("a4"), n4.vertex("x"), n4.vertex("b1")})};
    auto sides = gap_sides_of_cut(n4, a2);
    CHECK(sides.size() == 2);
}
