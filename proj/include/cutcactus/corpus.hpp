#pragma once
#include <cstdint>
#include <map>
#include <string>

#include "cutcactus/graph.hpp"

namespace cutcactus {

// Deterministic graph families used by tests, the acceptance suite and the
// `corpus` subcommand. All randomness flows from the explicit seed.
namespace corpus {

Graph cycle(int n);
Graph complete(int n);
// hub + rim cycle, m = 3, wheel center {hub}
Graph wheel_graph(int rim);
// two adjacent hubs + rim cycle, m = 4, wheel center = both hubs
Graph double_wheel(int rim);
// K_{2,strands} with `sub` extra subdivision vertices per strand (0 or 1)
Graph suspension(int strands, int sub);
// generalized theta: `strands` internally disjoint u-v paths with `inner`
// interior vertices each (inner >= 2 and strands >= 3 yields the
// overlapping-wheel MalformedWheel fixture)
Graph theta(int strands, int inner);
// chain of cliques glued on m-sets: `blocks` cliques, each with `privates`
// private vertices; min cuts = the blocks-1 interface sets
Graph clique_chain(int blocks, int m, int privates);
// m=2 chain where all interface pairs share one center vertex
Graph spider_chain(int blocks, int privates);
// cycles glued in a row on single edges: one wheel per cycle
Graph cycle_chain(const std::vector<int>& lengths);
// cyclic clique chain: m = 4 wheel with half-cut pairs (q = 2)
Graph cyclic_ladder(int blocks, int privates);
// three m=2 clique-chain arms glued to a central K5
Graph tripod(int arm_blocks, int privates);
// the 5-disk 4-thick example: K6 end disks, K4 middle disks
Graph not4();
// K_{p,q}; K33 is the unfaithful-model fixture (MalformedWheel)
Graph complete_bipartite(int p, int q);

// Family dispatch for the CLI; params are name=value pairs.
Graph generate(const std::string& family, const std::map<std::string, std::string>& params);

// Everything criterion 1/2 runs over, with family metadata baked in.
struct CorpusEntry {
    std::string label;
    Graph graph;
    int expected_thickness;
    int expected_wheels; // -1 = unchecked
};
std::vector<CorpusEntry> standard_corpus();

} // namespace corpus

// Tiny deterministic RNG used by the property suites (splitmix64). Stable
// across platforms, unlike <random> distributions.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
    int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
};

} // namespace cutcactus
