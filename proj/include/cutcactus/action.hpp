#pragma once
#include "cutcactus/cactus.hpp"

namespace cutcactus {

using Permutation = std::vector<int>; // perm[v] = image vertex

struct GroupAction {
    std::vector<std::pair<std::string, Permutation>> generators;
    int word_bound = 8;

    static GroupAction from_json_text(const std::string& text, const Graph& host);
    std::string to_json_text(const Graph& host) const;
};

// generators must be graph automorphisms; NotAutomorphism otherwise
void validate_action(const Graph& g, const GroupAction& a);

struct GroupElement {
    std::string word; // shortlex-least word; inverse letters carry a trailing '
    Permutation perm;
};

// Distinct permutations in the word ball, shortlex order, hash-consed.
std::vector<GroupElement> enumerate_ball(const Graph& g, const GroupAction& a);

// Induced node permutations on the cactus tree, one per generator; medians map
// by functoriality (mismatch aborts).
struct CactusAction {
    std::vector<std::pair<std::string, std::vector<int>>> generator_tables;
    std::vector<int> node_perm_of_word(const std::string& word) const;
};
CactusAction induce_on_cactus(const GroupAction& a, const CactusTree& t);

// Node permutation induced by an arbitrary automorphism (used by tests too).
std::vector<int> induce_node_perm(const Graph& g, const CactusTree& t, const Permutation& perm);

struct Classification {
    enum class Kind { Elliptic, Inversion, Hyperbolic } kind;
    VSet fixed_nodes;                // Elliptic
    std::pair<int, int> inverted_edge{-1, -1}; // Inversion
    std::vector<int> axis;           // Hyperbolic (unreachable for finite total actions)
};
Classification classify(const RealizedTree& tree, const std::vector<int>& node_perm);

// Least word g (shortlex) with gA ∩ A = ∅, within the ball; nullopt = bounded
// search exhausted, not a virtual-fixing certificate.
std::optional<GroupElement> neumann_search(const Graph& g, const GroupAction& a,
                                           const CactusTree& t, const VSet& node_set);

// Nodes whose ball-orbit stays within max_orbit (ball-relative evidence only).
VSet virtually_fixed_points(const Graph& g, const GroupAction& a, const CactusTree& t,
                            int max_orbit = 2);

} // namespace cutcactus
