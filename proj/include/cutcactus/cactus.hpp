#pragma once
#include "cutcactus/pretree.hpp"
#include "cutcactus/wheels.hpp"

namespace cutcactus {

struct CactusElement {
    enum class Kind { IsolatedCut, MaximalWheel };
    Kind kind;
    Cut cut;     // when IsolatedCut
    Wheel wheel; // when MaximalWheel
    std::string name;
    const VSet& carrier() const { return kind == Kind::IsolatedCut ? cut.members : wheel.support; }
};

// The cactus pretree (isolated cuts + maximal wheels) with its canonical tree
// realization and the vertex sets its nodes stand for.
struct CactusTree {
    Graph host;
    int thickness = 0;
    std::vector<Cut> all_cuts;
    std::vector<CactusElement> elements; // sorted by name
    Pretree pretree;                     // points = element names (same order)
    RealizedTree realized;
    std::vector<VSet> node_subsets; // per realized node

    int element_of_node(int node) const; // -1 for median nodes
    int node_of_element(int element) const;
};

CactusTree build_cactus(const Graph& g, const EnumOptions& opts = {});

// Element betweenness per the cactus rule (exposed for equivariance tests).
bool element_between(const Graph& g, const CactusElement& x, const CactusElement& y,
                     const CactusElement& z);

// §4 median set of a median node: intersection of the sides S_{x,A,B}.
VSet median_set(const CactusTree& t, int node);

// Vertex subset corresponding to a connected node set K.
VSet subtree_to_subset(const CactusTree& t, const std::vector<int>& nodes);

struct ElementGap {
    VSet side;
    bool terminal;
};
std::vector<ElementGap> gaps_of(const CactusTree& t, int element);

// component (node set of realized tree minus the element's node) -> gap index
struct GapInjection {
    std::vector<std::pair<std::vector<int>, int>> component_to_gap;
};
GapInjection gap_components_injection(const CactusTree& t, int element);

} // namespace cutcactus
