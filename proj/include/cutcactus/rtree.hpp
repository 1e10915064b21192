#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cutcactus/pretree.hpp"

namespace cutcactus {

// Open Z-parametrized arc between two tree vertices; marks accumulate toward
// end_b. Line-edge interiors contain no vertices.
struct LineEdge {
    std::string id;
    int end_a, end_b;
};

struct SymbolicRTree {
    std::vector<std::string> vertex_names;
    std::vector<std::pair<int, int>> plain_edges;
    std::vector<LineEdge> line_edges;
    // (vertex, line id): the vertex lies in the open interior of that arc.
    // Used to encode overlap/containment configurations the plain incidence
    // structure cannot produce.
    std::vector<std::pair<int, std::string>> interior_containment;

    int vertex(const std::string& name) const;
    const LineEdge& line(const std::string& id) const;
    bool contained(int vertex, const std::string& line_id) const;
    void validate() const; // incidence graph must be a tree

    static SymbolicRTree from_json_text(const std::string& text);
    std::string to_json_text() const;
};

struct LineImage {
    std::string to;
    bool flipped = false;
    int shift = 0;
};

// Partial homeomorphism: maps are defined on subsets (ball truncations of
// infinite actions act partially).
struct SymbolicHomeo {
    std::string name;
    std::map<int, int> vertex_map;
    std::map<std::string, LineImage> line_map;
};

void validate_homeo(const SymbolicRTree& t, const SymbolicHomeo& h);
SymbolicHomeo compose(const SymbolicRTree& t, const SymbolicHomeo& outer, const SymbolicHomeo& inner);

struct NestingWitness {
    bool nesting = false;
    std::vector<std::string> witness_lines; // self-mapped, unflipped, nonzero shift
};
NestingWitness is_nesting(const SymbolicRTree& t, const SymbolicHomeo& h);

// Maximal translated arcs of a nesting element; asserts the translation-
// interval facts (pairwise disjoint, fixed hull complement, colinear hulls).
std::vector<std::string> translation_intervals(const SymbolicRTree& t, const SymbolicHomeo& h);

struct NestingSubtree {
    VSet vertices;
    std::vector<std::string> line_ids;              // line edges inside the hull
    std::vector<std::pair<int, int>> plain_edges;   // plain edges inside the hull
};
NestingSubtree nesting_subtree(const SymbolicRTree& t, const SymbolicHomeo& h);

struct CommuteReport {
    int nested_pairs_checked = 0;
    int iterate_disjointness_checks = 0;
    int containment_checks = 0;
    int composite_nesting_checks = 0;
};
// Lemma-commute assertions over |n|,|k| <= range; NotCommuting / violations throw.
CommuteReport check_commuting_nesting(const SymbolicRTree& t, const SymbolicHomeo& g,
                                      const SymbolicHomeo& h, int range = 4);

struct CrossComponent {
    std::vector<std::string> line_ids; // sorted
    VSet endpoints;                    // closure minus the component
    VSet junctions;                    // interior vertices
    bool is_interval = false;
};
std::vector<CrossComponent> cross_components(const SymbolicRTree& t,
                                             const std::vector<SymbolicHomeo>& elements);

struct OverlapCheck {
    bool non_overlapping = true;
    std::string interval_a, interval_b; // offending pair when false
};
OverlapCheck check_non_overlap(const SymbolicRTree& t, const std::vector<SymbolicHomeo>& elements);

struct QuotientBundle {
    Pretree base;     // tree points + one marker per line edge
    Pretree quotient; // after collapsing cross components (Thm pretree-quotient)
    Pretree inserted; // with the v_{e,Q} points (Thm pre-insert)
    RealizedTree s;
    std::vector<CrossComponent> components;
    struct EndpointRecord {
        int component;
        int endpoint_vertex;
        int node_e; // S node of the block containing the endpoint
        int node_v; // S node of v_{e,Q}
    };
    std::vector<EndpointRecord> endpoint_records;
    std::vector<std::string> element_names;
    std::vector<std::map<int, int>> s_tables; // per element, partial S-node maps
    std::vector<std::string> provenance;      // per S node
};
QuotientBundle nonnesting_quotient(const SymbolicRTree& t, const std::vector<SymbolicHomeo>& elements);

struct QuotientContractReport {
    int elements_checked = 0;
    int stabilizer_pairs_checked = 0;
    int interval_components_collapsed = 0;
    bool collapsed_action_trivial = false;
};
QuotientContractReport verify_quotient_contracts(const SymbolicRTree& t, const QuotientBundle& q,
                                                 const std::vector<SymbolicHomeo>& elements);

// ---- fixtures ----------------------------------------------------------------

namespace fixtures {

struct RtreeCase {
    SymbolicRTree tree;
    std::vector<SymbolicHomeo> elements;
};

RtreeCase single_line(int power_range);     // one shifted line, elements g^k
RtreeCase two_line_colinear();              // one element shifting two arcs
RtreeCase shared_endpoint(int arms);        // arms shifted lines at one vertex
RtreeCase overlap();                        // encoded Def-overlap violation
RtreeCase commuting(int chain_half_length); // g inner shifts, h outer shift
// radius-r word-ball truncation of the free group's glued-interval action
RtreeCase f2_ball(int radius, int word_bound);

} // namespace fixtures

} // namespace cutcactus
