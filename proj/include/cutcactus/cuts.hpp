#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "cutcactus/graph.hpp"

namespace cutcactus {

struct Cut {
    VSet members; // sorted
    bool operator==(const Cut& o) const { return members == o.members; }
    bool operator<(const Cut& o) const { return members < o.members; }
};

// Decomposition sides are closed: both include the cut. side_m carries the
// lex-least non-cut vertex.
struct Decomposition {
    Cut cut;
    VSet side_m;
    VSet side_n;
};

struct EnumOptions {
    std::uint64_t budget = 10'000'000; // candidate subsets for the brute scan
    bool use_fast = false;             // max-flow route instead of the scan
};

// Least m such that some m-set disconnects; nullopt when nothing does.
std::optional<int> thickness(const Graph& g, const EnumOptions& opts = {});

// All minimum vertex cuts in lexicographic order of sorted members.
std::vector<Cut> enumerate_min_cuts(const Graph& g, const EnumOptions& opts = {});

// The two routes, exposed separately so they can be compared as an oracle pair.
std::optional<int> thickness_brute(const Graph& g, std::uint64_t budget);
std::optional<int> thickness_flow(const Graph& g);
std::vector<Cut> enumerate_min_cuts_brute(const Graph& g, std::uint64_t budget);
std::vector<Cut> enumerate_min_cuts_flow(const Graph& g);

// True iff s minus the cut meets at least two components of g - cut.
bool separates(const Graph& g, const Cut& a, const VSet& s);
bool crosses(const Graph& g, const Cut& a, const Cut& b);

// All 2^(k-1)-1 two-sided groupings of the components of g - cut, degenerate
// (singleton-continuum) splits omitted. Order: by sorted side_m.
std::vector<Decomposition> decompositions_by(const Graph& g, const Cut& cut);

// Closed side of some decomposition by `cut` containing `what` entirely;
// nullopt when every grouping splits `what`.
std::optional<VSet> side_containing(const Graph& g, const Cut& cut, const VSet& what);

Decomposition make_decomposition(const Graph& g, const Cut& cut, const VSet& side_m_components);

// Checked constructor used by tests and ingestion paths.
Cut make_cut(const Graph& g, const VSet& members, int expected_thickness);

} // namespace cutcactus
