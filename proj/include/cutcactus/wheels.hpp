#pragma once
#include <optional>
#include <string>
#include <vector>

#include "cutcactus/cuts.hpp"

namespace cutcactus {

// Maximal crossing-closed cut family with its cyclic decomposition. Half-cuts
// are stored without the center; the paper's half-cut is halfCut ∪ center, so
// its size q satisfies m = 2q - |center| = 2*|halfCut| + |center|.
struct Wheel {
    VSet support;
    std::vector<Cut> member_cuts;
    VSet center;
    std::vector<VSet> half_cuts; // cyclic order
    std::vector<VSet> pieces;    // cyclic: pieces[i] between half_cuts[i], half_cuts[i+1]
    int paper_q() const { return static_cast<int>(half_cuts[0].size() + center.size()); }
};

struct WheelAnalysis {
    std::vector<Wheel> wheels;
    std::vector<Cut> isolated_cuts;
    // half-cut pairs whose union has no graph-visible separation (shared piece
    // without interior); reported, not errors
    int degenerate_union_pairs = 0;
};

// One wheel per crossing-graph component of size >= 2; Def-wheel conditions
// verified post hoc (MalformedWheel on failure).
WheelAnalysis detect_wheels(const Graph& g, const std::vector<Cut>& cuts);

// Wheel structure for an explicit crossing-closed cut subset (sub-wheel tool).
Wheel build_wheel(const Graph& g, const std::vector<Cut>& members);

// Returns the count of degenerate (graph-invisible) pairs; throws on failure.
int verify_half_cut_unions(const Graph& g, const Wheel& w, const std::vector<Cut>& all_cuts);

// w.support ⊆ v.support; when true the sub-wheel facts are asserted.
bool is_subwheel(const Graph& g, const Wheel& w, const Wheel& v);

// Cyclically adjacent piece pairs; asserts |P ∩ Q| = q >= 2 when m >= 3.
std::vector<std::pair<VSet, VSet>> adjacent_gaps(const Graph& g, const Wheel& w);

// Gap sides without terminal flags (cactus layer adds those): for a wheel the
// decomposition pieces, for a cut the closed component sides.
std::vector<VSet> gap_sides_of_wheel(const Wheel& w);
std::vector<VSet> gap_sides_of_cut(const Graph& g, const Cut& c);

} // namespace cutcactus
