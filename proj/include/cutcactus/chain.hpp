#pragma once
#include <optional>

#include "cutcactus/wheels.hpp"

namespace cutcactus {

// Linearly ordered non-crossing cuts A_1..A_k with the pieces M, N_1..N_{k-1},
// O. Pieces are closed (carry their boundary cut vertices); each N_i is the
// closure of the edges lying strictly between A_i and A_{i+1}.
struct CutChain {
    std::vector<Cut> cuts;
    VSet piece_m;
    std::vector<VSet> middles;
    VSet piece_o;
};

struct ThickBridge {
    int i, k, j; // 1-based middle-piece indices, i <= k < j
};

struct BigtitsWitness {
    VSet q, q1, q2;
    int separating_cut_index; // 1-based index into chain.cuts
    ThickBridge bridge;
};

// (C∩D, B∪E) for decompositions (B,C), (D,E) by one cut; NoRefinement when
// C∩D ⊆ A.
Decomposition refine_decomposition(const Graph& g, const Decomposition& d1, const Decomposition& d2);

// Reduced intersection C1∩C2 (closure of the strictly-between edges); asserts
// the L:middle conclusions. d_i decomposes by a_i with the other cut inside
// the returned side.
VSet middle_piece(const Graph& g, const Cut& a1, const Cut& a2, const Decomposition& d1,
                  const Decomposition& d2, const WheelAnalysis& wheels);

// True iff every decomposition by either endpoint keeps s and the other
// endpoint on one side (the Def-of-between, evaluated exhaustively).
bool is_between(const Graph& g, const VSet& s, const Cut& a1, const Cut& a2);

// Orders the cuts into a chain and builds the pieces; NotLinear / WheelViolation.
CutChain build_chain(const Graph& g, std::vector<Cut> cuts, const WheelAnalysis& wheels);

// Least (i,j,k) with |(N_i∪..∪N_k) ∩ (N_{k+1}∪..∪N_j)| >= 2.
std::optional<ThickBridge> find_thick_bridge(const CutChain& chain);

// The 8-cut theorem: a thick continuum strictly between A_1 and A_k, verified
// between per the definition; WitnessNotFound aborts loudly.
BigtitsWitness bigtits_witness(const Graph& g, const CutChain& chain);

} // namespace cutcactus
