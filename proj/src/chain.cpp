#include "cutcactus/chain.hpp"

#include <map>
#include <set>

#include "cutcactus/errors.hpp"

namespace cutcactus {

namespace {

Decomposition normalized(const Graph& g, const Cut& cut, VSet side_a, VSet side_b) {
    VSet open_a = vset_diff(side_a, cut.members);
    VSet open_b = vset_diff(side_b, cut.members);
    require(!open_a.empty() && !open_b.empty(), Errc::DegenerateComponent,
            "decomposition side is a singleton continuum");
    if (open_b.front() < open_a.front()) std::swap(side_a, side_b);
    require(vset_union(side_a, side_b) == g.all_vertices() &&
                vset_intersect(side_a, side_b) == cut.members,
            Errc::InternalError, "not a decomposition");
    require(g.is_connected_subset(side_a) && g.is_connected_subset(side_b), Errc::InternalError,
            "decomposition side not connected");
    return Decomposition{cut, side_a, side_b};
}

// components of G - cut that meet `marks` - cut
std::set<std::size_t> comp_indices(const std::vector<VSet>& comps, const VSet& marks, const Cut& cut) {
    VSet rest = vset_diff(marks, cut.members);
    std::set<std::size_t> idx;
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (!vset_disjoint(comps[i], rest)) idx.insert(i);
    return idx;
}

// b between a,c: some grouping of G-b's components has a on one side, c on the
// other, i.e. their component footprints are disjoint.
bool cut_between(const Graph& g, const Cut& b, const Cut& a, const Cut& c) {
    auto comps = g.components_without(b.members);
    auto ia = comp_indices(comps, a.members, b);
    auto ic = comp_indices(comps, c.members, b);
    if (ia.empty() || ic.empty()) return false; // a or c inside b: never strictly between
    for (auto x : ia)
        if (ic.count(x)) return false;
    return true;
}

// closure of the edges inside `closed_mid` lying in neither cut
VSet between_closure(const Graph& g, const VSet& closed_mid, const VSet& cut_a, const VSet& cut_b) {
    VSet out;
    for (auto [u, v] : g.edges()) {
        if (!vset_contains(closed_mid, u) || !vset_contains(closed_mid, v)) continue;
        if (vset_contains(cut_a, u) && vset_contains(cut_a, v)) continue;
        if (vset_contains(cut_b, u) && vset_contains(cut_b, v)) continue;
        out.push_back(u);
        out.push_back(v);
    }
    for (int v : vset_diff(vset_diff(closed_mid, cut_a), cut_b)) out.push_back(v);
    vset_normalize(out);
    return out;
}

void check_same_wheel(const Graph& g, const WheelAnalysis& wheels, const Cut& a, const Cut& b) {
    (void)g;
    for (auto& w : wheels.wheels) {
        bool has_a = false, has_b = false;
        for (auto& mc : w.member_cuts) {
            if (mc.members == a.members) has_a = true;
            if (mc.members == b.members) has_b = true;
        }
        require(!(has_a && has_b), Errc::WheelViolation, "both cuts lie in one maximal wheel");
    }
}

} // namespace

Decomposition refine_decomposition(const Graph& g, const Decomposition& d1, const Decomposition& d2) {
    require(d1.cut.members == d2.cut.members, Errc::PreconditionFailed,
            "refine_decomposition needs decompositions by the same cut");
    const VSet& b = d1.side_m;
    const VSet& c = d1.side_n;
    // sides are unordered; orient d2 so the lemma's C ∩ D ⊄ A premise holds
    for (auto [dp, ep] : {std::pair{&d2.side_n, &d2.side_m}, std::pair{&d2.side_m, &d2.side_n}}) {
        VSet cd = vset_intersect(c, *dp);
        if (vset_subset(cd, d1.cut.members)) continue;
        return normalized(g, d1.cut, cd, vset_union(b, *ep));
    }
    fail(Errc::NoRefinement, "C ∩ D lies inside the cut for both orientations; nothing to refine");
}

VSet middle_piece(const Graph& g, const Cut& a1, const Cut& a2, const Decomposition& d1,
                  const Decomposition& d2, const WheelAnalysis& wheels) {
    require(!(a1.members == a2.members), Errc::PreconditionFailed, "middle_piece needs distinct cuts");
    check_same_wheel(g, wheels, a1, a2);
    require(d1.cut.members == a1.members && d2.cut.members == a2.members, Errc::PreconditionFailed,
            "decompositions do not match the cuts");
    auto pick_side = [](const Decomposition& d, const VSet& other) -> const VSet& {
        if (vset_subset(other, d.side_m)) return d.side_m;
        if (vset_subset(other, d.side_n)) return d.side_n;
        fail(Errc::PreconditionFailed, "decomposition does not keep the other cut on one side");
    };
    const VSet& c1 = pick_side(d1, a2.members);
    const VSet& c2 = pick_side(d2, a1.members);
    VSet closed_mid = vset_intersect(c1, c2);
    VSet piece = between_closure(g, closed_mid, a1.members, a2.members);

    // L:middle conclusions, asserted on every call
    require(g.is_connected_subset(piece), Errc::InternalError,
            "middle piece disconnected; model violates the middle lemma");
    VSet bd = g.boundary(piece);
    VSet cuts_union = vset_union(a1.members, a2.members);
    VSet sym = vset_diff(cuts_union, vset_intersect(a1.members, a2.members));
    require(vset_subset(bd, cuts_union), Errc::InternalError, "middle boundary exceeds the two cuts");
    require(vset_subset(sym, bd), Errc::InternalError, "middle boundary misses a proper cut vertex");
    require(vset_intersect(piece, a1.members).size() == vset_intersect(piece, a2.members).size(),
            Errc::InternalError, "middle piece boundary counts differ");
    return piece;
}

bool is_between(const Graph& g, const VSet& s, const Cut& a1, const Cut& a2) {
    auto one_side = [&](const Cut& from, const Cut& other) {
        VSet what = vset_union(other.members, s);
        for (auto& d : decompositions_by(g, from)) {
            if (!vset_subset(what, d.side_m) && !vset_subset(what, d.side_n)) return false;
        }
        return true;
    };
    return one_side(a1, a2) && one_side(a2, a1);
}

CutChain build_chain(const Graph& g, std::vector<Cut> cuts, const WheelAnalysis& wheels) {
    require(!cuts.empty(), Errc::PreconditionFailed, "empty chain");
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    const int k = static_cast<int>(cuts.size());

    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            require(!crosses(g, cuts[i], cuts[j]), Errc::NotLinear, "cuts cross; no linear order");
            check_same_wheel(g, wheels, cuts[i], cuts[j]);
        }

    std::vector<Cut> ordered;
    if (k == 1) {
        ordered = cuts;
    } else {
        // an end is never strictly between two others
        std::vector<char> is_end(k, 1);
        for (int b = 0; b < k; ++b)
            for (int i = 0; i < k && is_end[b]; ++i)
                for (int j = i + 1; j < k && is_end[b]; ++j) {
                    if (i == b || j == b) continue;
                    if (cut_between(g, cuts[b], cuts[i], cuts[j])) is_end[b] = 0;
                }
        int first = -1;
        for (int b = 0; b < k; ++b)
            if (is_end[b]) {
                first = b;
                break;
            }
        require(first >= 0, Errc::NotLinear, "no endpoint cut; cuts are not linearly orderable");
        std::vector<std::pair<int, int>> by_pos; // (count of cuts between first and x, x)
        for (int x = 0; x < k; ++x) {
            if (x == first) continue;
            int cnt = 0;
            for (int y = 0; y < k; ++y)
                if (y != x && y != first && cut_between(g, cuts[y], cuts[first], cuts[x])) ++cnt;
            by_pos.emplace_back(cnt, x);
        }
        std::sort(by_pos.begin(), by_pos.end());
        ordered.push_back(cuts[first]);
        for (int i = 0; i < k - 1; ++i) {
            require(by_pos[i].first == i, Errc::NotLinear, "betweenness counts admit no linear order");
            ordered.push_back(cuts[by_pos[i].second]);
        }
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                for (int l = j + 1; l < k; ++l)
                    require(cut_between(g, ordered[j], ordered[i], ordered[l]), Errc::NotLinear,
                            "ordered cuts fail betweenness at a triple");
    }

    // canonical sides: left of A_i = components meeting earlier cuts plus the
    // neutral ones; right = components meeting later cuts
    CutChain chain;
    chain.cuts = ordered;
    std::vector<VSet> left_side(k), right_side(k);
    if (k == 1) {
        auto d = decompositions_by(g, ordered[0]).at(0);
        left_side[0] = d.side_m;
        right_side[0] = d.side_n;
    }
    for (int i = 0; i < k && k > 1; ++i) {
        auto comps = g.components_without(ordered[i].members);
        VSet earlier, later;
        for (int j = 0; j < i; ++j) earlier = vset_union(earlier, ordered[j].members);
        for (int j = i + 1; j < k; ++j) later = vset_union(later, ordered[j].members);
        auto le = comp_indices(comps, earlier, ordered[i]);
        auto ri = comp_indices(comps, later, ordered[i]);
        for (auto x : le)
            require(!ri.count(x), Errc::NotLinear, "component meets cuts on both sides");
        VSet l = ordered[i].members, r = ordered[i].members;
        const bool at_last = (i == k - 1);
        for (std::size_t ci = 0; ci < comps.size(); ++ci) {
            // neutral components ride left, except at the final cut where
            // they are its right carrier
            bool to_right = ri.count(ci) || (at_last && !le.count(ci));
            if (to_right)
                r = vset_union(r, comps[ci]);
            else
                l = vset_union(l, comps[ci]);
        }
        require(l.size() > ordered[i].members.size() && r.size() > ordered[i].members.size(),
                Errc::NotLinear, "chain end has no carrier side");
        left_side[i] = l;
        right_side[i] = r;
    }

    chain.piece_m = between_closure(g, left_side[0], ordered[0].members, {});
    chain.piece_o = between_closure(g, right_side[k - 1], ordered[k - 1].members, {});
    for (int i = 0; i + 1 < k; ++i) {
        VSet closed_mid = vset_intersect(right_side[i], left_side[i + 1]);
        chain.middles.push_back(
            between_closure(g, closed_mid, ordered[i].members, ordered[i + 1].members));
    }

    // chain invariants: prefix/suffix unions decompose by each cut, middle
    // boundaries sit inside the neighbor cuts with equal counts
    for (int i = 0; i < k; ++i) {
        VSet prefix = chain.piece_m;
        for (int j = 0; j < i; ++j) prefix = vset_union(prefix, chain.middles[j]);
        VSet suffix = chain.piece_o;
        for (int j = i; j < k - 1; ++j) suffix = vset_union(suffix, chain.middles[j]);
        require(vset_union(prefix, suffix) == g.all_vertices(), Errc::InternalError,
                "chain pieces do not cover the graph");
        require(vset_intersect(prefix, suffix) == ordered[i].members, Errc::InternalError,
                "chain prefix/suffix overlap beyond the cut");
        require(g.is_connected_subset(prefix) && g.is_connected_subset(suffix), Errc::InternalError,
                "chain side not connected");
    }
    for (int i = 0; i + 1 < k; ++i) {
        const VSet& ni = chain.middles[i];
        VSet bd = g.boundary(ni);
        VSet u = vset_union(ordered[i].members, ordered[i + 1].members);
        VSet sym = vset_diff(u, vset_intersect(ordered[i].members, ordered[i + 1].members));
        require(vset_subset(bd, u), Errc::InternalError, "middle boundary exceeds neighbor cuts");
        require(vset_subset(sym, bd), Errc::InternalError, "middle boundary misses cut vertices");
        require(vset_intersect(ni, ordered[i].members).size() ==
                    vset_intersect(ni, ordered[i + 1].members).size(),
                Errc::InternalError, "|N_i ∩ A_i| != |N_i ∩ A_{i+1}|");
    }
    return chain;
}

std::optional<ThickBridge> find_thick_bridge(const CutChain& chain) {
    const int p = static_cast<int>(chain.middles.size());
    for (int i = 1; i <= p; ++i)
        for (int j = i + 1; j <= p; ++j)
            for (int k = i; k < j; ++k) {
                VSet left, right;
                for (int x = i; x <= k; ++x) left = vset_union(left, chain.middles[x - 1]);
                for (int x = k + 1; x <= j; ++x) right = vset_union(right, chain.middles[x - 1]);
                if (vset_intersect(left, right).size() >= 2) return ThickBridge{i, k, j};
            }
    return std::nullopt;
}

BigtitsWitness bigtits_witness(const Graph& g, const CutChain& chain) {
    const int k = static_cast<int>(chain.cuts.size());
    require(k >= 8, Errc::PreconditionFailed, "bigtits_witness needs at least 8 linearly ordered cuts");
    const int p = static_cast<int>(chain.middles.size());
    // interior scan so that Q stays strictly between A_1 and A_k
    for (int i = 2; i <= p - 1; ++i)
        for (int j = i + 1; j <= p - 1; ++j)
            for (int kk = i; kk < j; ++kk) {
                VSet left, right;
                for (int x = i; x <= kk; ++x) left = vset_union(left, chain.middles[x - 1]);
                for (int x = kk + 1; x <= j; ++x) right = vset_union(right, chain.middles[x - 1]);
                if (vset_intersect(left, right).size() < 2) continue;
                BigtitsWitness w;
                w.q = vset_union(left, right);
                w.q1 = left;
                w.q2 = right;
                w.separating_cut_index = kk + 1;
                w.bridge = ThickBridge{i, kk, j};
                require(is_between(g, w.q, chain.cuts.front(), chain.cuts.back()),
                        Errc::WitnessNotFound, "thick bridge found but not between the end cuts");
                return w;
            }
    fail(Errc::WitnessNotFound,
         "no thick continuum between the end cuts; counterexample to the 8-cut theorem's "
         "combinatorial content on this model");
}

} // namespace cutcactus
