#include "cutcactus/wheels.hpp"

#include <map>
#include <set>

#include "cutcactus/errors.hpp"

namespace cutcactus {

namespace {

std::string vset_str(const Graph& g, const VSet& s) {
    std::string r = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) r += ",";
        r += g.vname(s[i]);
    }
    return r + "}";
}

bool set_disconnects(const Graph& g, const VSet& s) {
    if (static_cast<int>(s.size()) >= g.n() - 1) return false;
    return g.components_without(s).size() >= 2;
}

// Atoms of the support: closures of components of G - support, plus degenerate
// support-internal edges not already covered by a component closure.
std::vector<VSet> support_atoms(const Graph& g, const VSet& support) {
    std::vector<VSet> atoms;
    for (auto& comp : g.components_without(support)) {
        VSet attach = g.neighbors_in(comp, support);
        atoms.push_back(vset_union(comp, attach));
    }
    for (auto [u, v] : g.edges()) {
        if (!vset_contains(support, u) || !vset_contains(support, v)) continue;
        bool covered = false;
        for (auto& a : atoms)
            if (vset_contains(a, u) && vset_contains(a, v)) {
                covered = true;
                break;
            }
        if (!covered) atoms.push_back(vset_of({u, v}));
    }
    std::sort(atoms.begin(), atoms.end());
    return atoms;
}

} // namespace

Wheel build_wheel(const Graph& g, const std::vector<Cut>& members) {
    require(members.size() >= 2, Errc::MalformedWheel, "a wheel needs at least two member cuts");
    const int m = static_cast<int>(members[0].members.size());

    VSet support;
    for (auto& c : members) support = vset_union(support, c.members);

    // center = common intersection of the member cuts
    VSet center = members[0].members;
    for (auto& c : members) center = vset_intersect(center, c.members);
    require(static_cast<int>(center.size()) < m, Errc::MalformedWheel,
            "wheel center as large as the cuts themselves");

    auto atoms = support_atoms(g, support);

    // Half-cut classes: support-center vertices keyed by (cut membership,
    // atom membership); two vertices of one half-cut are never told apart by
    // either pattern.
    VSet rim = vset_diff(support, center);
    require(!rim.empty(), Errc::MalformedWheel, "wheel support equals its center");
    std::map<std::pair<std::vector<int>, std::vector<int>>, VSet> classes;
    for (int v : rim) {
        std::vector<int> cut_key, atom_key;
        for (std::size_t i = 0; i < members.size(); ++i)
            if (vset_contains(members[i].members, v)) cut_key.push_back(static_cast<int>(i));
        for (std::size_t i = 0; i < atoms.size(); ++i)
            if (vset_contains(atoms[i], v)) atom_key.push_back(static_cast<int>(i));
        classes[{cut_key, atom_key}].push_back(v);
    }
    std::vector<VSet> half;
    for (auto& [key, vs] : classes) {
        VSet h = vs;
        vset_normalize(h);
        half.push_back(h);
    }
    std::sort(half.begin(), half.end());
    const int nh = static_cast<int>(half.size());
    require(nh > 3, Errc::MalformedWheel,
            "crossing family yields only " + std::to_string(nh) + " half-cut classes (need > 3)");
    for (auto& h : half)
        require(h.size() == half[0].size(), Errc::MalformedWheel, "half-cut sizes differ");
    require(m == 2 * static_cast<int>(half[0].size()) + static_cast<int>(center.size()),
            Errc::MalformedWheel, "m = 2q - |center| fails for this crossing family");

    auto class_of = [&](int v) -> int {
        for (int i = 0; i < nh; ++i)
            if (vset_contains(half[i], v)) return i;
        return -1;
    };

    // Each atom must link exactly two half-cut classes (a cyclic arc) or ride
    // inside halfcut ∪ center / center alone.
    std::vector<std::set<int>> links(nh);
    std::vector<std::vector<std::size_t>> arc_atoms; // per class pair, below
    std::map<std::pair<int, int>, std::vector<std::size_t>> pair_atoms;
    for (std::size_t ai = 0; ai < atoms.size(); ++ai) {
        std::set<int> met;
        for (int v : atoms[ai])
            if (vset_contains(support, v) && !vset_contains(center, v)) met.insert(class_of(v));
        met.erase(-1);
        if (met.size() <= 1) {
            // must sit inside one half-cut + center (spoke-like connector)
            VSet allowed = center;
            if (met.size() == 1) allowed = vset_union(allowed, half[*met.begin()]);
            require(vset_subset(atoms[ai], allowed), Errc::MalformedWheel,
                    "atom " + vset_str(g, atoms[ai]) + " dangles on a single half-cut");
            continue;
        }
        require(met.size() == 2, Errc::MalformedWheel,
                "atom " + vset_str(g, atoms[ai]) + " touches " + std::to_string(met.size()) +
                    " half-cuts");
        int a = *met.begin(), b = *std::next(met.begin());
        links[a].insert(b);
        links[b].insert(a);
        pair_atoms[{std::min(a, b), std::max(a, b)}].push_back(ai);
    }
    for (int i = 0; i < nh; ++i)
        require(links[i].size() == 2, Errc::MalformedWheel,
                "half-cut " + vset_str(g, half[i]) + " is not on a single cyclic arc");

    // walk the cycle, canonical start and direction
    std::vector<int> order;
    {
        int start = 0;
        int prev = -1, cur = start;
        int next0 = *links[start].begin(), next1 = *std::next(links[start].begin());
        int nxt = half[next0] < half[next1] ? next0 : next1;
        while (true) {
            order.push_back(cur);
            int step = nxt;
            if (static_cast<int>(order.size()) == nh) break;
            int a = *links[step].begin(), b = *std::next(links[step].begin());
            int follow = (a == cur) ? b : a;
            prev = cur;
            cur = step;
            nxt = follow;
        }
        (void)prev;
        require(static_cast<int>(order.size()) == nh && order.front() == start,
                Errc::MalformedWheel, "half-cut link graph is not a single cycle");
        std::set<int> uniq(order.begin(), order.end());
        require(static_cast<int>(uniq.size()) == nh, Errc::MalformedWheel,
                "half-cut link graph is not a single cycle");
    }

    Wheel w;
    w.support = support;
    w.member_cuts = members;
    w.center = center;
    for (int i = 0; i < nh; ++i) {
        int a = order[i], b = order[(i + 1) % nh];
        w.half_cuts.push_back(half[a]);
        VSet piece = vset_union(vset_union(half[a], half[b]), center);
        auto it = pair_atoms.find({std::min(a, b), std::max(a, b)});
        require(it != pair_atoms.end(), Errc::MalformedWheel, "cyclically adjacent half-cuts share no atom");
        for (auto ai : it->second) piece = vset_union(piece, atoms[ai]);
        w.pieces.push_back(piece);
    }

    // Def-wheel verification: intersection pattern of the pieces.
    for (int i = 0; i < nh; ++i)
        for (int j = i + 1; j < nh; ++j) {
            VSet inter = vset_intersect(w.pieces[i], w.pieces[j]);
            bool adj = (j == i + 1) || (i == 0 && j == nh - 1);
            VSet expect = adj ? vset_union(w.half_cuts[(j == i + 1) ? j : 0], center) : center;
            require(inter == expect, Errc::MalformedWheel,
                    "piece intersection pattern violates the wheel definition at pieces " +
                        std::to_string(i) + "," + std::to_string(j));
        }
    // every member cut must be center ∪ two half-cuts
    for (auto& c : members) {
        VSet rest = vset_diff(c.members, center);
        bool matched = false;
        for (int i = 0; i < nh && !matched; ++i)
            for (int j = i + 1; j < nh && !matched; ++j)
                if (vset_union(half[i], half[j]) == rest) matched = true;
        require(matched, Errc::MalformedWheel,
                "member cut " + vset_str(g, c.members) + " is not a union of two half-cuts");
    }
    return w;
}

// Unions of two distinct half-cuts (+center) are min cuts wherever the graph
// can see the separation; pairs whose union cannot separate (cyclically
// adjacent with an interior-free shared piece) are counted as degeneracies.
int verify_half_cut_unions(const Graph& g, const Wheel& w, const std::vector<Cut>& all_cuts) {
    std::set<VSet> cutset;
    for (auto& c : all_cuts) cutset.insert(c.members);
    int degenerate = 0;
    const int n = static_cast<int>(w.half_cuts.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            VSet u = vset_union(vset_union(w.half_cuts[i], w.half_cuts[j]), w.center);
            require(static_cast<int>(u.size()) ==
                        2 * static_cast<int>(w.half_cuts[0].size()) + static_cast<int>(w.center.size()),
                    Errc::MalformedWheel, "half-cut union has the wrong size");
            if (set_disconnects(g, u)) {
                require(cutset.count(u) > 0, Errc::MalformedWheel,
                        "half-cut union " + vset_str(g, u) +
                            " separates but is not an enumerated min cut");
            } else {
                bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
                require(adjacent, Errc::MalformedWheel,
                        "non-adjacent half-cut union " + vset_str(g, u) + " fails to separate");
                ++degenerate;
            }
        }
    return degenerate;
}

std::vector<VSet> gap_sides_of_wheel(const Wheel& w) { return w.pieces; }

std::vector<VSet> gap_sides_of_cut(const Graph& g, const Cut& c) {
    std::vector<VSet> sides;
    for (auto& comp : g.components_without(c.members)) sides.push_back(vset_union(comp, c.members));
    std::sort(sides.begin(), sides.end());
    return sides;
}

std::vector<std::pair<VSet, VSet>> adjacent_gaps(const Graph& g, const Wheel& w) {
    (void)g;
    const int n = static_cast<int>(w.pieces.size());
    const int m = 2 * static_cast<int>(w.half_cuts[0].size()) + static_cast<int>(w.center.size());
    std::vector<std::pair<VSet, VSet>> pairs;
    for (int i = 0; i < n; ++i) {
        const VSet& p = w.pieces[i];
        const VSet& q = w.pieces[(i + 1) % n];
        VSet inter = vset_intersect(p, q);
        require(inter.size() == w.half_cuts[0].size() + w.center.size(), Errc::InternalError,
                "adjacent gap intersection is not a half-cut");
        if (m >= 3)
            require(inter.size() >= 2, Errc::InternalError,
                    "adjacent gap pair with |P ∩ Q| < 2 in an m>=3 wheel");
        pairs.emplace_back(p, q);
    }
    return pairs;
}

WheelAnalysis detect_wheels(const Graph& g, const std::vector<Cut>& cuts) {
    WheelAnalysis out;
    const int k = static_cast<int>(cuts.size());
    // crossing graph components
    std::vector<int> comp(k, -1);
    int nc = 0;
    for (int i = 0; i < k; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<int> stack{i};
        comp[i] = nc;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < k; ++w)
                if (comp[w] < 0 && crosses(g, cuts[v], cuts[w])) {
                    comp[w] = nc;
                    stack.push_back(w);
                }
        }
        ++nc;
    }
    std::vector<std::vector<Cut>> groups(nc);
    for (int i = 0; i < k; ++i) groups[comp[i]].push_back(cuts[i]);

    for (auto& grp : groups) {
        if (grp.size() == 1) {
            out.isolated_cuts.push_back(grp[0]);
            continue;
        }
        Wheel w = build_wheel(g, grp);
        out.degenerate_union_pairs += verify_half_cut_unions(g, w, cuts);
        out.wheels.push_back(std::move(w));
    }
    std::sort(out.wheels.begin(), out.wheels.end(),
              [](const Wheel& a, const Wheel& b) { return a.support < b.support; });
    std::sort(out.isolated_cuts.begin(), out.isolated_cuts.end());
    return out;
}

bool is_subwheel(const Graph& g, const Wheel& w, const Wheel& v) {
    (void)g;
    if (!vset_subset(w.support, v.support)) return false;
    // sub-wheel facts: piece containment, same center, half-cut inheritance
    require(w.center == v.center, Errc::InternalError, "sub-wheel center differs");
    for (auto& pv : v.pieces) {
        bool contained = false;
        for (auto& pw : w.pieces)
            if (vset_subset(pv, pw)) {
                contained = true;
                break;
            }
        require(contained, Errc::InternalError, "finer wheel piece not inside a coarser piece");
    }
    for (auto& hw : w.half_cuts) {
        bool found = false;
        for (auto& hv : v.half_cuts)
            if (hw == hv) {
                found = true;
                break;
            }
        require(found, Errc::InternalError, "sub-wheel half-cut is not a half-cut of the wheel");
    }
    return true;
}

} // namespace cutcactus
