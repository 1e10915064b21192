#include "cutcactus/cactus.hpp"

#include <map>
#include <set>

#include "cutcactus/errors.hpp"

namespace cutcactus {

namespace {

std::string cut_name(const Graph& g, const Cut& c) {
    std::string s = "cut[";
    for (std::size_t i = 0; i < c.members.size(); ++i) {
        if (i) s += ",";
        s += g.vname(c.members[i]);
    }
    return s + "]";
}

std::string wheel_name(const Graph& g, const Wheel& w) {
    return "wheel[" + g.vname(w.support.front()) + "]";
}

bool cut_between_elements(const Graph& g, const Cut& mid, const VSet& a, const VSet& c) {
    auto comps = g.components_without(mid.members);
    VSet ra = vset_diff(a, mid.members), rc = vset_diff(c, mid.members);
    if (ra.empty() || rc.empty()) return false;
    std::set<std::size_t> ia, ic;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (!vset_disjoint(comps[i], ra)) ia.insert(i);
        if (!vset_disjoint(comps[i], rc)) ic.insert(i);
    }
    for (auto x : ia)
        if (ic.count(x)) return false;
    return true;
}

} // namespace

bool element_between(const Graph& g, const CactusElement& x, const CactusElement& y,
                     const CactusElement& z) {
    if (x.name == y.name || y.name == z.name || x.name == z.name) return false;
    if (y.kind == CactusElement::Kind::IsolatedCut)
        return cut_between_elements(g, y.cut, x.carrier(), z.carrier());
    for (auto& mc : y.wheel.member_cuts)
        if (cut_between_elements(g, mc, x.carrier(), z.carrier())) return true;
    return false;
}

int CactusTree::element_of_node(int node) const {
    if (realized.is_median_node(node)) return -1;
    // realized keeps original points first, in pretree point order
    const std::string& nm = realized.node_names[node];
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (elements[i].name == nm) return static_cast<int>(i);
    return -1;
}

int CactusTree::node_of_element(int element) const {
    return realized.point_to_node.at(pretree.point(elements[element].name));
}

CactusTree build_cactus(const Graph& g, const EnumOptions& opts) {
    CactusTree t;
    t.host = g;
    auto m = thickness(g, opts);
    require(m.has_value() && *m >= 2, Errc::PreconditionFailed,
            "cactus tree needs a 2-thick host (thickness >= 2)");
    t.thickness = *m;
    t.all_cuts = enumerate_min_cuts(g, opts);
    WheelAnalysis wa = detect_wheels(g, t.all_cuts);

    for (auto& c : wa.isolated_cuts)
        t.elements.push_back({CactusElement::Kind::IsolatedCut, c, {}, cut_name(g, c)});
    for (auto& w : wa.wheels)
        t.elements.push_back({CactusElement::Kind::MaximalWheel, {}, w, wheel_name(g, w)});
    std::sort(t.elements.begin(), t.elements.end(),
              [](const CactusElement& a, const CactusElement& b) {
                  return natural_less(a.name, b.name);
              });

    std::vector<std::string> names;
    for (auto& e : t.elements) names.push_back(e.name);
    std::vector<std::array<std::string, 3>> triples;
    for (auto& x : t.elements)
        for (auto& z : t.elements) {
            if (!(x.name < z.name)) continue;
            for (auto& y : t.elements)
                if (element_between(g, x, y, z)) triples.push_back({x.name, y.name, z.name});
        }
    t.pretree = Pretree(names, triples);
    require_axioms(t.pretree);
    t.realized = realize(t.pretree);

    t.node_subsets.resize(t.realized.node_names.size());
    for (std::size_t node = 0; node < t.realized.node_names.size(); ++node) {
        int e = t.element_of_node(static_cast<int>(node));
        if (e >= 0)
            t.node_subsets[node] = t.elements[e].carrier();
        else
            t.node_subsets[node] = median_set(t, static_cast<int>(node));
    }
    return t;
}

namespace {

// connected components of the realized tree after removing `at`
std::vector<std::vector<int>> tree_components_without(const RealizedTree& rt, int at) {
    const int n = static_cast<int>(rt.node_names.size());
    std::vector<std::vector<int>> adj(n);
    for (auto& [u, v] : rt.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> comp(n, -1);
    comp[at] = -2;
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> stack{s}, nodes;
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            nodes.push_back(v);
            for (int w : adj[v])
                if (comp[w] == -1) {
                    comp[w] = static_cast<int>(out.size());
                    stack.push_back(w);
                }
        }
        std::sort(nodes.begin(), nodes.end());
        out.push_back(nodes);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

VSet median_set(const CactusTree& t, int node) {
    require(t.realized.is_median_node(node), Errc::PreconditionFailed,
            "median_set is only defined on median-completion nodes");
    auto branches = tree_components_without(t.realized, node);
    require(branches.size() >= 3, Errc::InternalError, "median node with fewer than 3 branches");

    // carriers of the original elements per branch
    std::vector<std::vector<int>> branch_elems(branches.size());
    for (std::size_t b = 0; b < branches.size(); ++b)
        for (int nd : branches[b]) {
            int e = t.element_of_node(nd);
            if (e >= 0) branch_elems[b].push_back(e);
        }

    VSet acc = t.host.all_vertices();
    for (std::size_t b = 0; b < branches.size(); ++b) {
        VSet others;
        for (std::size_t b2 = 0; b2 < branches.size(); ++b2) {
            if (b2 == b) continue;
            for (int e : branch_elems[b2]) others = vset_union(others, t.elements[e].carrier());
        }
        for (int e : branch_elems[b]) {
            if (t.elements[e].kind != CactusElement::Kind::IsolatedCut) continue;
            for (auto& d : decompositions_by(t.host, t.elements[e].cut)) {
                bool in_m = vset_subset(others, d.side_m);
                bool in_n = vset_subset(others, d.side_n);
                require(in_m || in_n, Errc::InternalError,
                        "a decomposition splits the other branches of a median node");
                acc = vset_intersect(acc, in_m ? d.side_m : d.side_n);
            }
        }
    }
    require(!acc.empty(), Errc::EmptyMedianSet,
            "median set intersection is empty; the graph is not a faithful model");
    return acc;
}

VSet subtree_to_subset(const CactusTree& t, const std::vector<int>& nodes) {
    std::set<int> k(nodes.begin(), nodes.end());
    require(!k.empty(), Errc::PreconditionFailed, "empty node set");
    // connectivity of K in the realized tree
    {
        std::vector<int> stack{*k.begin()};
        std::set<int> seen{*k.begin()};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto& [a, b] : t.realized.edges) {
                int w = -1;
                if (a == v) w = b;
                if (b == v) w = a;
                if (w >= 0 && k.count(w) && !seen.count(w)) {
                    seen.insert(w);
                    stack.push_back(w);
                }
            }
        }
        require(seen.size() == k.size(), Errc::PreconditionFailed, "node set is not connected");
    }

    // carrier content of K, for picking sides
    VSet k_content;
    for (int nd : k) {
        int e = t.element_of_node(nd);
        if (e >= 0) k_content = vset_union(k_content, t.elements[e].carrier());
    }

    // relevant cuts: cut elements outside K, plus cut elements on K's boundary
    VSet acc = t.host.all_vertices();
    for (std::size_t e = 0; e < t.elements.size(); ++e) {
        if (t.elements[e].kind != CactusElement::Kind::IsolatedCut) continue;
        int nd = t.node_of_element(static_cast<int>(e));
        bool inside = k.count(nd) > 0;
        bool boundary = false;
        if (inside)
            for (auto& [a, b] : t.realized.edges) {
                if (a == nd && !k.count(b)) boundary = true;
                if (b == nd && !k.count(a)) boundary = true;
            }
        if (inside && !boundary) continue;
        const Cut& cut = t.elements[e].cut;
        VSet target = inside ? vset_diff(k_content, cut.members) : k_content;
        for (auto& d : decompositions_by(t.host, cut)) {
            bool in_m = vset_subset(target, d.side_m);
            bool in_n = vset_subset(target, d.side_n);
            if (in_m && in_n) { // boundary cut with nothing beyond: both sides count
                acc = vset_intersect(acc, cut.members);
            } else {
                require(in_m || in_n, Errc::InternalError,
                        "a decomposition splits the content of a connected node set");
                acc = vset_intersect(acc, in_m ? d.side_m : d.side_n);
            }
        }
    }
    return acc;
}

std::vector<ElementGap> gaps_of(const CactusTree& t, int element) {
    const CactusElement& e = t.elements[element];
    std::vector<VSet> sides = e.kind == CactusElement::Kind::IsolatedCut
                                  ? gap_sides_of_cut(t.host, e.cut)
                                  : gap_sides_of_wheel(e.wheel);
    std::vector<ElementGap> out;
    for (auto& side : sides) {
        bool nonterminal = false;
        for (std::size_t b = 0; b < t.elements.size() && !nonterminal; ++b) {
            if (b == static_cast<std::size_t>(element)) continue;
            if (!vset_subset(t.elements[b].carrier(), side)) continue;
            for (std::size_t c = 0; c < t.elements.size() && !nonterminal; ++c) {
                if (c == static_cast<std::size_t>(element) || c == b) continue;
                if (!vset_subset(t.elements[c].carrier(), side)) continue;
                if (element_between(t.host, e, t.elements[b], t.elements[c])) nonterminal = true;
            }
        }
        out.push_back({side, !nonterminal});
    }
    return out;
}

GapInjection gap_components_injection(const CactusTree& t, int element) {
    int nd = t.node_of_element(element);
    auto comps = tree_components_without(t.realized, nd);
    auto gaps = gaps_of(t, element);
    GapInjection out;
    std::set<int> used;
    for (auto& comp : comps) {
        VSet content;
        for (int v : comp) {
            int e = t.element_of_node(v);
            if (e >= 0) content = vset_union(content, t.elements[e].carrier());
        }
        require(!content.empty(), Errc::InternalError, "tree component without elements");
        int hit = -1;
        for (std::size_t gi = 0; gi < gaps.size(); ++gi)
            if (vset_subset(content, gaps[gi].side)) {
                require(hit < 0, Errc::InternalError, "component fits two gaps");
                hit = static_cast<int>(gi);
            }
        require(hit >= 0, Errc::InternalError, "component fits no gap of the element");
        require(used.insert(hit).second, Errc::InternalError,
                "gap hit twice; injection fails");
        out.component_to_gap.emplace_back(comp, hit);
    }
    return out;
}

} // namespace cutcactus
