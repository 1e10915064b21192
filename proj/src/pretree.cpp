#include "cutcactus/pretree.hpp"

#include <algorithm>
#include <set>

#include "cutcactus/errors.hpp"
#include "json.hpp"

namespace cutcactus {

using nlohmann::json;

Pretree::Pretree(std::vector<std::string> point_names,
                 std::vector<std::array<std::string, 3>> triples) {
    std::sort(point_names.begin(), point_names.end(), natural_less);
    point_names.erase(std::unique(point_names.begin(), point_names.end()), point_names.end());
    names_ = std::move(point_names);
    for (auto& [x, y, z] : triples) {
        int xi = point(x), yi = point(y), zi = point(z);
        require(xi != zi && yi != xi && yi != zi, Errc::AxiomViolation,
                "degenerate betweenness triple");
        auto key = std::minmax(xi, zi);
        between_[{key.first, key.second}].push_back(yi);
    }
    for (auto& [key, mids] : between_) vset_normalize(mids);
}

int Pretree::point(const std::string& name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name, natural_less);
    require(it != names_.end() && *it == name, Errc::PreconditionFailed, "unknown point " + name);
    return static_cast<int>(it - names_.begin());
}

void Pretree::add_between(int x, int y, int z) {
    require(x != z, Errc::AxiomViolation, "nothing lies between a point and itself (axiom 1)");
    require(y != x && y != z, Errc::AxiomViolation, "endpoints are not strictly between");
    auto key = std::minmax(x, z);
    VSet& s = between_[{key.first, key.second}];
    s.push_back(y);
    vset_normalize(s);
}

bool Pretree::is_between(int x, int y, int z) const {
    if (x == z || y == x || y == z) return false;
    auto key = std::minmax(x, z);
    auto it = between_.find({key.first, key.second});
    return it != between_.end() && vset_contains(it->second, y);
}

VSet Pretree::open_interval(int x, int y) const {
    if (x == y) return {};
    auto key = std::minmax(x, y);
    auto it = between_.find({key.first, key.second});
    return it == between_.end() ? VSet{} : it->second;
}

VSet Pretree::closed_interval(int x, int y) const {
    VSet s = open_interval(x, y);
    s.push_back(x);
    s.push_back(y);
    vset_normalize(s);
    return s;
}

VSet Pretree::interval(int x, int y, bool closed) const {
    return closed ? closed_interval(x, y) : open_interval(x, y);
}

Pretree Pretree::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        fail(Errc::ParseError, std::string("bad pretree json: ") + e.what());
    }
    std::vector<std::string> pts;
    for (auto& p : j.at("points")) pts.push_back(p.get<std::string>());
    std::vector<std::array<std::string, 3>> triples;
    for (auto& t : j.at("between")) {
        require(t.is_array() && t.size() == 3, Errc::ParseError, "between entries are [x,y,z]");
        triples.push_back({t[0].get<std::string>(), t[1].get<std::string>(), t[2].get<std::string>()});
    }
    return Pretree(pts, triples);
}

std::string Pretree::to_json_text() const {
    json j;
    j["points"] = names_;
    json b = json::array();
    for (auto& [key, mids] : between_)
        for (int y : mids) b.push_back({names_[key.first], names_[y], names_[key.second]});
    j["between"] = b;
    return j.dump(2) + "\n";
}

std::vector<AxiomViolation> check_axioms(const Pretree& p) {
    std::vector<AxiomViolation> out;
    const int n = p.n();
    // axioms 1 and 2 hold by the storage representation; re-check 1 anyway
    for (int x = 0; x < n; ++x)
        if (!p.open_interval(x, x).empty()) out.push_back({1, {x}});
    // bit table: mid[y] has bit x*n+z when y ∈ (x,z)
    std::vector<std::vector<bool>> mid(n, std::vector<bool>(static_cast<std::size_t>(n) * n, false));
    for (auto& [key, mids] : p.relation())
        for (int y : mids) {
            mid[y][static_cast<std::size_t>(key.first) * n + key.second] = true;
            mid[y][static_cast<std::size_t>(key.second) * n + key.first] = true;
        }
    for (auto& [key, mids] : p.relation()) {
        int x = key.first, z = key.second;
        for (int y : mids) {
            if (mid[z][static_cast<std::size_t>(x) * n + y]) out.push_back({3, {x, y, z}});
            for (int w = 0; w < n; ++w) {
                if (w == y) continue;
                if (!mid[y][static_cast<std::size_t>(x) * n + w] &&
                    !mid[y][static_cast<std::size_t>(z) * n + w])
                    out.push_back({4, {x, y, z, w}});
            }
        }
    }
    return out;
}

void require_axioms(const Pretree& p) {
    auto v = check_axioms(p);
    if (v.empty()) return;
    std::string what = "axiom " + std::to_string(v[0].axiom) + " fails at";
    for (int x : v[0].points) what += " " + p.pname(x);
    fail(Errc::AxiomViolation, what);
}

VSet medians(const Pretree& p, int x, int y, int z) {
    return vset_intersect(vset_intersect(p.closed_interval(x, y), p.closed_interval(y, z)),
                          p.closed_interval(z, x));
}

bool is_median_pretree(const Pretree& p) {
    for (int x = 0; x < p.n(); ++x)
        for (int y = x + 1; y < p.n(); ++y)
            for (int z = y + 1; z < p.n(); ++z)
                if (medians(p, x, y, z).empty()) return false;
    return true;
}

// ---- realization ------------------------------------------------------------

namespace {

// Branches (directions) at x: components of P-{x} under u ~ v iff x ∉ [u,v].
// The pretree axioms make ~ transitive; verified, NotTreelike otherwise.
std::vector<VSet> branches_at(const Pretree& p, int x) {
    const int n = p.n();
    std::vector<int> comp(n, -1);
    int nc = 0;
    for (int s = 0; s < n; ++s) {
        if (s == x || comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = nc;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w)
                if (w != x && comp[w] < 0 && !p.is_between(v, x, w)) {
                    comp[w] = nc;
                    stack.push_back(w);
                }
        }
        ++nc;
    }
    std::vector<VSet> out(nc);
    for (int v = 0; v < n; ++v)
        if (v != x) out[comp[v]].push_back(v);
    for (auto& b : out)
        for (int u : b)
            for (int v : b)
                require(!p.is_between(u, x, v), Errc::NotTreelike,
                        "directions at " + p.pname(x) + " are not an equivalence");
    std::sort(out.begin(), out.end());
    return out;
}

struct BuildNode {
    VSet labels;
    std::set<int> adj;
    bool alive = true;
};

struct Builder {
    std::vector<BuildNode> nodes;

    int subtree_probe(int from, int banned, const VSet& a, const VSet& b, bool& has_a,
                      bool& has_b) const {
        // DFS through the component of `from` in T - banned
        std::vector<int> stack{from};
        std::set<int> seen{from, banned};
        has_a = has_b = false;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int l : nodes[v].labels) {
                if (vset_contains(a, l)) has_a = true;
                if (vset_contains(b, l)) has_b = true;
            }
            for (int w : nodes[v].adj)
                if (!seen.count(w)) {
                    seen.insert(w);
                    stack.push_back(w);
                }
        }
        return 0;
    }
};

} // namespace

RealizedTree realize(const Pretree& p) {
    const int n = p.n();
    require_axioms(p);

    RealizedTree out;
    if (n == 0) return out;
    if (n == 1) {
        out.node_names = {p.pname(0)};
        out.median_triple.resize(1);
        out.point_to_node[0] = 0;
        return out;
    }

    // splits: one per (point, branch) pair; canonical side = the one without
    // point 0
    VSet everything(n);
    for (int i = 0; i < n; ++i) everything[i] = i;
    std::set<VSet> split_set;
    for (int x = 0; x < n; ++x)
        for (auto& side : branches_at(p, x))
            split_set.insert(vset_contains(side, 0) ? vset_diff(everything, side) : side);
    std::vector<VSet> splits(split_set.begin(), split_set.end());
    std::sort(splits.begin(), splits.end(), [](const VSet& a, const VSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });

    Builder t;
    VSet all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    t.nodes.push_back({all, {}, true});

    for (auto& a_side : splits) {
        if (a_side.empty() || static_cast<int>(a_side.size()) == n) continue;
        VSet b_side = vset_diff(all, a_side);
        // walk to the node where no neighbor subtree mixes the two sides
        int v = -1;
        for (std::size_t i = 0; i < t.nodes.size(); ++i)
            if (t.nodes[i].alive && vset_contains(t.nodes[i].labels, a_side[0])) {
                v = static_cast<int>(i);
                break;
            }
        if (v < 0)
            for (std::size_t i = 0; i < t.nodes.size(); ++i)
                if (t.nodes[i].alive) {
                    v = static_cast<int>(i);
                    break;
                }
        while (true) {
            int move_to = -1;
            int mixed = 0;
            for (int w : t.nodes[v].adj) {
                bool ha, hb;
                t.subtree_probe(w, v, a_side, b_side, ha, hb);
                if (ha && hb) {
                    ++mixed;
                    move_to = w;
                }
            }
            require(mixed <= 1, Errc::NotTreelike, "incompatible split system");
            if (mixed == 0) break;
            v = move_to;
        }
        // act at v
        std::vector<int> a_neis;
        int b_neis = 0, b_nei = -1;
        for (int w : t.nodes[v].adj) {
            bool ha, hb;
            t.subtree_probe(w, v, a_side, b_side, ha, hb);
            if (ha) a_neis.push_back(w);
            if (hb) {
                ++b_neis;
                b_nei = w;
            }
        }
        VSet la = vset_intersect(t.nodes[v].labels, a_side);
        VSet lb = vset_intersect(t.nodes[v].labels, b_side);
        if (la.empty() && a_neis.size() == 1) continue; // split already realized by that edge
        if (lb.empty() && b_neis == 1) continue;        // ditto, b side
        (void)b_nei;
        int vp = static_cast<int>(t.nodes.size());
        t.nodes.push_back({la, {}, true});
        t.nodes[v].labels = lb;
        for (int w : a_neis) {
            t.nodes[v].adj.erase(w);
            t.nodes[w].adj.erase(v);
            t.nodes[vp].adj.insert(w);
            t.nodes[w].adj.insert(vp);
        }
        t.nodes[v].adj.insert(vp);
        t.nodes[vp].adj.insert(v);
    }

    // contract empty degree-<=2 helper nodes
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < t.nodes.size(); ++i) {
            auto& nd = t.nodes[i];
            if (!nd.alive || !nd.labels.empty()) continue;
            if (nd.adj.size() == 2) {
                int a = *nd.adj.begin();
                int b = *std::next(nd.adj.begin());
                t.nodes[a].adj.erase(static_cast<int>(i));
                t.nodes[b].adj.erase(static_cast<int>(i));
                t.nodes[a].adj.insert(b);
                t.nodes[b].adj.insert(a);
                nd.alive = false;
                changed = true;
            } else if (nd.adj.size() <= 1) {
                fail(Errc::InternalError, "dangling helper node in the realization");
            }
        }
    }

    // each point must sit alone in a node
    std::map<int, int> node_of_point;
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        if (!t.nodes[i].alive) continue;
        require(t.nodes[i].labels.size() <= 1, Errc::NotTreelike,
                "two points are never separated by the relation");
        if (t.nodes[i].labels.size() == 1) node_of_point[t.nodes[i].labels[0]] = static_cast<int>(i);
    }
    require(static_cast<int>(node_of_point.size()) == n, Errc::InternalError, "lost a point");

    // canonical renumber: original points in point order, then medians sorted
    // by their least-label neighborhood signature (derived below)
    std::vector<int> old_ids;
    for (int pt = 0; pt < n; ++pt) old_ids.push_back(node_of_point[pt]);
    std::vector<int> steiner_old;
    for (std::size_t i = 0; i < t.nodes.size(); ++i)
        if (t.nodes[i].alive && t.nodes[i].labels.empty()) steiner_old.push_back(static_cast<int>(i));

    // defining triple per steiner: least original in three distinct directions
    std::map<int, std::array<int, 3>> triples;
    for (int s : steiner_old) {
        std::vector<int> reps;
        for (int w : t.nodes[s].adj) {
            bool ha, hb;
            VSet none{};
            t.subtree_probe(w, s, all, none, ha, hb);
            // gather least label in that direction
            std::vector<int> stack{w};
            std::set<int> seen{w, s};
            int best = -1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int l : t.nodes[v].labels) best = best < 0 ? l : std::min(best, l);
                for (int u : t.nodes[v].adj)
                    if (!seen.count(u)) {
                        seen.insert(u);
                        stack.push_back(u);
                    }
            }
            require(best >= 0, Errc::InternalError, "empty direction at a median node");
            reps.push_back(best);
        }
        require(reps.size() >= 3, Errc::NotTreelike, "median node of degree < 3");
        std::sort(reps.begin(), reps.end());
        triples[s] = {reps[0], reps[1], reps[2]};
    }
    std::sort(steiner_old.begin(), steiner_old.end(),
              [&](int a, int b) { return triples[a] < triples[b]; });

    std::map<int, int> renum;
    for (int pt = 0; pt < n; ++pt) renum[old_ids[pt]] = pt;
    for (std::size_t i = 0; i < steiner_old.size(); ++i)
        renum[steiner_old[i]] = n + static_cast<int>(i);

    out.node_names.resize(n + steiner_old.size());
    out.median_triple.resize(n + steiner_old.size());
    for (int pt = 0; pt < n; ++pt) {
        out.node_names[pt] = p.pname(pt);
        out.point_to_node[pt] = pt;
    }
    for (std::size_t i = 0; i < steiner_old.size(); ++i) {
        auto tr = triples[steiner_old[i]];
        out.node_names[n + i] =
            "m(" + p.pname(tr[0]) + "," + p.pname(tr[1]) + "," + p.pname(tr[2]) + ")";
        out.median_triple[n + i] = tr;
    }
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        if (!t.nodes[i].alive) continue;
        for (int w : t.nodes[i].adj)
            if (static_cast<int>(i) < w) out.edges.emplace_back(renum[static_cast<int>(i)], renum[w]);
    }
    std::sort(out.edges.begin(), out.edges.end(),
              [](auto a, auto b) { return std::minmax(a.first, a.second) < std::minmax(b.first, b.second); });
    for (auto& [a, b] : out.edges)
        if (a > b) std::swap(a, b);
    std::sort(out.edges.begin(), out.edges.end());

    require(out.edges.size() + 1 == out.node_names.size(), Errc::NotTreelike,
            "realization is not a tree");

    // realized betweenness must extend the pretree's
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (x == y || y == z || x == z) continue;
                bool pre = p.is_between(x, y, z);
                bool tree = out.tree_between(out.point_to_node.at(x), out.point_to_node.at(y),
                                             out.point_to_node.at(z));
                require(pre == tree, Errc::NotTreelike,
                        "realized tree disagrees with the relation at (" + p.pname(x) + "," +
                            p.pname(y) + "," + p.pname(z) + ")");
            }
    return out;
}

int RealizedTree::degree(int v) const {
    int d = 0;
    for (auto& [a, b] : edges) d += (a == v) + (b == v);
    return d;
}

std::vector<int> RealizedTree::path(int a, int b) const {
    const int n = static_cast<int>(node_names.size());
    std::vector<std::vector<int>> adj(n);
    for (auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> parent(n, -2);
    std::vector<int> stack{a};
    parent[a] = -1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v == b) break;
        for (int w : adj[v])
            if (parent[w] == -2) {
                parent[w] = v;
                stack.push_back(w);
            }
    }
    require(parent[b] != -2, Errc::InternalError, "tree path not found");
    std::vector<int> rev;
    for (int v = b; v != -1; v = parent[v]) rev.push_back(v);
    std::reverse(rev.begin(), rev.end());
    return rev;
}

bool RealizedTree::tree_between(int a, int b, int c) const {
    if (a == c || b == a || b == c) return false;
    auto pt = path(a, c);
    for (std::size_t i = 1; i + 1 < pt.size(); ++i)
        if (pt[i] == b) return true;
    return false;
}

CompletionResult median_completion(const Pretree& p) {
    RealizedTree t = realize(p);
    const int total = static_cast<int>(t.node_names.size());
    require(total <= p.n() * p.n() * p.n() + p.n(), Errc::CompletionDiverged,
            "median completion exceeded the cubic bound");
    std::vector<std::array<std::string, 3>> triples;
    for (int a = 0; a < total; ++a)
        for (int b = 0; b < total; ++b)
            for (int c = 0; c < total; ++c) {
                if (a == b || b == c || a == c) continue;
                if (t.tree_between(a, b, c))
                    triples.push_back({t.node_names[a], t.node_names[b], t.node_names[c]});
            }
    CompletionResult res{Pretree(t.node_names, triples), {}};
    for (int v = 0; v < total; ++v)
        if (t.is_median_node(v)) {
            auto tr = *t.median_triple[v];
            res.added.push_back(
                {t.node_names[v], {p.pname(tr[0]), p.pname(tr[1]), p.pname(tr[2])}});
        }
    return res;
}

Pretree quotient(const Pretree& p, const ConvexPartition& part) {
    // blocks: disjoint, covering, convex
    VSet seen;
    for (auto& b : part.blocks) {
        require(!b.empty(), Errc::NonConvexBlock, "empty block");
        require(vset_disjoint(seen, b), Errc::NonConvexBlock, "blocks overlap");
        seen = vset_union(seen, b);
        for (int x : b)
            for (int y : b)
                require(vset_subset(p.open_interval(x, y), b), Errc::NonConvexBlock,
                        "block is not convex between " + p.pname(x) + " and " + p.pname(y));
    }
    require(static_cast<int>(seen.size()) == p.n(), Errc::NonConvexBlock, "blocks do not cover");

    std::vector<std::string> names;
    for (auto& b : part.blocks) names.push_back(p.pname(b.front()));
    std::vector<int> block_of(p.n(), -1);
    for (std::size_t bi = 0; bi < part.blocks.size(); ++bi)
        for (int v : part.blocks[bi]) block_of[v] = static_cast<int>(bi);
    std::set<std::array<int, 3>> seen;
    std::vector<std::array<std::string, 3>> triples;
    for (auto& [key, mids] : p.relation())
        for (int a : mids) {
            int bb = block_of[key.first], ab = block_of[a], cb = block_of[key.second];
            if (bb == cb || ab == bb || ab == cb) continue;
            if (bb > cb) std::swap(bb, cb);
            if (seen.insert({bb, ab, cb}).second)
                triples.push_back({p.pname(part.blocks[bb].front()),
                                   p.pname(part.blocks[ab].front()),
                                   p.pname(part.blocks[cb].front())});
        }
    Pretree q(names, triples);
    require_axioms(q);
    return q;
}

// ---- linear insertion (the six case rules) ----------------------------------

namespace {

struct InsertCtx {
    const Pretree* base;
    // per inserted point: which insertion it belongs to and its rank
    struct JPoint {
        int omega;
        int rank;
    };
    std::vector<LinearInsertion> ins;
    std::map<std::string, JPoint> jpoints;
    std::map<std::string, int> base_idx; // base point name -> base index

    bool in_j(const std::string& a) const { return jpoints.count(a) > 0; }

    bool ext_between(const std::string& t, const std::string& u, const std::string& v) const;
    bool ext_in_closed(const std::string& t, const std::string& u, const std::string& v) const {
        return t == u || t == v || ext_between(t, u, v);
    }
};

bool InsertCtx::ext_between(const std::string& t, const std::string& u, const std::string& v) const {
    if (u == v || t == u || t == v) return false;
    const bool tj = in_j(t), uj = in_j(u), vj = in_j(v);
    auto bname = [&](int i) { return base->pname(i); };
    if (!tj && !uj && !vj)
        return base->is_between(base_idx.at(u), base_idx.at(t), base_idx.at(v));
    if (tj) {
        auto tp = jpoints.at(t);
        const auto& I = ins[tp.omega];
        std::string neg = base->pname(I.end_neg), pos = base->pname(I.end_pos);
        bool u_same = uj && jpoints.at(u).omega == tp.omega;
        bool v_same = vj && jpoints.at(v).omega == tp.omega;
        if (u_same && v_same) { // rule IV
            int ru = jpoints.at(u).rank, rv = jpoints.at(v).rank;
            return (ru < tp.rank && tp.rank < rv) || (rv < tp.rank && tp.rank < ru);
        }
        if (u_same || v_same) { // rules V and VI
            const std::string& a = u_same ? u : v;
            const std::string& c = u_same ? v : u;
            int ra = jpoints.at(a).rank;
            if (ra < tp.rank) return ext_in_closed(pos, a, c) && pos != a; // ∞ ∈ (a,c]
            return ext_in_closed(neg, a, c) && neg != a;                   // -∞ ∈ (a,c]
        }
        // rule III: both endpoints of the segment lie weakly between u and v
        return ext_in_closed(neg, u, v) && ext_in_closed(pos, u, v);
    }
    // t is a base point, at least one of u,v inserted
    if (uj && vj) {
        auto up = jpoints.at(u), vp = jpoints.at(v);
        if (up.omega == vp.omega) return false; // rule IV: interval stays inside J
        const auto& IU = ins[up.omega];
        const auto& IV = ins[vp.omega];
        std::string un = bname(IU.end_neg), up_ = bname(IU.end_pos);
        std::string vn = bname(IV.end_neg), vp_ = bname(IV.end_pos);
        return ext_in_closed(t, up_, vp_) && ext_in_closed(t, un, vp_) &&
               ext_in_closed(t, up_, vn) && ext_in_closed(t, un, vn); // rule II
    }
    const std::string& a = uj ? u : v;
    const std::string& other = uj ? v : u;
    const auto& I = ins[jpoints.at(a).omega];
    std::string neg = bname(I.end_neg), pos = bname(I.end_pos);
    // rule I: t ∈ [-∞, p) ∩ [∞, p)
    return ext_in_closed(t, neg, other) && t != other && ext_in_closed(t, pos, other);
}

} // namespace

Pretree insert_linear(const Pretree& p, const std::vector<LinearInsertion>& insertions) {
    InsertCtx ctx;
    ctx.base = &p;
    ctx.ins = insertions;
    // Adjacency here is edge-adjacency in the realization: a median point
    // strictly between the pair would leave third points unresolved by the
    // case rules and break axiom 4.
    RealizedTree rt = p.n() >= 2 ? realize(p) : RealizedTree{};
    std::set<std::pair<int, int>> pairs;
    for (std::size_t w = 0; w < insertions.size(); ++w) {
        const auto& I = insertions[w];
        require(I.end_neg != I.end_pos, Errc::NotAdjacent, "insertion endpoints coincide");
        require(p.open_interval(I.end_neg, I.end_pos).empty(), Errc::NotAdjacent,
                "insertion pair " + p.pname(I.end_neg) + "," + p.pname(I.end_pos) +
                    " is not adjacent");
        require(rt.path(rt.point_to_node.at(I.end_neg), rt.point_to_node.at(I.end_pos)).size() == 2,
                Errc::NotAdjacent,
                "a median point lies strictly between " + p.pname(I.end_neg) + " and " +
                    p.pname(I.end_pos));
        auto key = std::minmax(I.end_neg, I.end_pos);
        require(pairs.insert({key.first, key.second}).second, Errc::PreconditionFailed,
                "two insertions at one adjacent pair");
        for (std::size_t r = 0; r < I.j_names.size(); ++r) {
            require(!ctx.jpoints.count(I.j_names[r]), Errc::PreconditionFailed,
                    "inserted point name reused: " + I.j_names[r]);
            ctx.jpoints[I.j_names[r]] = {static_cast<int>(w), static_cast<int>(r)};
        }
    }
    std::vector<std::string> names = p.point_names();
    for (int i = 0; i < p.n(); ++i)
        require(!ctx.jpoints.count(p.pname(i)), Errc::PreconditionFailed,
                "inserted point clashes with an existing one");
    for (auto& [nm, jp] : ctx.jpoints) names.push_back(nm);
    for (int i = 0; i < p.n(); ++i) ctx.base_idx[p.pname(i)] = i;

    std::vector<std::array<std::string, 3>> triples;
    for (auto& [key, mids] : p.relation())
        for (int y : mids)
            triples.push_back({p.pname(key.first), p.pname(y), p.pname(key.second)});
    for (auto& x : names)
        for (auto& z : names) {
            if (!(x < z)) continue;
            bool xz_base = !ctx.in_j(x) && !ctx.in_j(z);
            for (auto& y : names) {
                if (y == x || y == z) continue;
                if (xz_base && !ctx.in_j(y)) continue; // base facts already seeded
                if (ctx.ext_between(y, x, z)) triples.push_back({x, y, z});
            }
        }
    Pretree r(names, triples);
    require_axioms(r);
    return r;
}

// ---- linear subsets and Dedekind gaps ---------------------------------------

namespace {

bool is_linear_set(const Pretree& p, const VSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            for (std::size_t k = j + 1; k < s.size(); ++k) {
                if (!p.is_between(s[i], s[j], s[k]) && !p.is_between(s[j], s[i], s[k]) &&
                    !p.is_between(s[i], s[k], s[j]))
                    return false;
            }
    return true;
}

// sort a linear set along its order, lex-least end first
VSet sort_linear(const Pretree& p, VSet s) {
    if (s.size() <= 2) return s;
    // ends: not between any two others
    std::vector<int> ends;
    for (int e : s) {
        bool mid = false;
        for (int a : s)
            for (int b : s)
                if (p.is_between(a, e, b)) mid = true;
        if (!mid) ends.push_back(e);
    }
    require(ends.size() == 2, Errc::InternalError, "linear set without two ends");
    int e = std::min(ends[0], ends[1]);
    std::sort(s.begin(), s.end(), [&](int a, int b) {
        if (a == b) return false;
        if (a == e) return true;
        if (b == e) return false;
        return p.is_between(e, a, b);
    });
    return s;
}

} // namespace

std::vector<VSet> maximal_linear_subsets(const Pretree& p) {
    std::set<VSet> found;
    const int n = p.n();
    if (n == 1) return {VSet{0}};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            VSet s = vset_of({a, b});
            for (int c = 0; c < n; ++c) {
                if (vset_contains(s, c)) continue;
                VSet t = vset_union(s, {c});
                if (is_linear_set(p, t)) s = t;
            }
            found.insert(s);
        }
    // drop non-maximal leftovers (greedy order can strand subsets)
    std::vector<VSet> out;
    for (auto& s : found) {
        bool dominated = false;
        for (auto& t : found)
            if (s != t && vset_subset(s, t)) dominated = true;
        if (!dominated) out.push_back(sort_linear(p, s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DedekindGap> dedekind_gaps(const Pretree& p, const VSet& linear_subset) {
    VSet sorted = sort_linear(p, linear_subset);
    auto maxlins = maximal_linear_subsets(p);
    {
        VSet key = linear_subset;
        vset_normalize(key);
        bool is_maximal = false;
        for (auto& m : maxlins) {
            VSet mm = m;
            vset_normalize(mm);
            if (mm == key) is_maximal = true;
        }
        require(is_maximal, Errc::PreconditionFailed, "subset is not a maximal linear subset");
    }
    std::vector<DedekindGap> out;
    const int k = static_cast<int>(sorted.size());
    for (int cut = 1; cut < k; ++cut) {
        VSet a(sorted.begin(), sorted.begin() + cut);
        VSet b(sorted.begin() + cut, sorted.end());
        VSet an = a, bn = b;
        vset_normalize(an);
        vset_normalize(bn);
        auto is_maximal_linear = [&](const VSet& s) {
            for (auto& m2 : maxlins) {
                VSet m2n = m2;
                vset_normalize(m2n);
                if (m2n == s) return true;
            }
            return false;
        };
        VSet whole = vset_union(an, bn);
        for (auto& m : maxlins) {
            VSet mm = m;
            vset_normalize(mm);
            if (mm == whole) continue;
            // condition (i): A ∪ C = M maximal, B ∪ C maximal; C may contain x
            if (vset_subset(an, mm)) {
                VSet beyond = vset_diff(mm, an);
                if (!beyond.empty() && vset_disjoint(beyond, bn)) {
                    for (VSet c : {vset_union(beyond, VSet{sorted[cut - 1]}), beyond}) {
                        VSet bc = vset_union(bn, c);
                        if (!is_linear_set(p, bc) || !is_maximal_linear(bc)) continue;
                        out.push_back({sorted[cut - 1], an, bn, c, 1});
                        break;
                    }
                }
            }
            // condition (ii): symmetric at x = inf B
            if (vset_subset(bn, mm)) {
                VSet beyond = vset_diff(mm, bn);
                if (!beyond.empty() && vset_disjoint(beyond, an)) {
                    for (VSet c : {vset_union(beyond, VSet{sorted[cut]}), beyond}) {
                        VSet ac = vset_union(an, c);
                        if (!is_linear_set(p, ac) || !is_maximal_linear(ac)) continue;
                        out.push_back({sorted[cut], an, bn, c, 2});
                        break;
                    }
                }
            }
        }
    }
    // dedupe identical descriptors
    std::sort(out.begin(), out.end(), [](const DedekindGap& x, const DedekindGap& y) {
        return std::tie(x.at, x.condition, x.side_a, x.side_b, x.witness_c) <
               std::tie(y.at, y.condition, y.side_a, y.side_b, y.witness_c);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const DedekindGap& x, const DedekindGap& y) {
                              return x.at == y.at && x.condition == y.condition &&
                                     x.side_a == y.side_a && x.side_b == y.side_b &&
                                     x.witness_c == y.witness_c;
                          }),
              out.end());
    return out;
}

Pretree pretree_from_tree(const std::vector<std::string>& node_names,
                          const std::vector<std::pair<int, int>>& edges, const VSet& points) {
    const int n = static_cast<int>(node_names.size());
    std::vector<std::vector<int>> adj(n);
    for (auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    auto tree_path = [&](int a, int b) {
        std::vector<int> parent(n, -2), stack{a};
        parent[a] = -1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (parent[w] == -2) {
                    parent[w] = v;
                    stack.push_back(w);
                }
        }
        std::vector<int> rev;
        for (int v = b; v != -1; v = parent[v]) rev.push_back(v);
        return rev;
    };
    std::vector<std::string> names;
    for (int v : points) names.push_back(node_names[v]);
    std::vector<std::array<std::string, 3>> triples;
    for (int a : points)
        for (int b : points) {
            if (a >= b) continue;
            auto path = tree_path(a, b);
            for (int m : path)
                if (m != a && m != b && vset_contains(points, m))
                    triples.push_back({node_names[a], node_names[m], node_names[b]});
        }
    return Pretree(names, triples);
}

} // namespace cutcactus
