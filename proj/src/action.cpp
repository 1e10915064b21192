#include "cutcactus/action.hpp"

#include <map>
#include <set>
#include <sstream>

#include "cutcactus/errors.hpp"
#include "json.hpp"

namespace cutcactus {

using nlohmann::json;

GroupAction GroupAction::from_json_text(const std::string& text, const Graph& host) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        fail(Errc::ParseError, std::string("bad action json: ") + e.what());
    }
    GroupAction a;
    a.word_bound = j.value("wordBound", 8);
    for (auto& gj : j.at("generators")) {
        Permutation p(host.n());
        std::vector<char> seen(host.n(), 0);
        auto& pm = gj.at("permutation");
        require(static_cast<int>(pm.size()) == host.n(), Errc::ParseError,
                "permutation must map every vertex");
        for (auto it = pm.begin(); it != pm.end(); ++it) {
            int from = host.vertex(it.key());
            int to = host.vertex(it.value().get<std::string>());
            p[from] = to;
            require(!seen[to], Errc::ParseError, "permutation image repeated");
            seen[to] = 1;
        }
        a.generators.emplace_back(gj.at("name").get<std::string>(), p);
    }
    return a;
}

std::string GroupAction::to_json_text(const Graph& host) const {
    json j;
    j["wordBound"] = word_bound;
    json gens = json::array();
    for (auto& [name, p] : generators) {
        json pm = json::object();
        for (int v = 0; v < host.n(); ++v) pm[host.vname(v)] = host.vname(p[v]);
        gens.push_back({{"name", name}, {"permutation", pm}});
    }
    j["generators"] = gens;
    return j.dump(2) + "\n";
}

void validate_action(const Graph& g, const GroupAction& a) {
    for (auto& [name, p] : a.generators) {
        require(static_cast<int>(p.size()) == g.n(), Errc::NotAutomorphism,
                "generator " + name + " is not a vertex permutation");
        for (auto [u, v] : g.edges())
            require(g.has_edge(p[u], p[v]), Errc::NotAutomorphism,
                    "generator " + name + " does not preserve edges");
    }
    require(a.word_bound >= 0, Errc::PreconditionFailed, "negative word bound");
}

namespace {

Permutation identity_perm(int n) {
    Permutation p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

Permutation inverse_perm(const Permutation& p) {
    Permutation q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
    return q;
}

Permutation compose(const Permutation& f, const Permutation& g) { // f after g
    Permutation h(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) h[i] = f[g[i]];
    return h;
}

} // namespace

std::vector<GroupElement> enumerate_ball(const Graph& g, const GroupAction& a) {
    validate_action(g, a);
    // letters: g0, g0', g1, g1', ...
    std::vector<std::pair<std::string, Permutation>> letters;
    for (auto& [name, p] : a.generators) {
        letters.emplace_back(name, p);
        letters.emplace_back(name + "'", inverse_perm(p));
    }
    std::vector<GroupElement> ball{{"", identity_perm(g.n())}};
    std::map<Permutation, std::string> seen{{ball[0].perm, ""}};
    std::vector<GroupElement> frontier = ball;
    for (int len = 1; len <= a.word_bound; ++len) {
        std::vector<GroupElement> next;
        for (auto& el : frontier)
            for (auto& [lname, lperm] : letters) {
                Permutation q = compose(lperm, el.perm); // left action: letter ∘ word
                std::string w = el.word.empty() ? lname : el.word + " " + lname;
                if (seen.count(q)) continue;
                seen.emplace(q, w);
                next.push_back({w, q});
            }
        if (next.empty()) break;
        for (auto& e : next) ball.push_back(e);
        frontier = std::move(next);
    }
    return ball;
}

std::vector<int> induce_node_perm(const Graph& g, const CactusTree& t, const Permutation& perm) {
    const int nn = static_cast<int>(t.realized.node_names.size());
    std::vector<int> table(nn, -1);
    auto map_set = [&](const VSet& s) {
        VSet r;
        for (int v : s) r.push_back(perm[v]);
        vset_normalize(r);
        return r;
    };
    // element nodes by carrier image
    for (std::size_t e = 0; e < t.elements.size(); ++e) {
        VSet image = map_set(t.elements[e].carrier());
        int target = -1;
        for (std::size_t f = 0; f < t.elements.size(); ++f)
            if (t.elements[f].carrier() == image &&
                t.elements[f].kind == t.elements[e].kind) {
                target = static_cast<int>(f);
                break;
            }
        require(target >= 0, Errc::NotAutomorphism,
                "image of element " + t.elements[e].name + " is not a cactus element");
        table[t.node_of_element(static_cast<int>(e))] = t.node_of_element(target);
    }
    // medians by functoriality
    auto tree_median = [&](int x, int y, int z) {
        auto pxy = t.realized.path(x, y);
        auto pyz = t.realized.path(y, z);
        auto pzx = t.realized.path(z, x);
        VSet sx(pxy.begin(), pxy.end()), sy(pyz.begin(), pyz.end()), sz(pzx.begin(), pzx.end());
        vset_normalize(sx);
        vset_normalize(sy);
        vset_normalize(sz);
        VSet med = vset_intersect(vset_intersect(sx, sy), sz);
        require(med.size() == 1, Errc::InternalError, "tree median not unique");
        return med[0];
    };
    for (int v = 0; v < nn; ++v) {
        if (!t.realized.is_median_node(v)) continue;
        auto tr = *t.realized.median_triple[v];
        int ix = table[t.realized.point_to_node.at(tr[0])];
        int iy = table[t.realized.point_to_node.at(tr[1])];
        int iz = table[t.realized.point_to_node.at(tr[2])];
        int img = tree_median(ix, iy, iz);
        require(t.realized.is_median_node(img) || t.element_of_node(img) >= 0, Errc::InternalError,
                "median image is not a node");
        table[v] = img;
    }
    // bijectivity + edge preservation
    std::vector<char> hit(nn, 0);
    for (int v = 0; v < nn; ++v) {
        require(table[v] >= 0 && !hit[table[v]], Errc::NotAutomorphism,
                "induced node map is not a permutation");
        hit[table[v]] = 1;
    }
    std::set<std::pair<int, int>> edge_set(t.realized.edges.begin(), t.realized.edges.end());
    for (auto [u, v] : t.realized.edges) {
        int a = table[u], b = table[v];
        if (a > b) std::swap(a, b);
        require(edge_set.count({a, b}) > 0, Errc::NotAutomorphism,
                "induced node map does not preserve tree edges");
    }
    return table;
}

CactusAction induce_on_cactus(const GroupAction& a, const CactusTree& t) {
    validate_action(t.host, a);
    CactusAction ca;
    for (auto& [name, p] : a.generators)
        ca.generator_tables.emplace_back(name, induce_node_perm(t.host, t, p));
    return ca;
}

std::vector<int> CactusAction::node_perm_of_word(const std::string& word) const {
    require(!generator_tables.empty(), Errc::PreconditionFailed, "no generators");
    const int nn = static_cast<int>(generator_tables[0].second.size());
    std::vector<int> acc(nn);
    for (int i = 0; i < nn; ++i) acc[i] = i;
    std::istringstream in(word);
    std::string letter;
    std::vector<std::string> letters;
    while (in >> letter) letters.push_back(letter);
    for (auto& l : letters) {
        bool inv = !l.empty() && l.back() == '\'';
        std::string base = inv ? l.substr(0, l.size() - 1) : l;
        const std::vector<int>* table = nullptr;
        for (auto& [name, tb] : generator_tables)
            if (name == base) table = &tb;
        require(table != nullptr, Errc::PreconditionFailed, "unknown letter " + l);
        std::vector<int> use = *table;
        if (inv) {
            std::vector<int> invt(nn);
            for (int i = 0; i < nn; ++i) invt[(*table)[i]] = i;
            use = invt;
        }
        // left action to match enumerate_ball's composition order
        std::vector<int> next(nn);
        for (int i = 0; i < nn; ++i) next[i] = use[acc[i]];
        acc = next;
    }
    return acc;
}

Classification classify(const RealizedTree& tree, const std::vector<int>& node_perm) {
    Classification c;
    for (std::size_t v = 0; v < node_perm.size(); ++v)
        if (node_perm[v] == static_cast<int>(v)) c.fixed_nodes.push_back(static_cast<int>(v));
    if (!c.fixed_nodes.empty()) {
        c.kind = Classification::Kind::Elliptic;
        return c;
    }
    for (auto [u, v] : tree.edges)
        if (node_perm[u] == v && node_perm[v] == u) {
            c.kind = Classification::Kind::Inversion;
            c.inverted_edge = {u, v};
            return c;
        }
    // No fixed point and no inverted edge cannot happen for a total
    // automorphism of a finite tree; surface the axis anyway.
    c.kind = Classification::Kind::Hyperbolic;
    int best = -1;
    std::size_t bestd = SIZE_MAX;
    for (std::size_t v = 0; v < node_perm.size(); ++v) {
        std::size_t d = tree.path(static_cast<int>(v), node_perm[v]).size();
        if (d < bestd) {
            bestd = d;
            best = static_cast<int>(v);
        }
    }
    for (std::size_t v = 0; v < node_perm.size(); ++v)
        if (tree.path(static_cast<int>(v), node_perm[v]).size() == bestd)
            c.axis.push_back(static_cast<int>(v));
    (void)best;
    return c;
}

std::optional<GroupElement> neumann_search(const Graph& g, const GroupAction& a,
                                           const CactusTree& t, const VSet& node_set) {
    auto ball = enumerate_ball(g, a);
    CactusAction ca = induce_on_cactus(a, t);
    for (auto& el : ball) {
        auto table = ca.node_perm_of_word(el.word);
        VSet image;
        for (int v : node_set) image.push_back(table[v]);
        vset_normalize(image);
        if (vset_disjoint(image, node_set)) {
            // post-verify straight from the defining condition
            for (int v : node_set) require(!vset_contains(node_set, table[v]), Errc::InternalError,
                                           "neumann search post-check failed");
            return el;
        }
    }
    return std::nullopt;
}

VSet virtually_fixed_points(const Graph& g, const GroupAction& a, const CactusTree& t,
                            int max_orbit) {
    auto ball = enumerate_ball(g, a);
    CactusAction ca = induce_on_cactus(a, t);
    std::vector<std::vector<int>> tables;
    for (auto& el : ball) tables.push_back(ca.node_perm_of_word(el.word));
    VSet out;
    for (std::size_t v = 0; v < t.realized.node_names.size(); ++v) {
        std::set<int> orbit;
        for (auto& tb : tables) orbit.insert(tb[v]);
        if (static_cast<int>(orbit.size()) <= max_orbit) out.push_back(static_cast<int>(v));
    }
    return out;
}

} // namespace cutcactus
