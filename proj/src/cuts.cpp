#include "cutcactus/cuts.hpp"

#include <cstdint>
#include <functional>
#include <queue>
#include <set>

#include "cutcactus/errors.hpp"

namespace cutcactus {

namespace {

// C(n,k) clamped so budget comparisons cannot overflow.
std::uint64_t comb_clamped(int n, int k, std::uint64_t clamp) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i);
        r /= static_cast<std::uint64_t>(i);
        if (r > clamp) return clamp + 1;
    }
    return r;
}

bool disconnects(const Graph& g, const VSet& s) {
    if (static_cast<int>(s.size()) >= g.n() - 1) return false;
    return g.components_without(s).size() >= 2;
}

template <typename F>
void for_each_subset(int n, int k, F&& f) {
    VSet idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (f(idx)) return;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// ---- max-flow route: vertex splitting + Dinic -------------------------------

struct Dinic {
    struct Arc {
        int to;
        int cap;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> at;
    std::vector<int> level, it;

    explicit Dinic(int n) : at(n), level(n), it(n) {}

    void add(int u, int v, int cap) {
        at[u].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({v, cap});
        at[v].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({u, 0});
    }

    bool bfs(int s, int t) {
        std::fill(level.begin(), level.end(), -1);
        std::queue<int> q;
        level[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int id : at[v]) {
                if (arcs[id].cap > 0 && level[arcs[id].to] < 0) {
                    level[arcs[id].to] = level[v] + 1;
                    q.push(arcs[id].to);
                }
            }
        }
        return level[t] >= 0;
    }

    int dfs(int v, int t, int f) {
        if (v == t) return f;
        for (int& i = it[v]; i < static_cast<int>(at[v].size()); ++i) {
            int id = at[v][i];
            Arc& a = arcs[id];
            if (a.cap > 0 && level[a.to] == level[v] + 1) {
                int d = dfs(a.to, t, std::min(f, a.cap));
                if (d > 0) {
                    a.cap -= d;
                    arcs[id ^ 1].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    int max_flow(int s, int t, int stop_above) {
        int flow = 0;
        while (bfs(s, t)) {
            std::fill(it.begin(), it.end(), 0);
            while (int f = dfs(s, t, 1 << 28)) {
                flow += f;
                if (flow > stop_above) return flow;
            }
        }
        return flow;
    }
};

// Split network: node 2v = v_in, 2v+1 = v_out; unit arc in->out except at the
// terminals, "infinite" arcs along graph edges both ways.
Dinic build_split_network(const Graph& g, int s, int t) {
    const int inf = 1 << 28;
    Dinic d(2 * g.n());
    for (int v = 0; v < g.n(); ++v) d.add(2 * v, 2 * v + 1, (v == s || v == t) ? inf : 1);
    for (auto [u, v] : g.edges()) {
        d.add(2 * u + 1, 2 * v, inf);
        d.add(2 * v + 1, 2 * u, inf);
    }
    return d;
}

int vertex_flow(const Graph& g, int s, int t, int stop_above) {
    Dinic d = build_split_network(g, s, t);
    return d.max_flow(2 * s + 1, 2 * t, stop_above);
}

// All minimum (s,t) vertex separators via closed sets of the residual DAG
// (Picard-Queyranne on the split network).
void min_st_vertex_cuts(const Graph& g, int s, int t, int m, std::set<VSet>& out) {
    Dinic d = build_split_network(g, s, t);
    int f = d.max_flow(2 * s + 1, 2 * t, g.n() + 1);
    if (f != m) return;
    int N = 2 * g.n();

    // residual adjacency
    std::vector<std::vector<int>> radj(N);
    for (int v = 0; v < N; ++v)
        for (int id : d.at[v])
            if (d.arcs[id].cap > 0) radj[v].push_back(d.arcs[id].to);

    // Tarjan SCC, iterative
    std::vector<int> comp(N, -1), low(N), num(N, -1), stk;
    int idx = 0, ncomp = 0;
    std::vector<char> on(N, 0);
    for (int root = 0; root < N; ++root) {
        if (num[root] >= 0) continue;
        std::vector<std::pair<int, std::size_t>> call{{root, 0}};
        while (!call.empty()) {
            auto& [v, pi] = call.back();
            if (pi == 0) {
                num[v] = low[v] = idx++;
                stk.push_back(v);
                on[v] = 1;
            }
            if (pi < radj[v].size()) {
                int w = radj[v][pi++];
                if (num[w] < 0)
                    call.emplace_back(w, 0);
                else if (on[w])
                    low[v] = std::min(low[v], num[w]);
            } else {
                if (low[v] == num[v]) {
                    while (true) {
                        int w = stk.back();
                        stk.pop_back();
                        on[w] = 0;
                        comp[w] = ncomp;
                        if (w == v) break;
                    }
                    ++ncomp;
                }
                int vv = v;
                call.pop_back();
                if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[vv]);
            }
        }
    }

    // condensed DAG successor lists
    std::vector<std::set<int>> succ(ncomp);
    for (int v = 0; v < N; ++v)
        for (int w : radj[v])
            if (comp[v] != comp[w]) succ[comp[v]].insert(comp[w]);

    int cs = comp[2 * s + 1], ct = comp[2 * t];
    // forced-in: successor closure of cs; forced-out: everything reaching ct
    std::vector<char> forced_in(ncomp, 0), reaches_t(ncomp, 0);
    {
        std::vector<int> q{cs};
        forced_in[cs] = 1;
        while (!q.empty()) {
            int c = q.back();
            q.pop_back();
            for (int w : succ[c])
                if (!forced_in[w]) {
                    forced_in[w] = 1;
                    q.push_back(w);
                }
        }
        std::vector<std::vector<int>> pred(ncomp);
        for (int c = 0; c < ncomp; ++c)
            for (int w : succ[c]) pred[w].push_back(c);
        q = {ct};
        reaches_t[ct] = 1;
        while (!q.empty()) {
            int c = q.back();
            q.pop_back();
            for (int w : pred[c])
                if (!reaches_t[w]) {
                    reaches_t[w] = 1;
                    q.push_back(w);
                }
        }
    }
    require(!forced_in[ct], Errc::InternalError, "residual path to sink after max flow");
    for (int c = 0; c < ncomp; ++c)
        require(!(forced_in[c] && reaches_t[c]), Errc::InternalError, "inconsistent residual closure");

    std::vector<int> free_comps;
    for (int c = 0; c < ncomp; ++c)
        if (!forced_in[c] && !reaches_t[c]) free_comps.push_back(c);

    // Enumerate successor-closed choices over the free comps: S = forced_in +
    // chosen. Choosing c forces succ(c) (within free). Recursion over free list.
    std::vector<char> chosen(ncomp, 0);
    VSet cutv;
    auto emit = [&]() {
        cutv.clear();
        auto in_S = [&](int node) { return forced_in[comp[node]] || chosen[comp[node]]; };
        for (int v = 0; v < g.n(); ++v) {
            if (v == s || v == t) continue;
            if (in_S(2 * v) && !in_S(2 * v + 1)) cutv.push_back(v);
        }
        require(static_cast<int>(cutv.size()) == m, Errc::InternalError, "closed set of wrong cut size");
        out.insert(cutv);
    };

    // force-closure helper over free comps; returns list of newly set, or
    // abort when a required comp reaches t.
    std::uint64_t steps = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        require(++steps < 5'000'000, Errc::BudgetExceeded, "min-cut closed-set enumeration too large");
        if (i == free_comps.size()) {
            emit();
            return;
        }
        int c = free_comps[i];
        // already pulled in by an earlier choice: no branch
        if (chosen[c]) {
            rec(i + 1);
            return;
        }
        // branch 1: exclude c (nothing to do; closure respected because any
        // earlier chosen comp would have forced c already)
        rec(i + 1);
        // branch 2: include c and its successor closure
        std::vector<int> newly;
        bool ok = true;
        std::vector<int> q{c};
        while (!q.empty() && ok) {
            int x = q.back();
            q.pop_back();
            if (chosen[x] || forced_in[x]) continue;
            if (reaches_t[x]) {
                ok = false;
                break;
            }
            chosen[x] = 1;
            newly.push_back(x);
            for (int w : succ[x]) q.push_back(w);
        }
        if (ok) rec(i + 1);
        for (int x : newly) chosen[x] = 0;
    };
    rec(0);
}

} // namespace

std::optional<int> thickness_brute(const Graph& g, std::uint64_t budget) {
    std::uint64_t used = 0;
    for (int k = 1; k <= g.n() - 2; ++k) {
        std::uint64_t c = comb_clamped(g.n(), k, budget);
        require(used + c <= budget, Errc::BudgetExceeded,
                "brute-force scan over size-" + std::to_string(k) + " subsets exceeds budget");
        used += c;
        bool found = false;
        for_each_subset(g.n(), k, [&](const VSet& s) {
            if (disconnects(g, s)) {
                found = true;
                return true;
            }
            return false;
        });
        if (found) return k;
    }
    return std::nullopt;
}

std::optional<int> thickness_flow(const Graph& g) {
    int best = g.n(); // above any possible separator size
    for (int s = 0; s < g.n(); ++s)
        for (int t = s + 1; t < g.n(); ++t) {
            if (g.has_edge(s, t)) continue;
            best = std::min(best, vertex_flow(g, s, t, best));
        }
    if (best >= g.n() - 1) return std::nullopt; // complete-ish: no separator
    return best;
}

std::vector<Cut> enumerate_min_cuts_brute(const Graph& g, std::uint64_t budget) {
    auto m = thickness_brute(g, budget);
    require(m.has_value(), Errc::NoThickness, "graph has no separating vertex set");
    require(comb_clamped(g.n(), *m, budget) <= budget, Errc::BudgetExceeded,
            "enumeration at thickness exceeds budget");
    std::vector<Cut> cuts;
    for_each_subset(g.n(), *m, [&](const VSet& s) {
        if (disconnects(g, s)) cuts.push_back(Cut{s});
        return false;
    });
    return cuts; // lex order by construction
}

std::vector<Cut> enumerate_min_cuts_flow(const Graph& g) {
    auto m = thickness_flow(g);
    require(m.has_value(), Errc::NoThickness, "graph has no separating vertex set");
    std::set<VSet> found;
    for (int s = 0; s < g.n(); ++s)
        for (int t = s + 1; t < g.n(); ++t) {
            if (g.has_edge(s, t)) continue;
            min_st_vertex_cuts(g, s, t, *m, found);
        }
    std::vector<Cut> cuts;
    cuts.reserve(found.size());
    for (auto& v : found) cuts.push_back(Cut{v});
    return cuts;
}

std::optional<int> thickness(const Graph& g, const EnumOptions& opts) {
    return opts.use_fast ? thickness_flow(g) : thickness_brute(g, opts.budget);
}

std::vector<Cut> enumerate_min_cuts(const Graph& g, const EnumOptions& opts) {
    return opts.use_fast ? enumerate_min_cuts_flow(g) : enumerate_min_cuts_brute(g, opts.budget);
}

bool separates(const Graph& g, const Cut& a, const VSet& s) {
    VSet rest = vset_diff(s, a.members);
    if (rest.empty()) return false;
    auto comps = g.components_without(a.members);
    int touched = 0;
    for (const auto& c : comps)
        if (!vset_disjoint(c, rest)) ++touched;
    return touched >= 2;
}

bool crosses(const Graph& g, const Cut& a, const Cut& b) {
    if (a.members == b.members) return false;
    return separates(g, a, b.members);
}

Decomposition make_decomposition(const Graph& g, const Cut& cut, const VSet& side_m_components) {
    VSet m = vset_union(side_m_components, cut.members);
    VSet n = vset_diff(g.all_vertices(), side_m_components);
    return Decomposition{cut, m, n};
}

std::vector<Decomposition> decompositions_by(const Graph& g, const Cut& cut) {
    auto comps = g.components_without(cut.members);
    require(comps.size() >= 2, Errc::PreconditionFailed, "set does not separate the graph");
    int k = static_cast<int>(comps.size());
    std::vector<Decomposition> out;
    // component 0 always on side M: each split counted once
    for (std::uint64_t mask = 0; mask < (1ull << (k - 1)); ++mask) {
        VSet side_m, side_n;
        for (int i = 0; i < k; ++i) {
            bool to_m = (i == 0) || (mask >> (i - 1)) & 1;
            for (int v : comps[i]) (to_m ? side_m : side_n).push_back(v);
        }
        if (side_n.empty()) continue;
        VSet m = vset_union(side_m, cut.members);
        VSet n = vset_union(side_n, cut.members);
        // singleton-continuum sides are omitted per the decomposition contract
        if (m.size() <= cut.members.size() || n.size() <= cut.members.size()) continue;
        require(g.is_connected_subset(m) && g.is_connected_subset(n), Errc::InternalError,
                "decomposition side not connected; min-cut attachment violated");
        out.push_back(Decomposition{cut, std::move(m), std::move(n)});
    }
    std::sort(out.begin(), out.end(),
              [](const Decomposition& a, const Decomposition& b) { return a.side_m < b.side_m; });
    return out;
}

std::optional<VSet> side_containing(const Graph& g, const Cut& cut, const VSet& what) {
    VSet rest = vset_diff(what, cut.members);
    auto comps = g.components_without(cut.members);
    if (rest.empty()) return std::nullopt; // contained in the cut itself: every side works
    VSet side;
    for (const auto& c : comps)
        if (!vset_disjoint(c, rest))
            for (int v : c) side.push_back(v);
    vset_normalize(side);
    if (side.empty()) return std::nullopt;
    VSet full = vset_union(side, cut.members);
    if (full.size() == static_cast<std::size_t>(g.n())) return std::nullopt; // other side empty
    return full;
}

Cut make_cut(const Graph& g, const VSet& members, int expected_thickness) {
    require(static_cast<int>(members.size()) == expected_thickness, Errc::PreconditionFailed,
            "cut size differs from thickness");
    require(disconnects(g, members), Errc::PreconditionFailed, "set does not disconnect the graph");
    return Cut{members};
}

} // namespace cutcactus
