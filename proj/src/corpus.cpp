#include "cutcactus/corpus.hpp"

#include "cutcactus/errors.hpp"

namespace cutcactus::corpus {

namespace {

using EdgeList = std::vector<std::pair<std::string, std::string>>;

std::string v(const std::string& prefix, int i) { return prefix + std::to_string(i); }

void add_clique(EdgeList& es, const std::vector<std::string>& verts) {
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) es.emplace_back(verts[i], verts[j]);
}

Graph build(const std::string& name, const EdgeList& es) {
    std::vector<std::string> verts;
    for (auto& [a, b] : es) {
        verts.push_back(a);
        verts.push_back(b);
    }
    return Graph(name, verts, es);
}

} // namespace

Graph cycle(int n) {
    require(n >= 3, Errc::PreconditionFailed, "cycle needs n >= 3");
    EdgeList es;
    for (int i = 0; i < n; ++i) es.emplace_back(v("", i), v("", (i + 1) % n));
    return build("cycle" + std::to_string(n), es);
}

Graph complete(int n) {
    require(n >= 2, Errc::PreconditionFailed, "complete needs n >= 2");
    EdgeList es;
    std::vector<std::string> verts;
    for (int i = 0; i < n; ++i) verts.push_back(v("", i));
    add_clique(es, verts);
    return build("complete" + std::to_string(n), es);
}

Graph wheel_graph(int rim) {
    require(rim >= 5, Errc::PreconditionFailed, "wheel graph needs rim >= 5");
    EdgeList es;
    for (int i = 0; i < rim; ++i) {
        es.emplace_back(v("c", i), v("c", (i + 1) % rim));
        es.emplace_back("hub", v("c", i));
    }
    return build("wheel" + std::to_string(rim), es);
}

Graph double_wheel(int rim) {
    require(rim >= 5, Errc::PreconditionFailed, "double wheel needs rim >= 5");
    EdgeList es;
    for (int i = 0; i < rim; ++i) {
        es.emplace_back(v("c", i), v("c", (i + 1) % rim));
        es.emplace_back("hubA", v("c", i));
        es.emplace_back("hubB", v("c", i));
    }
    es.emplace_back("hubA", "hubB");
    return build("doublewheel" + std::to_string(rim), es);
}

Graph suspension(int strands, int sub) {
    require(strands >= 2, Errc::PreconditionFailed, "suspension needs >= 2 strands");
    require(sub == 0 || sub == 1, Errc::PreconditionFailed, "suspension sub must be 0 or 1");
    EdgeList es;
    for (int i = 0; i < strands; ++i) {
        if (sub == 0) {
            es.emplace_back("u", v("s", i));
            es.emplace_back(v("s", i), "w");
        } else {
            es.emplace_back("u", v("s", i) + "a");
            es.emplace_back(v("s", i) + "a", v("s", i) + "b");
            es.emplace_back(v("s", i) + "b", "w");
        }
    }
    return build("suspension" + std::to_string(strands) + "_" + std::to_string(sub), es);
}

Graph theta(int strands, int inner) {
    require(strands >= 2 && inner >= 1, Errc::PreconditionFailed, "theta needs strands >= 2, inner >= 1");
    EdgeList es;
    for (int i = 0; i < strands; ++i) {
        std::string prev = "u";
        for (int j = 0; j < inner; ++j) {
            std::string cur = "p" + std::to_string(i) + "_" + std::to_string(j);
            es.emplace_back(prev, cur);
            prev = cur;
        }
        es.emplace_back(prev, "w");
    }
    return build("theta" + std::to_string(strands) + "_" + std::to_string(inner), es);
}

Graph clique_chain(int blocks, int m, int privates) {
    require(blocks >= 2 && m >= 2 && privates >= 1, Errc::PreconditionFailed,
            "clique_chain needs blocks >= 2, m >= 2, privates >= 1");
    EdgeList es;
    auto iface = [&](int i) {
        std::vector<std::string> f;
        for (int j = 0; j < m; ++j) f.push_back("i" + std::to_string(i) + char('a' + j));
        return f;
    };
    for (int b = 0; b < blocks; ++b) {
        std::vector<std::string> block;
        if (b > 0)
            for (auto& x : iface(b - 1)) block.push_back(x);
        if (b + 1 < blocks)
            for (auto& x : iface(b)) block.push_back(x);
        for (int p = 0; p < privates; ++p) block.push_back("q" + std::to_string(b) + char('a' + p));
        add_clique(es, block);
    }
    return build("chain_m" + std::to_string(m) + "_b" + std::to_string(blocks), es);
}

Graph spider_chain(int blocks, int privates) {
    require(blocks >= 2 && privates >= 1, Errc::PreconditionFailed,
            "spider_chain needs blocks >= 2, privates >= 1");
    EdgeList es;
    for (int b = 0; b < blocks; ++b) {
        std::vector<std::string> block{"x"};
        if (b > 0) block.push_back("i" + std::to_string(b - 1));
        if (b + 1 < blocks) block.push_back("i" + std::to_string(b));
        for (int p = 0; p < privates; ++p) block.push_back("q" + std::to_string(b) + char('a' + p));
        add_clique(es, block);
    }
    return build("spider_b" + std::to_string(blocks), es);
}

Graph cycle_chain(const std::vector<int>& lengths) {
    require(!lengths.empty(), Errc::PreconditionFailed, "cycle_chain needs lengths");
    EdgeList es;
    int id = 0;
    std::string ga, gb; // shared edge of the previous cycle
    for (std::size_t c = 0; c < lengths.size(); ++c) {
        int len = lengths[c];
        require(len >= 4, Errc::PreconditionFailed, "cycle_chain cycles need length >= 4");
        std::vector<std::string> ring;
        if (c == 0) {
            for (int i = 0; i < len; ++i) ring.push_back(v("n", id++));
        } else {
            ring.push_back(ga);
            ring.push_back(gb);
            for (int i = 2; i < len; ++i) ring.push_back(v("n", id++));
        }
        for (int i = 0; i < len; ++i) es.emplace_back(ring[i], ring[(i + 1) % len]);
        // next cycle glues on the edge "opposite" the shared one
        int a = len / 2, b = a + 1;
        ga = ring[a];
        gb = ring[b];
    }
    return build("cyclechain" + std::to_string(lengths.size()), es);
}

Graph cyclic_ladder(int blocks, int privates) {
    require(blocks >= 4 && privates >= 1, Errc::PreconditionFailed,
            "cyclic_ladder needs blocks >= 4, privates >= 1");
    EdgeList es;
    auto iface = [&](int i) {
        return std::vector<std::string>{"u" + std::to_string(i), "v" + std::to_string(i)};
    };
    for (int b = 0; b < blocks; ++b) {
        std::vector<std::string> block;
        for (auto& x : iface(b)) block.push_back(x);
        for (auto& x : iface((b + 1) % blocks)) block.push_back(x);
        for (int p = 0; p < privates; ++p) block.push_back("q" + std::to_string(b) + char('a' + p));
        add_clique(es, block);
    }
    return build("cyclicladder" + std::to_string(blocks), es);
}

Graph tripod(int arm_blocks, int privates) {
    require(arm_blocks >= 1 && privates >= 1, Errc::PreconditionFailed,
            "tripod needs arm_blocks >= 1, privates >= 1");
    EdgeList es;
    std::vector<std::string> hub{"h0", "h1", "h2", "h3", "h4"};
    add_clique(es, hub);
    const std::vector<std::pair<std::string, std::string>> anchors{{"h0", "h1"}, {"h2", "h3"}, {"h0", "h4"}};
    for (int arm = 0; arm < 3; ++arm) {
        std::string pa = anchors[arm].first, pb = anchors[arm].second;
        for (int b = 0; b < arm_blocks; ++b) {
            std::string na = "a" + std::to_string(arm) + "_" + std::to_string(b) + "a";
            std::string nb = "a" + std::to_string(arm) + "_" + std::to_string(b) + "b";
            std::vector<std::string> block{pa, pb, na, nb};
            for (int p = 0; p < privates; ++p)
                block.push_back("t" + std::to_string(arm) + "_" + std::to_string(b) + char('a' + p));
            add_clique(es, block);
            pa = na;
            pb = nb;
        }
        // cap block so the last interface pair is a genuine cut
        std::vector<std::string> cap{pa, pb, "z" + std::to_string(arm)};
        add_clique(es, cap);
    }
    return build("tripod" + std::to_string(arm_blocks), es);
}

Graph complete_bipartite(int p, int q) {
    require(p >= 2 && q >= 2, Errc::PreconditionFailed, "complete_bipartite needs p,q >= 2");
    EdgeList es;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) es.emplace_back(v("a", i), v("b", j));
    return build("k" + std::to_string(p) + std::to_string(q), es);
}

Graph not4() {
    EdgeList es;
    add_clique(es, {"a1", "a2", "a3", "a4", "p1", "q1"});
    add_clique(es, {"a1", "a2", "x", "b1"});
    add_clique(es, {"a3", "x", "y", "b2"});
    add_clique(es, {"a4", "y", "b3", "b4"});
    add_clique(es, {"b1", "b2", "b3", "b4", "p5", "q5"});
    return build("not4", es);
}

Graph generate(const std::string& family, const std::map<std::string, std::string>& params) {
    auto geti = [&](const std::string& key, int dflt) {
        auto it = params.find(key);
        if (it == params.end()) return dflt;
        return std::stoi(it->second);
    };
    if (family == "cycle") return cycle(geti("n", 6));
    if (family == "complete") return complete(geti("n", 4));
    if (family == "wheel") return wheel_graph(geti("n", 6));
    if (family == "doublewheel") return double_wheel(geti("n", 6));
    if (family == "suspension") return suspension(geti("n", 4), geti("sub", 1));
    if (family == "theta") return theta(geti("strands", 3), geti("inner", 1));
    if (family == "theta-ladder")
        return clique_chain(geti("blocks", 7), geti("m", 2), geti("privates", 1));
    if (family == "spider") return spider_chain(geti("blocks", 7), geti("privates", 1));
    if (family == "cycle-chain") {
        std::vector<int> lens(static_cast<std::size_t>(geti("cycles", 2)), geti("len", 6));
        return cycle_chain(lens);
    }
    if (family == "cyclic-ladder") return cyclic_ladder(geti("blocks", 5), geti("privates", 1));
    if (family == "tripod") return tripod(geti("blocks", 2), geti("privates", 1));
    if (family == "k-bipartite") return complete_bipartite(geti("p", 3), geti("q", 3));
    if (family == "not4") return not4();
    fail(Errc::UnknownFamily, "no corpus family named " + family);
}

std::vector<CorpusEntry> standard_corpus() {
    std::vector<CorpusEntry> c;
    c.push_back({"cycle4", cycle(4), 2, 1});
    c.push_back({"cycle5", cycle(5), 2, 1});
    c.push_back({"cycle6", cycle(6), 2, 1});
    c.push_back({"cycle8", cycle(8), 2, 1});
    c.push_back({"cyclechain2", cycle_chain({6, 6}), 2, 2});
    c.push_back({"cyclechain3", cycle_chain({5, 6, 5}), 2, 3});
    c.push_back({"wheel5", wheel_graph(5), 3, 1});
    c.push_back({"wheel6", wheel_graph(6), 3, 1});
    c.push_back({"wheel7", wheel_graph(7), 3, 1});
    c.push_back({"doublewheel5", double_wheel(5), 4, 1});
    c.push_back({"doublewheel6", double_wheel(6), 4, 1});
    c.push_back({"cyclicladder5", cyclic_ladder(5, 1), 4, 1});
    c.push_back({"cyclicladder6", cyclic_ladder(6, 2), 4, 1});
    c.push_back({"not4", not4(), 4, 0});
    c.push_back({"chain_m2", clique_chain(7, 2, 1), 2, 0});
    c.push_back({"chain_m3", clique_chain(6, 3, 1), 3, 0});
    c.push_back({"chain_m4", clique_chain(5, 4, 1), 4, 0});
    c.push_back({"spider6", spider_chain(6, 1), 2, 0});
    c.push_back({"suspension4sub", suspension(4, 1), 2, 4});
    c.push_back({"suspension4", suspension(4, 0), 2, 0});
    c.push_back({"theta3", theta(3, 1), 2, 0});
    c.push_back({"theta3long", theta(3, 4), 2, 3});
    c.push_back({"tripod2", tripod(2, 1), 2, 0});
    return c;
}

} // namespace cutcactus::corpus
