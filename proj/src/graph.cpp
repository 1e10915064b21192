#include "cutcactus/graph.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "cutcactus/errors.hpp"
#include "json.hpp"

namespace cutcactus {

using nlohmann::json;

Graph::Graph(std::string name, std::vector<std::string> vertex_names,
             std::vector<std::pair<std::string, std::string>> edges)
    : name_(std::move(name)) {
    std::sort(vertex_names.begin(), vertex_names.end(), natural_less);
    vertex_names.erase(std::unique(vertex_names.begin(), vertex_names.end()), vertex_names.end());
    names_ = std::move(vertex_names);
    std::map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(names_.size()); ++i) index[names_[i]] = i;
    adj_.assign(names_.size(), {});
    std::vector<std::pair<int, int>> es;
    for (auto& [a, b] : edges) {
        auto ia = index.find(a), ib = index.find(b);
        require(ia != index.end() && ib != index.end(), Errc::InvalidGraph,
                "edge endpoint not in vertex list: " + a + " " + b);
        int u = ia->second, v = ib->second;
        require(u != v, Errc::InvalidGraph, "loop edge at " + a);
        if (u > v) std::swap(u, v);
        es.emplace_back(u, v);
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    edges_ = std::move(es);
    finalize();
}

void Graph::finalize() {
    require(n() >= 2, Errc::InvalidGraph, "graph needs at least 2 vertices");
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
    require(is_connected_subset(all_vertices()), Errc::InvalidGraph, "graph is not connected");
}

Graph Graph::from_edge_list_text(const std::string& text, const std::string& name) {
    std::vector<std::string> verts;
    std::vector<std::pair<std::string, std::string>> edges;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string a, b;
        if (!(ls >> a)) continue;
        require(static_cast<bool>(ls >> b), Errc::ParseError, "edge line with one token: " + line);
        verts.push_back(a);
        verts.push_back(b);
        edges.emplace_back(a, b);
    }
    require(!edges.empty(), Errc::ParseError, "empty edge list");
    return Graph(name, verts, edges);
}

Graph Graph::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        fail(Errc::ParseError, std::string("bad graph json: ") + e.what());
    }
    std::vector<std::string> verts;
    for (auto& v : j.at("vertices")) verts.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto& e : j.at("edges")) {
        require(e.is_array() && e.size() == 2, Errc::ParseError, "edge entries must be pairs");
        auto tok = [](const json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
        edges.emplace_back(tok(e[0]), tok(e[1]));
    }
    return Graph(j.value("name", "graph"), verts, edges);
}

Graph Graph::load_file(const std::string& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), Errc::ParseError, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return from_json_text(text);
    std::string base = path;
    auto slash = base.find_last_of('/');
    if (slash != std::string::npos) base = base.substr(slash + 1);
    return from_edge_list_text(text, base);
}

int Graph::vertex(const std::string& name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name, natural_less);
    require(it != names_.end() && *it == name, Errc::InvalidGraph, "unknown vertex " + name);
    return static_cast<int>(it - names_.begin());
}

bool Graph::has_edge(int u, int v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

VSet Graph::all_vertices() const {
    VSet all(n());
    for (int i = 0; i < n(); ++i) all[i] = i;
    return all;
}

std::vector<VSet> Graph::components_without(const VSet& removed) const {
    std::vector<char> gone(n(), 0), seen(n(), 0);
    for (int v : removed) gone[v] = 1;
    std::vector<VSet> comps;
    std::vector<int> stack;
    for (int s = 0; s < n(); ++s) {
        if (gone[s] || seen[s]) continue;
        VSet comp;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : adj_[v])
                if (!gone[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

bool Graph::is_connected_subset(const VSet& subset) const {
    if (subset.empty()) return true;
    std::vector<char> in(n(), 0), seen(n(), 0);
    for (int v : subset) in[v] = 1;
    std::vector<int> stack{subset[0]};
    seen[subset[0]] = 1;
    std::size_t count = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++count;
        for (int w : adj_[v])
            if (in[w] && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return count == subset.size();
}

VSet Graph::boundary(const VSet& subset) const {
    VSet out;
    for (int v : subset)
        for (int w : adj_[v])
            if (!vset_contains(subset, w)) {
                out.push_back(v);
                break;
            }
    return out;
}

VSet Graph::neighbors_in(const VSet& of, const VSet& candidates) const {
    VSet r;
    for (int c : candidates) {
        for (int w : adj_[c])
            if (vset_contains(of, w)) {
                r.push_back(c);
                break;
            }
    }
    return r;
}

std::string Graph::to_json_text() const {
    json j;
    j["name"] = name_;
    j["vertices"] = names_;
    json es = json::array();
    for (auto [u, v] : edges_) es.push_back({names_[u], names_[v]});
    j["edges"] = es;
    return j.dump(2) + "\n";
}

} // namespace cutcactus
