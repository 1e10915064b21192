#pragma once
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cutcactus/vset.hpp"

namespace cutcactus {

// Finite connected simple graph standing in for a continuum. Vertices are
// dense ints 0..n-1 ordered by natural token order of their names, so int
// order is the canonical order everywhere.
class Graph {
public:
    Graph() = default;
    Graph(std::string name, std::vector<std::string> vertex_names,
          std::vector<std::pair<std::string, std::string>> edges);

    static Graph from_edge_list_text(const std::string& text, const std::string& name);
    static Graph from_json_text(const std::string& text);
    static Graph load_file(const std::string& path);

    const std::string& name() const { return name_; }
    int n() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::string& vname(int v) const { return names_[v]; }
    int vertex(const std::string& name) const; // throws if unknown
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    bool has_edge(int u, int v) const;

    VSet all_vertices() const;
    // Connected components of G - removed, each sorted; component list sorted
    // by least vertex.
    std::vector<VSet> components_without(const VSet& removed) const;
    bool is_connected_subset(const VSet& subset) const;
    // subset vertices adjacent to something outside subset
    VSet boundary(const VSet& subset) const;
    VSet neighbors_in(const VSet& of, const VSet& candidates) const;

    std::string to_json_text() const;

private:
    void finalize();
    std::string name_;
    std::vector<std::string> names_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
};

} // namespace cutcactus
