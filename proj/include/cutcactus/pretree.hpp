#pragma once
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cutcactus/vset.hpp"

namespace cutcactus {

// Finite pretree with an extensionally stored betweenness relation:
// between[{x,z}] (x < z) = points strictly between x and z.
class Pretree {
public:
    Pretree() = default;
    Pretree(std::vector<std::string> point_names,
            std::vector<std::array<std::string, 3>> triples); // {x, y, z}: y between x,z

    static Pretree from_json_text(const std::string& text);
    std::string to_json_text() const;

    int n() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& point_names() const { return names_; }
    const std::string& pname(int p) const { return names_[p]; }
    int point(const std::string& name) const;

    bool is_between(int x, int y, int z) const; // y ∈ (x,z)
    VSet open_interval(int x, int y) const;
    VSet closed_interval(int x, int y) const;
    VSet interval(int x, int y, bool closed) const;

    void add_between(int x, int y, int z); // records y ∈ (x,z)

    const std::map<std::pair<int, int>, VSet>& relation() const { return between_; }

private:
    std::vector<std::string> names_;
    std::map<std::pair<int, int>, VSet> between_;
};

struct AxiomViolation {
    int axiom; // 1..4
    std::vector<int> points;
};

std::vector<AxiomViolation> check_axioms(const Pretree& p);
void require_axioms(const Pretree& p); // AxiomViolation error on failure

VSet medians(const Pretree& p, int x, int y, int z); // [x,y] ∩ [y,z] ∩ [z,x]
bool is_median_pretree(const Pretree& p);

struct RealizedTree {
    std::vector<std::string> node_names; // original names first, then medians
    std::vector<std::pair<int, int>> edges;
    std::map<int, int> point_to_node;                           // pretree point -> node
    std::vector<std::optional<std::array<int, 3>>> median_triple; // defining original points

    int degree(int v) const;
    std::vector<int> path(int a, int b) const; // node path, inclusive
    bool tree_between(int a, int b, int c) const; // node b strictly inside path(a,c)
    bool is_median_node(int v) const { return median_triple[v].has_value(); }
};

// Median-complete and build the canonical tree; NotTreelike when the relation
// escapes the axiom checker.
RealizedTree realize(const Pretree& p);

struct CompletionResult {
    Pretree completed;
    std::vector<std::pair<std::string, std::array<std::string, 3>>> added; // name, defining triple
};
CompletionResult median_completion(const Pretree& p);

struct ConvexPartition {
    std::vector<VSet> blocks;
};
// Quotient pretree: blocks named by their least member point.
Pretree quotient(const Pretree& p, const ConvexPartition& part);

struct LinearInsertion {
    int end_neg, end_pos;             // adjacent pair (-∞, +∞)
    std::vector<std::string> j_names; // the inserted linear order, ascending
};
Pretree insert_linear(const Pretree& p, const std::vector<LinearInsertion>& insertions);

// Maximal linearly ordered subsets, each sorted along its linear order
// starting from the lex-least end.
std::vector<VSet> maximal_linear_subsets(const Pretree& p);

struct DedekindGap {
    int at;           // the witnessing x ∈ L
    VSet side_a, side_b;
    VSet witness_c;
    int condition;    // 1: x = sup A ∈ A, 2: x = inf B ∈ B
};
std::vector<DedekindGap> dedekind_gaps(const Pretree& p, const VSet& linear_subset);

// Test/construction helper: pretree induced on `points` of an explicit tree
// via path betweenness.
Pretree pretree_from_tree(const std::vector<std::string>& node_names,
                          const std::vector<std::pair<int, int>>& edges, const VSet& points);

} // namespace cutcactus
