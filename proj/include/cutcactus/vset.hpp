#pragma once
#include <algorithm>
#include <string>
#include <vector>

namespace cutcactus {

// Vertex sets are sorted unique int vectors throughout; set algebra stays
// deterministic and cheap at desk scale.
using VSet = std::vector<int>;

inline void vset_normalize(VSet& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

inline VSet vset_of(std::initializer_list<int> xs) {
    VSet s(xs);
    vset_normalize(s);
    return s;
}

inline bool vset_contains(const VSet& s, int x) {
    return std::binary_search(s.begin(), s.end(), x);
}

inline VSet vset_union(const VSet& a, const VSet& b) {
    VSet r;
    r.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline VSet vset_intersect(const VSet& a, const VSet& b) {
    VSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline VSet vset_diff(const VSet& a, const VSet& b) {
    VSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline bool vset_subset(const VSet& small, const VSet& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline bool vset_disjoint(const VSet& a, const VSet& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else
            return false;
    }
    return true;
}

// Natural token order: purely numeric tokens sort numerically, everything else
// lexicographically, numbers before words. Vertex ids inherit this order.
bool natural_less(const std::string& a, const std::string& b);

} // namespace cutcactus
