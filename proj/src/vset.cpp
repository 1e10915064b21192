#include "cutcactus/vset.hpp"

#include <cctype>

namespace cutcactus {

static bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

bool natural_less(const std::string& a, const std::string& b) {
    bool na = all_digits(a), nb = all_digits(b);
    if (na && nb) {
        if (a.size() != b.size()) return a.size() < b.size(); // no leading-zero ids expected
        return a < b;
    }
    if (na != nb) return na; // numbers first
    return a < b;
}

} // namespace cutcactus
