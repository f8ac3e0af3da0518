#include "platdiag/curves.hpp"

#include <algorithm>

#include "platdiag/errors.hpp"

namespace pd {

Curve trace(const SlotGraph& g, int start) {
    Curve c;
    int cur = start;
    do {
        c.push_back(cur);
        if (static_cast<int>(c.size()) > g.size()) throw InternalError("curve trace does not close");
        cur = g.next(cur);
    } while (cur != start);
    return c;
}

std::vector<Curve> all_curves(const SlotGraph& g) {
    std::vector<char> used(g.arc_count, 0);
    std::vector<Curve> out;
    for (int s = 0; s < g.size(); ++s) {
        if (used[g.arc_of[s]]) continue;
        Curve c = trace(g, s);
        for (int x : c) {
            if (used[g.arc_of[x]]) throw InternalError("curve runs twice over one arc");
            used[g.arc_of[x]] = 1;
        }
        out.push_back(std::move(c));
    }
    return out;
}

Curve reversed(const SlotGraph& g, const Curve& c) {
    Curve r;
    r.reserve(c.size());
    for (auto it = c.rbegin(); it != c.rend(); ++it) r.push_back(g.across[*it]);
    return r;
}

Curve rotated(const Curve& c, std::size_t at) {
    Curve r(c.begin() + static_cast<long>(at), c.end());
    r.insert(r.end(), c.begin(), c.begin() + static_cast<long>(at));
    return r;
}

int curve_through(const SlotGraph& g, const std::vector<Curve>& cs, int slot) {
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (int x : cs[i])
            if (x == slot || g.across[x] == slot) return static_cast<int>(i);
    return -1;
}

}  // namespace pd
