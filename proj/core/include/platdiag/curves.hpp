#pragma once

#include <vector>

namespace pd {

// Boundary vertices of the disks of an open Heegaard diagram. Each slot is the
// end of one arc (across) and is identified with one slot on the partner
// disk (glue). A curve step leaves a disk through a slot, runs along the arc
// and re-enters the partner disk through glue[across[slot]].
struct SlotGraph {
    std::vector<int> across;
    std::vector<int> glue;
    std::vector<int> arc_of;
    int arc_count = 0;

    int size() const { return static_cast<int>(across.size()); }
    int next(int slot) const { return glue[across[slot]]; }
};

// Oriented closed curve, listed as the slots it leaves through.
using Curve = std::vector<int>;

Curve trace(const SlotGraph& g, int start);
// Every unoriented cycle once, each arc in exactly one curve. Throws
// InternalError if some curve runs over an arc twice.
std::vector<Curve> all_curves(const SlotGraph& g);
Curve reversed(const SlotGraph& g, const Curve& c);
Curve rotated(const Curve& c, std::size_t at);
// Index of the curve in cs that passes through slot (either direction), or -1.
int curve_through(const SlotGraph& g, const std::vector<Curve>& cs, int slot);

}  // namespace pd
