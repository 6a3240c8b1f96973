#pragma once

#include <memory>
#include <vector>

#include "thintree/canonical.hpp"
#include "thintree/interval.hpp"

namespace thintree {

// One call frame of the alternating chain recursion.  The trace is kept so
// cover extraction can replay the descent that visited a given interval.
enum class TraceKind {
    Leaf,    // empty interval, no work
    Rings,   // found a chain, recursed into the rings between its cuts
    Flip,    // no chain in this direction, retried from the other side
    Shrink,  // both directions empty twice, dropped the left position
};

struct TraceNode {
    Interval active{0, 0};
    int depth = 0;
    int untouched = 0;
    TraceKind kind = TraceKind::Leaf;
    bool prefix_round = false;  // Rings only: chain grows from the left end
    std::vector<int> chain;     // Rings only: x_1 < ... < x_m
    bool emitted = false;       // the active interval's cut joined the family
    std::vector<std::unique_ptr<TraceNode>> children;
};

struct MakeLamResult {
    std::vector<Interval> family;  // sorted by (l, r), duplicates removed
    std::unique_ptr<TraceNode> trace;
};

// Builds a laminar family of near-minimum cuts from the special structure of
// a canonical table.  Every member interval is special or the difference of
// two crossing special intervals, so the corresponding cuts stay within a
// 4-eta factor of the minimum cut; this needs eta <= 1/20.
MakeLamResult make_lam(const CanonicalTable& table);

// True when no two intervals in the list cross.
bool intervals_laminar(const std::vector<Interval>& family);

}  // namespace thintree
