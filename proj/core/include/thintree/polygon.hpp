#pragma once

#include <vector>

#include "thintree/crossing.hpp"
#include "thintree/interval.hpp"

namespace thintree {

/// Combinatorial polygon layout of one crossing component: a circular order
/// of the "outside" atoms such that every cut of the component occupies a
/// contiguous stretch of them, never covering the root atom.  The remaining
/// atoms are "inside" and may sit on either side of each cut.
struct PolygonRep {
    std::vector<VertexSet> atom_sets;  ///< component atoms, by atom id
    std::vector<int> outside;          ///< atom ids in circular order; outside[0] = root
    std::vector<int> inside;           ///< atom ids, ascending
    std::vector<Interval> interval_of; ///< per local cut: its stretch of outside atoms
    std::vector<VertexSet> oriented;   ///< per local cut: shore flipped away from the root atom

    int m() const { return int(outside.size()); }
    /// Union of the outside atoms at positions [iv.l, iv.r).
    VertexSet interval_atoms(const Interval& iv) const;
};

struct PolygonOptions {
    /// Exhaustive inside-set search is exact up to this many atoms; beyond it
    /// the column search runs under a node budget and may give up (loudly).
    int exact_atom_limit = 18;
    long long order_node_budget = 4'000'000;
};

/// Construct the polygon for a component with >= 2 cuts.  Chooses a maximum
/// subset of atoms admitting the circular layout (so the inside set is as
/// small as possible), roots it at the outside atom holding the smallest
/// vertex id, and orients so position 1 has a smaller min-vertex than the
/// last position.  Throws VerificationError when no layout with >= 3 outside
/// atoms exists.
PolygonRep build_polygon(const CrossComponent& comp, const PolygonOptions& opts = {});

/// Re-check a finished representation from scratch: interval/atom consistency,
/// rooting, distinctness of intervals, and cut-crossing <=> interval-crossing.
/// Throws VerificationError with a description on the first failure.
void verify_polygon(const PolygonRep& poly, const CrossComponent& comp);

}  // namespace thintree
