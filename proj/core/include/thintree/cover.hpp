#pragma once

#include <vector>

#include "thintree/canonical.hpp"
#include "thintree/make_lam.hpp"
#include "thintree/multigraph.hpp"

namespace thintree {

// Picks at most eight family cuts whose boundaries jointly contain every
// boundary edge of the near-minimum cut `shore`.  The choice replays the
// recursion trace: locate the deepest visited interval containing the cut,
// take the extremal chain cuts inside it, then patch the two stubs the chain
// leaves uncovered.  Throws VerificationError (with the offending edge) if
// the selection misses part of the boundary.
std::vector<Interval> extract_cover(const MultiGraph& g, const VertexSet& shore,
                                    const TraceNode& trace, const CanonicalTable& table,
                                    const std::vector<Interval>& family);

// True when every boundary edge of s is also a boundary edge of some member.
bool verify_cover(const MultiGraph& g, const VertexSet& s,
                  const std::vector<VertexSet>& cover);

// Maps table intervals back to their canonical cuts.
std::vector<VertexSet> cuts_for_intervals(const CanonicalTable& table,
                                          const std::vector<Interval>& ivs);

}  // namespace thintree
