#pragma once

#include <vector>

#include "thintree/fractional.hpp"
#include "thintree/laminar_family.hpp"
#include "thintree/lp_spanning.hpp"
#include "thintree/multigraph.hpp"
#include "thintree/tree_checks.hpp"

namespace thintree {

struct RoundResult {
    SpanningTree tree;
    std::vector<long long> crossings;  // per family set
    std::vector<bool> dropped;         // family rows relaxed before integrality
    int lp_solves = 0;
};

// Iterative relaxation: solve to a vertex, fix variables at one, delete
// variables at zero, and when neither applies drop a family constraint whose
// remaining fractional boundary edges number at most its residual bound
// plus three.  A starting point that is already an integral spanning tree is
// returned as-is.  Throws IntegrityError with a state dump if no progress
// rule applies (which would indicate an LP bug, not an input problem).
RoundResult iterative_round(const MultiGraph& g, const LaminarFamily& family,
                            const BoundsMap& bounds, const FractionalPoint& start);

}  // namespace thintree
