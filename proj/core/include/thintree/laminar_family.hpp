#pragma once

#include <optional>
#include <vector>

#include "thintree/cuts.hpp"
#include "thintree/interval.hpp"
#include "thintree/multigraph.hpp"
#include "thintree/vertex_set.hpp"

namespace thintree {

struct FamilyEntry {
    VertexSet shore;
    long long boundary = 0;
    int component = -1;  // crossing-component index, -1 when not applicable
    bool special = false;
    bool diff_of_specials = false;
    std::optional<Interval> interval;  // polygon interval when one exists
};

// Cross-free family rooted away from a fixed vertex: every shore excludes the
// root, so any two members are nested or disjoint.
struct LaminarFamily {
    std::vector<FamilyEntry> sets;
    std::vector<int> parent;  // index of the smallest strict superset, -1 at roots
};

// Merges per-component families with the uncrossed cuts into one family,
// flipping shores so none contains root_vertex.  Throws IntegrityError if
// any two members cross.
LaminarFamily combine_components(const MultiGraph& g,
                                 const std::vector<std::vector<FamilyEntry>>& per_component,
                                 const std::vector<CutRecord>& singleton_cuts,
                                 int root_vertex);

// Greedy baseline: insert cuts in the given order, skipping any that cross a
// member already kept.  The result is maximal for that order.
LaminarFamily naive_maximal_laminar(const MultiGraph& g, const std::vector<CutRecord>& cuts,
                                    int root_vertex);

}  // namespace thintree
