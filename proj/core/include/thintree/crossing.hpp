#pragma once

#include <vector>

#include "thintree/cuts.hpp"

namespace thintree {

/// Cuts A and B cross when all four corner regions are nonempty:
/// A&B, A-B, B-A and the complement of A|B.  The test is invariant under
/// flipping either shore to its complement.
bool crossing(const VertexSet& a, const VertexSet& b);

/// Connected component of the "crosses" relation over a cut collection.
struct CrossComponent {
    std::vector<int> members;     ///< indices into the input cut vector
    std::vector<CutRecord> cuts;  ///< the member records, same order
    std::vector<VertexSet> atoms;
};

/// Partition a cut list into crossing components (singletons allowed), each
/// with its atoms.  Components are ordered by their smallest member index.
std::vector<CrossComponent> components(const std::vector<CutRecord>& cuts, int n);

/// Coarsest partition of the vertex set such that every given cut is a union
/// of blocks: vertices are grouped by their membership pattern across cuts.
/// Blocks come out ordered by smallest vertex.
std::vector<VertexSet> atoms(const std::vector<CutRecord>& cuts, int n);

}  // namespace thintree
