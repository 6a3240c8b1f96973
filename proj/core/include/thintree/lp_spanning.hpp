#pragma once

#include <vector>

#include "thintree/fractional.hpp"
#include "thintree/laminar_family.hpp"
#include "thintree/multigraph.hpp"
#include "thintree/rational.hpp"

namespace thintree {

enum class EdgeStatus { Active, Fixed, Deleted };

// LP over the support edges of a multigraph:
//   x >= 0,  x(E) = n-1,  x_e <= 1,
//   x(E(U)) <= |U|-1   (rows generated by a max-flow separator),
//   x(delta(S)) <= b_S (one row per active family set).
// Fixed support edges are folded in as the constant 1, deleted ones as 0.
// Separated subtour rows persist across solve calls.
class TreeLp {
  public:
    TreeLp(const MultiGraph& g, const LaminarFamily& family, const BoundsMap& bounds);

    const std::vector<SupportEdge>& support() const { return support_; }

    // Per-support-edge values at a vertex of the current polytope.
    std::vector<Rational> solve(const std::vector<EdgeStatus>& status,
                                const std::vector<bool>& family_active);

  private:
    const MultiGraph& g_;
    const LaminarFamily& family_;
    const BoundsMap& bounds_;
    std::vector<SupportEdge> support_;
    std::vector<VertexSet> subtours_;

    // A set U with x(E(U)) > |U|-1, or an empty set when none exists.
    VertexSet find_violated_subtour(const std::vector<Rational>& x_full) const;
};

// Solves the polytope above (all edges active, all family rows on) and maps
// the support values back to per-copy edge ids, loading each support pair's
// mass onto its lowest edge id.
FractionalPoint solve_fractional(const MultiGraph& g, const LaminarFamily& family,
                                 const BoundsMap& bounds);

}  // namespace thintree
