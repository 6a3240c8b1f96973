#pragma once

#include <vector>

#include "thintree/cuts.hpp"
#include "thintree/fractional.hpp"
#include "thintree/laminar_family.hpp"
#include "thintree/multigraph.hpp"

namespace thintree {

struct SpanningTree {
    std::vector<int> edges;  // edge ids, exactly n-1 of them
};

// Throws VerificationError unless the ids name n-1 distinct edges forming a
// connected acyclic subgraph on all vertices.
void check_spanning_tree(const MultiGraph& g, const SpanningTree& t);

// Number of tree edges with endpoints on opposite sides of the shore.
long long crossing_count(const MultiGraph& g, const SpanningTree& t, const VertexSet& shore);

struct CrossingReport {
    std::vector<long long> counts;  // aligned with the cut list
    long long max_crossing = 0;
    long long threshold = 0;
    bool pass = true;
};

// Per-cut crossing counts and a maximum;  pass == (max <= threshold).
CrossingReport verify_tree(const MultiGraph& g, const SpanningTree& t,
                           const std::vector<CutRecord>& cuts, long long threshold);

// Exhaustively enumerates spanning trees of the support graph and returns
// one minimizing max_S (crossings(S) - b_S).  Refuses more than 12 vertices
// or 24 support edges.
SpanningTree oracle_best_tree(const MultiGraph& g, const LaminarFamily& family,
                              const BoundsMap& bounds);

}  // namespace thintree
