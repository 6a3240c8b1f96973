#pragma once

#include <cstdint>
#include <vector>

#include "thintree/multigraph.hpp"
#include "thintree/rational.hpp"
#include "thintree/vertex_set.hpp"

namespace thintree {

/// One global cut, stored by the shore that does not contain vertex 0.
struct CutRecord {
    VertexSet shore;
    long long boundary = 0;

    bool operator==(const CutRecord& o) const { return shore == o.shore; }
};

/// |delta(S)|: edges with exactly one endpoint in S, counted with multiplicity.
long long boundary_size(const MultiGraph& g, const VertexSet& shore);

/// Exact global minimum cut value (Stoer-Wagner, integer weights).
/// Requires a connected graph with >= 2 vertices.
long long min_cut_value(const MultiGraph& g);

/// Flip S to its complement when it contains vertex 0.
VertexSet canonical_shore(const VertexSet& s);

/// Both sides have >= 2 vertices.
bool is_proper_cut(const VertexSet& shore);

/// Strict near-minimum test: |delta(S)| < (1 + eta) * k, compared exactly.
bool below_near_min_threshold(long long boundary, long long k, const Rational& eta);

struct EnumerateOptions {
    /// Above this vertex count we switch from exhaustive shores to repeated
    /// randomized contraction (collected set must be stable over 3 batches).
    int max_bruteforce_n = 20;
    uint64_t seed = 1;
};

/// All cuts with |delta(S)| < (1+eta)k, one record per cut (shore avoiding
/// vertex 0), in lexicographic order of the shore member lists.
/// eta must satisfy 0 < eta <= 1/5.
std::vector<CutRecord> enumerate_near_min_cuts(const MultiGraph& g, const Rational& eta,
                                               const EnumerateOptions& opts = {});

}  // namespace thintree
