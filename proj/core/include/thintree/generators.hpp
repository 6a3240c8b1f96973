#pragma once

#include <cstdint>
#include <vector>

#include "thintree/multigraph.hpp"
#include "thintree/vertex_set.hpp"

namespace thintree {

// Cycle 0-1-...-(n-1)-0 with `copies` parallel edges per pair.
MultiGraph gen_cycle(int n, int copies = 1);

// Two overlaid Hamiltonian cycles on an even number of vertices: the plain
// cycle H1 with k parallel copies per pair, then a single copy of the zigzag
// cycle H2 = 0, 1, n-1, 2, n-2, 3, ..., n/2, back to 0.  Every H2 edge
// crosses the set {1, ..., n/2}, which is what makes the instance a bad case
// for greedily chosen cut families.
MultiGraph gen_fig1(int n, int k);

// The vertices of the zigzag cycle H2 in traversal order.
std::vector<int> fig1_h2_order(int n);

// Near-minimum cuts given by prefixes of the H2 order (sizes 2..n-1).  Used
// to seed the greedy baseline so it locks in a chain that misses the zigzag
// cut.
std::vector<VertexSet> fig1_adversarial_cuts(int n);

// Edge ids of H2 minus its closing edge: a spanning path that crosses the
// zigzag cut with every one of its n-1 edges.
std::vector<int> fig1_h2_tree(int n, int k);

// Fixed 16-vertex instance with minimum cut 7: a 14-cycle (vertices 0..13)
// with tripled edges, vertices 0..5 joined to 14, vertices 8..13 joined to
// 15, the edge (14,15), and the chords (5,7) and (6,8).
MultiGraph gen_fig2();

// Union of c random Hamiltonian cycles; 2c-edge-connected, deterministic in
// the seed.
MultiGraph gen_random_kec(int n, int c, uint64_t seed);

}  // namespace thintree
