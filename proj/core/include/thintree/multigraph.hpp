#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "thintree/vertex_set.hpp"

namespace thintree {

/// Undirected multigraph on vertices 0..n-1.  Parallel edges are distinct
/// edge ids; self-loops are rejected at construction.
class MultiGraph {
  public:
    MultiGraph() = default;
    MultiGraph(int n, std::vector<std::pair<int, int>> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return int(edges_.size()); }
    /// Endpoints with u < v.
    std::pair<int, int> edge(int id) const { return edges_[id]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// Edge ids incident to v.
    const std::vector<int>& incident(int v) const { return incident_[v]; }
    int degree(int v) const { return int(incident_[v].size()); }

    bool connected() const;

    /// Number of parallel copies joining u and v.
    int multiplicity(int u, int v) const;

    /// Distinct endpoint pairs, each with its copy ids (ascending).  The
    /// support simple graph underlies the LP: a spanning tree never takes two
    /// parallel copies.
    struct SupportEdge {
        int u, v;
        std::vector<int> copies;
    };
    std::vector<SupportEdge> support() const;

  private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> incident_;
};

using SupportEdge = MultiGraph::SupportEdge;

/// Text format:
///   line 1: "n m"; then m lines "u v" with 0 <= u < v < n.
///   Repeated "u v" lines are parallel copies.  Lines starting with '#' are
///   comments and do not consume edge ids; edge id == position among
///   non-comment edge lines.
MultiGraph read_graph(std::istream& in);
MultiGraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const MultiGraph& g);
std::string graph_to_string(const MultiGraph& g);

}  // namespace thintree
