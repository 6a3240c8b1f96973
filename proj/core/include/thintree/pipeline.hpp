#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thintree/cuts.hpp"
#include "thintree/fractional.hpp"
#include "thintree/laminar_family.hpp"
#include "thintree/multigraph.hpp"
#include "thintree/rational.hpp"
#include "thintree/rounding.hpp"
#include "thintree/tree_checks.hpp"

namespace thintree {

/// Cuts handed to the greedy family builder ahead of the enumerated order,
/// plus a spanning tree that respects the resulting family.  Stages the
/// failure mode where a maximal cross-free family certifies nothing about
/// the cuts it skipped.
struct BaselineSpec {
    std::vector<VertexSet> priority_cuts;
    std::vector<int> tree_edges;
};

struct RunConfig {
    Rational eta = Rational(1, 40);
    uint64_t seed = 1;
    int max_bruteforce_n = 20;
    bool oracle = false;
    int root_vertex = 0;
    std::optional<BaselineSpec> baseline;
};

/// One crossing component as the pipeline processed it.
struct ComponentReport {
    int cuts = 0;
    int outside = 0;  ///< polygon sizes; zero for singleton components
    int inside = 0;
    int family_intervals = 0;
    bool heuristic = false;
};

struct OracleReport {
    long long tree_violation = 0;    ///< max over the family of crossings - b_S
    long long oracle_violation = 0;  ///< the exhaustive optimum of the same
};

struct BaselineReport {
    int family_size = 0;
    long long tree_max_family_crossing = 0;
    bool tree_family_bounds_ok = false;  ///< supplied tree obeys every greedy b_S
    long long tree_max_nmc_crossing = 0;
};

struct PipelineResult {
    std::string instance_hash;
    int n = 0;
    int edges = 0;
    long long k = 0;
    Rational eta;
    int near_min_cuts = 0;
    int big_components = 0;
    int singleton_components = 0;
    std::vector<ComponentReport> component_reports;  ///< component order
    LaminarFamily family;
    BoundsMap bounds;
    bool heuristic = false;          ///< some table used the closure fallback
    bool point_in_polytope = false;  ///< x_e = 2/k obeys every family bound
    RoundResult round;
    bool tree_within_bounds = false;  ///< <= b_S, +3 where the row was dropped
    long long max_family_crossing = 0;
    CrossingReport nmc_report;  ///< every near-min cut against the 88 ceiling
    int covers_checked = 0;
    long long max_cover_size = 0;
    std::map<int, int> cover_histogram;  ///< size -> cuts with a cover that size
    bool composed_bound_ok = false;  ///< crossings <= cover sums and <= 8 * family max
    bool family_quality_ok = false;  ///< all under (1+4eta)k, specials under (1+2eta)k
    std::optional<OracleReport> oracle;
    std::optional<BaselineReport> baseline;
    bool pass = false;
};

/// Full run: enumerate near-minimum cuts, split into crossing components,
/// build each polygon and its laminar family, combine, bound, round to a
/// spanning tree, then check covers and crossing ceilings for every cut.
/// Stage failures rethrow tagged with the stage name and instance hash;
/// pass=false marks a summary check that failed without voiding an invariant.
PipelineResult run_pipeline(const MultiGraph& g, const RunConfig& config);

/// FNV-1a over the text form; names the instance in stage errors and reports.
std::string instance_hash(const MultiGraph& g);

}  // namespace thintree
