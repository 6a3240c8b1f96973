#pragma once

#include <vector>

#include "thintree/laminar_family.hpp"
#include "thintree/multigraph.hpp"
#include "thintree/rational.hpp"
#include "thintree/vertex_set.hpp"

namespace thintree {

// Edge-id-indexed fractional edge vector.
struct FractionalPoint {
    std::vector<Rational> x;

    Rational total() const {
        Rational s = 0;
        for (const auto& v : x) s += v;
        return s;
    }
};

// Per-family-set crossing budgets.
struct BoundsMap {
    std::vector<long long> b;  // aligned with LaminarFamily::sets
};

// The constant vector x_e = scale; scale must be 2/k or 3/k.
FractionalPoint fractional_point(const MultiGraph& g, long long k, const Rational& scale);

// b_S = ceil(2 |delta(S)| / k) for every family set (counting edge copies).
BoundsMap compute_bounds(const MultiGraph& g, const LaminarFamily& family, long long k);

// Checks sum_P x(delta_{G[S]}(P)) >= 2(|Pi|-1) over every partition Pi of S
// with at least two parts.  Brute force; refuses |S| > 12.
bool check_partition_inequalities(const FractionalPoint& x, const VertexSet& s,
                                  const MultiGraph& g);

// 22 * ceil(2d/k) <= (66/k) d for every integer d in [k, 2k].
bool scaled_ceiling_bound_holds(long long k);

// 2 (3/k) d + 3 <= 11 for every integer d in [k, floor(4k/3)].
bool crossing_budget_holds(long long k);

}  // namespace thintree
