#include "thintree/fractional.hpp"

#include <algorithm>

#include "thintree/cuts.hpp"
#include "thintree/errors.hpp"

namespace thintree {

FractionalPoint fractional_point(const MultiGraph& g, long long k, const Rational& scale) {
    if (k <= 0) throw ParameterError("fractional point needs a positive min cut");
    if (scale != Rational(2, k) && scale != Rational(3, k))
        throw ParameterError("fractional point scale must be 2/k or 3/k");
    FractionalPoint p;
    p.x.assign(g.num_edges(), scale);
    return p;
}

BoundsMap compute_bounds(const MultiGraph& g, const LaminarFamily& family, long long k) {
    if (k <= 0) throw ParameterError("bounds need a positive min cut");
    BoundsMap bounds;
    bounds.b.reserve(family.sets.size());
    for (const auto& e : family.sets) {
        long long d = boundary_size(g, e.shore);
        long long b = (2 * d + k - 1) / k;
        if (b < 2)
            throw IntegrityError("family set " + e.shore.to_string() +
                                 " has boundary below the minimum cut");
        bounds.b.push_back(b);
    }
    return bounds;
}

bool check_partition_inequalities(const FractionalPoint& x, const VertexSet& s,
                                  const MultiGraph& g) {
    std::vector<int> verts = s.members();
    int nv = int(verts.size());
    if (nv > 12) throw BudgetError("partition check limited to 12 vertices");
    if (int(x.x.size()) != g.num_edges())
        throw ParameterError("fractional point does not match the graph");
    if (nv < 2) return true;

    std::vector<int> pos(g.num_vertices(), -1);
    for (int i = 0; i < nv; ++i) pos[verts[i]] = i;

    // Pairwise mass inside G[S], over a common denominator so the recursion
    // below only adds integers.
    BigInt den = 1;
    const auto& edges = g.edges();
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = edges[e];
        if (pos[u] >= 0 && pos[v] >= 0) den = lcm(den, denominator(x.x[e]));
    }
    std::vector<std::vector<BigInt>> mass(nv, std::vector<BigInt>(nv, 0));
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = edges[e];
        if (pos[u] < 0 || pos[v] < 0) continue;
        BigInt scaled = numerator(x.x[e]) * (den / denominator(x.x[e]));
        mass[pos[u]][pos[v]] += scaled;
        mass[pos[v]][pos[u]] += scaled;
    }

    // Enumerate set partitions as restricted growth strings, keeping the
    // total mass crossing between parts incrementally.  The inequality
    // sum_P x(delta(P)) >= 2(|Pi|-1) reads cross >= (|Pi|-1) * den.
    std::vector<int> part(nv, 0);
    bool ok = true;
    auto rec = [&](auto&& self, int v, int used, const BigInt& cross) -> void {
        if (!ok) return;
        if (v == nv) {
            if (used >= 2 && cross < BigInt(used - 1) * den) ok = false;
            return;
        }
        for (int p = 0; p <= used && ok; ++p) {
            BigInt add = 0;
            for (int u = 0; u < v; ++u)
                if (part[u] != p) add += mass[u][v];
            part[v] = p;
            self(self, v + 1, std::max(used, p + 1), cross + add);
        }
    };
    rec(rec, 1, 1, BigInt(0));
    return ok;
}

bool scaled_ceiling_bound_holds(long long k) {
    if (k <= 0) throw ParameterError("minimum cut must be positive");
    for (long long d = k; d <= 2 * k; ++d) {
        long long ceil_term = (2 * d + k - 1) / k;
        if (22 * ceil_term * k > 66 * d) return false;
    }
    return true;
}

bool crossing_budget_holds(long long k) {
    if (k <= 0) throw ParameterError("minimum cut must be positive");
    for (long long d = k; d <= 4 * k / 3; ++d)
        if (6 * d > 8 * k) return false;
    return true;
}

}  // namespace thintree
