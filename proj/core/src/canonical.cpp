#include "thintree/canonical.hpp"

#include <algorithm>
#include <bit>

#include "thintree/cuts.hpp"
#include "thintree/errors.hpp"

namespace thintree {

std::vector<Interval> CanonicalTable::special_intervals() const {
    std::vector<Interval> out;
    for (int l = 1; l < m; ++l)
        for (int r = l + 1; r <= m; ++r)
            if (at({l, r}).special) out.push_back({l, r});
    return out;
}

std::vector<Interval> CanonicalTable::near_min_intervals() const {
    std::vector<Interval> out;
    for (int l = 1; l < m; ++l)
        for (int r = l + 1; r <= m; ++r)
            if (at({l, r}).near_min) out.push_back({l, r});
    return out;
}

namespace {

// Strict 1/5 threshold: 5*|delta| < 6*k.
bool below_table_threshold(long long boundary, long long k) { return 5 * boundary < 6 * k; }

struct TableBuilder {
    const MultiGraph& g;
    const PolygonRep& poly;
    CanonicalTable& table;

    int t;                                 // atom count
    std::vector<int> atom_of;              // vertex -> atom id
    std::vector<std::vector<long long>> w; // edge multiplicity between atoms
    std::vector<int> pos;                  // atom id -> outside position, -1 inside

    TableBuilder(const MultiGraph& g_, const PolygonRep& poly_, CanonicalTable& table_)
        : g(g_), poly(poly_), table(table_) {
        t = int(poly.atom_sets.size());
        int n = g.num_vertices();
        atom_of.assign(n, -1);
        for (int a = 0; a < t; ++a)
            for (int v : poly.atom_sets[a].members()) atom_of[v] = a;
        w.assign(t, std::vector<long long>(t, 0));
        for (auto [u, v] : g.edges()) {
            int au = atom_of[u], av = atom_of[v];
            if (au != av) {
                w[au][av]++;
                w[av][au]++;
            }
        }
        pos.assign(t, -1);
        for (int p = 0; p < poly.m(); ++p) pos[poly.outside[p]] = p;
    }

    // Record one 1/5-near-min shore (a union of non-root atoms).  Returns
    // false when the shore has no outside stretch (all-inside shores carry
    // no interval and are not canonical).
    void record(const VertexSet& shore, long long boundary) {
        int lo = t + 1, hi = -1;
        for (int a = 0; a < t; ++a) {
            if (!poly.atom_sets[a].is_subset_of(shore)) continue;
            if (pos[a] > 0) {
                lo = std::min(lo, pos[a]);
                hi = std::max(hi, pos[a]);
            }
        }
        if (hi < 0) return;
        // Count outside atoms inside the shore; a gap means the stretch is
        // not contiguous, which the layout theory rules out.
        int covered = 0;
        for (int p = lo; p <= hi; ++p)
            if (poly.atom_sets[poly.outside[p]].is_subset_of(shore)) ++covered;
        if (covered != hi - lo + 1)
            throw IntegrityError("near-min cut " + shore.to_string() +
                                 " occupies a non-contiguous outside stretch");
        Interval iv{lo, hi + 1};
        auto& cell = table.at(iv);
        if (cell.shadow) {
            if (!(cell.cut == shore))
                throw IntegrityError("two distinct near-min cuts share stretch " +
                                     iv.to_string() + ": " + cell.cut.to_string() + " vs " +
                                     shore.to_string());
            return;
        }
        cell.shadow = true;
        cell.cut = shore;
        cell.boundary = boundary;
        cell.near_min = below_near_min_threshold(boundary, table.k, table.eta);
    }

    void exhaustive_sweep() {
        int root = poly.outside[0];
        std::vector<int> others;
        for (int a = 0; a < t; ++a)
            if (a != root) others.push_back(a);
        int q = int(others.size());
        std::vector<long long> deg(t, 0);
        for (int a = 0; a < t; ++a)
            for (int b = 0; b < t; ++b) deg[a] += w[a][b];

        std::vector<long long> bound(size_t(1) << q, 0);
        for (uint32_t mask = 1; mask < (uint32_t(1) << q); ++mask) {
            int low = std::countr_zero(mask);
            uint32_t rest = mask & (mask - 1);
            long long b = bound[rest] + deg[others[low]];
            for (uint32_t scan = rest; scan; scan &= scan - 1)
                b -= 2 * w[others[low]][others[std::countr_zero(scan)]];
            bound[mask] = b;
            if (below_table_threshold(b, table.k)) {
                VertexSet shore(g.num_vertices());
                for (uint32_t scan = mask; scan; scan &= scan - 1)
                    shore = shore | poly.atom_sets[others[std::countr_zero(scan)]];
                record(shore, b);
            }
        }
    }

    // Closure fallback for oversized components: seed with the component's
    // own cuts, then twice combine crossing pairs.
    void closure_sweep() {
        table.heuristic = true;
        std::vector<VertexSet> pool = poly.oriented;
        for (const auto& s : pool) record(s, boundary_size(g, s));
        for (int round = 0; round < 2; ++round) {
            std::vector<VertexSet> next;
            for (size_t i = 0; i < pool.size(); ++i)
                for (size_t j = i + 1; j < pool.size(); ++j) {
                    if (!crossing(pool[i], pool[j])) continue;
                    for (const VertexSet& cand :
                         {pool[i] & pool[j], pool[i] | pool[j], pool[i] - pool[j],
                          pool[j] - pool[i]}) {
                        long long b = boundary_size(g, cand);
                        if (below_table_threshold(b, table.k)) {
                            record(cand, b);
                            next.push_back(cand);
                        }
                    }
                }
            pool.insert(pool.end(), next.begin(), next.end());
            std::sort(pool.begin(), pool.end(),
                      [](const VertexSet& a, const VertexSet& b) { return a.lex_less(b); });
            pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
        }
    }

    void mark_specials() {
        auto near_min_ivs = table.near_min_intervals();
        for (const Interval& iv : near_min_ivs) {
            auto& cell = table.at(iv);
            cell.special = true;
            cell.witness = {SpecialKind::NearMin, {}, {}};
        }
        // Combinations of crossing near-min pairs.
        for (const Interval& a : near_min_ivs)
            for (const Interval& b : near_min_ivs) {
                if (!(a.l < b.l)) continue;
                if (!intervals_cross(a, b)) continue;
                const VertexSet& ca = table.at(a).cut;
                const VertexSet& cb = table.at(b).cut;
                mark_combo(interval_intersection(a, b), ca & cb,
                           {SpecialKind::Intersection, a, b});
                mark_combo(interval_union(a, b), ca | cb, {SpecialKind::Union, a, b});
                mark_combo(Interval{a.l, b.l}, ca - cb, {SpecialKind::Difference, a, b});
                mark_combo(Interval{a.r, b.r}, cb - ca, {SpecialKind::Difference, b, a});
            }
    }

    void mark_combo(const Interval& iv, const VertexSet& cut, const SpecialWitness& witness) {
        auto& cell = table.at(iv);
        if (!cell.shadow) {
            if (!table.heuristic && below_table_threshold(boundary_size(g, cut), table.k))
                throw IntegrityError("combination cut missing from table at " + iv.to_string());
            return;
        }
        if (!(cell.cut == cut))
            throw IntegrityError("combination at " + iv.to_string() +
                                 " disagrees with the canonical cut");
        // Submodularity keeps combinations of two crossing near-min cuts
        // within twice the slack of the minimum cut.
        BigInt p = numerator(table.eta), q = denominator(table.eta);
        if (!table.heuristic && !(BigInt(cell.boundary) * q < (q + 2 * p) * BigInt(table.k)))
            throw IntegrityError("special at " + iv.to_string() +
                                 " exceeds the doubled near-min slack");
        if (!cell.special) {
            cell.special = true;
            cell.witness = witness;
        }
    }

    void mark_differences() {
        auto specials = table.special_intervals();
        for (const Interval& p : specials)
            for (const Interval& q : specials) {
                if (!(p.l < q.l) || !intervals_cross(p, q)) continue;
                mark_diff(Interval{p.l, q.l}, p, q);
                mark_diff(Interval{p.r, q.r}, q, p);
            }
    }

    void mark_diff(const Interval& iv, const Interval& p, const Interval& q) {
        auto& cell = table.at(iv);
        if (!cell.shadow) return;
        VertexSet diff = table.at(p).cut - table.at(q).cut;
        if (!(cell.cut == diff)) return;
        if (!cell.diff_of_specials) {
            cell.diff_of_specials = true;
            cell.diff_p = p;
            cell.diff_q = q;
        }
    }
};

}  // namespace

CanonicalTable build_canonical_table(const MultiGraph& g, const PolygonRep& poly, long long k,
                                     const Rational& eta, const CanonicalOptions& opts) {
    if (eta > Rational(1, 5))
        throw ParameterError("canonical table needs eta <= 1/5");
    CanonicalTable table;
    table.m = poly.m();
    table.k = k;
    table.eta = eta;
    table.cells.assign(size_t(table.m + 1) * (table.m + 1), CanonicalEntry{});

    TableBuilder builder(g, poly, table);
    if (int(poly.atom_sets.size()) <= opts.exact_atom_limit)
        builder.exhaustive_sweep();
    else
        builder.closure_sweep();
    builder.mark_specials();
    builder.mark_differences();
    return table;
}

namespace {

SpecialWitness mirror_witness(const SpecialWitness& w, int m) {
    if (w.kind == SpecialKind::NearMin) return w;
    return {w.kind, mirror_interval(w.p, m), mirror_interval(w.q, m)};
}

ResolvedPair resolve_oriented(const Interval& a, const Interval& b, const SpecialWitness& w) {
    // Here a.l < b.l < a.r < b.r.
    Interval inter{b.l, a.r}, uni{a.l, b.r}, a_minus_b{a.l, b.l}, b_minus_a{a.r, b.r};
    auto bad_witness = [&] {
        throw IntegrityError("malformed special witness for " + a.to_string());
    };

    switch (w.kind) {
        case SpecialKind::NearMin:
            return {inter, {SpecialKind::Intersection, a, b}, uni, {SpecialKind::Union, a, b}};
        case SpecialKind::Intersection: {
            // a = p & q with p = <x, a.r>, x < a.l.
            Interval p = w.p.r == a.r ? w.p : w.q;
            if (p.r != a.r || p.l >= a.l) bad_witness();
            return {inter, {SpecialKind::Intersection, p, b},
                    b_minus_a, {SpecialKind::Difference, b, p}};
        }
        case SpecialKind::Difference: {
            Interval p = w.p, q = w.q;  // a = p - q
            if (p.r == a.r && q.r == a.l) {
                // q clipped the left end of p = <y, a.r>.
                return {inter, {SpecialKind::Intersection, p, b},
                        b_minus_a, {SpecialKind::Difference, b, p}};
            }
            if (p.l == a.l && q.l == a.r) {
                // q = <a.r, y> clipped the right end of p = <a.l, x>.
                int x = p.r;
                if (x < b.r)
                    return {a_minus_b, {SpecialKind::Difference, p, b},
                            uni, {SpecialKind::Union, p, b}};
                return {inter, {SpecialKind::Difference, b, q},
                        b_minus_a, {SpecialKind::Intersection, q, b}};
            }
            bad_witness();
            break;
        }
        case SpecialKind::Union: {
            // a = p | q with p = <a.l, x>, q = <y, a.r>, a.l < y <= x < a.r.
            Interval p = w.p.l == a.l ? w.p : w.q;
            Interval q = w.p.l == a.l ? w.q : w.p;
            if (p.l != a.l || q.r != a.r) bad_witness();
            int x = p.r;
            if (x <= b.l)
                return {inter, {SpecialKind::Intersection, q, b},
                        b_minus_a, {SpecialKind::Difference, b, q}};
            return {a_minus_b, {SpecialKind::Difference, p, b},
                    uni, {SpecialKind::Union, p, b}};
        }
    }
    throw IntegrityError("unreachable witness kind");
}

}  // namespace

ResolvedPair special_cross_resolve(const CanonicalTable& table, const Interval& a,
                                   const Interval& b) {
    if (!table.special(a))
        throw IntegrityError("special_cross_resolve: " + a.to_string() + " is not special");
    if (!table.near_min(b))
        throw IntegrityError("special_cross_resolve: " + b.to_string() + " is not near-min");
    if (!intervals_cross(a, b))
        throw IntegrityError("special_cross_resolve: " + a.to_string() + " and " +
                             b.to_string() + " do not cross");
    const SpecialWitness& w = table.at(a).witness;
    if (a.l < b.l) return resolve_oriented(a, b, w);

    int m = table.m;
    ResolvedPair flipped = resolve_oriented(mirror_interval(a, m), mirror_interval(b, m),
                                            mirror_witness(w, m));
    return {mirror_interval(flipped.inner, m), mirror_witness(flipped.inner_witness, m),
            mirror_interval(flipped.outer, m), mirror_witness(flipped.outer_witness, m)};
}

}  // namespace thintree
