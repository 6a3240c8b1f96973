#include "thintree/polygon.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "thintree/errors.hpp"

namespace thintree {

VertexSet PolygonRep::interval_atoms(const Interval& iv) const {
    VertexSet s(atom_sets.empty() ? 0 : atom_sets[0].universe_size());
    for (int p = iv.l; p < iv.r && p < m(); ++p) s = s | atom_sets[outside[p]];
    return s;
}

namespace {

/// Linear consecutive-ones ordering search over <= 32 columns.  Invariant:
/// whenever a row is open (started, unfinished), the next placed column must
/// continue every open row; failed placed-sets are memoized.
struct OrderSearch {
    uint32_t all = 0;
    std::vector<uint32_t> rows;
    long long budget = 0;
    std::unordered_set<uint32_t> dead;
    std::vector<int> order;

    bool run(long long node_budget) {
        budget = node_budget;
        order.clear();
        dead.clear();
        return dfs(0);
    }

    bool dfs(uint32_t placed) {
        if (placed == all) return true;
        if (--budget < 0) throw BudgetError("circular layout search exceeded its node budget");
        if (dead.contains(placed)) return false;
        uint32_t required = all & ~placed;
        bool any_open = false;
        for (uint32_t row : rows) {
            if (!(row & placed)) continue;
            uint32_t rest = row & ~placed;
            if (!rest) continue;
            any_open = true;
            required &= rest;
            if (!required) break;
        }
        if (any_open && !required) {
            dead.insert(placed);
            return false;
        }
        uint32_t candidates = any_open ? required : (all & ~placed);
        while (candidates) {
            uint32_t bit = candidates & (~candidates + 1);
            candidates ^= bit;
            order.push_back(std::countr_zero(bit));
            if (dfs(placed | bit)) return true;
            order.pop_back();
        }
        dead.insert(placed);
        return false;
    }
};

bool try_verify(const PolygonRep& cand, const CrossComponent& comp) {
    try {
        verify_polygon(cand, comp);
        return true;
    } catch (const VerificationError&) {
        return false;
    }
}

}  // namespace

PolygonRep build_polygon(const CrossComponent& comp, const PolygonOptions& opts) {
    int c = int(comp.cuts.size());
    if (c < 2) throw ParameterError("polygon layout needs a component with >= 2 cuts");
    int t = int(comp.atoms.size());
    if (t > 30) throw BudgetError("component has too many atoms for the layout search");

    // Atom-level membership per cut; atoms are whole inside or outside a shore.
    std::vector<uint32_t> member(c, 0);
    for (int i = 0; i < c; ++i)
        for (int a = 0; a < t; ++a)
            if (comp.cuts[i].shore.contains(comp.atoms[a].min_element())) member[i] |= 1u << a;

    // Try candidate inside-sets by increasing size, so the first layout found
    // has a maximum outside set.  Past the exact limit we only probe small
    // inside sets under a node budget rather than pretend completeness.
    int max_inside = t - 3;
    if (t > opts.exact_atom_limit) max_inside = std::min(max_inside, 4);

    std::vector<int> combo;
    PolygonRep result;
    bool found = false;

    auto attempt = [&](uint32_t inside_mask) -> bool {
        uint32_t outside_mask = ((t == 32 ? ~uint32_t(0) : (uint32_t(1) << t) - 1)) & ~inside_mask;
        int root = std::countr_zero(outside_mask);  // atoms sorted by min vertex

        // Columns: outside atoms except the root, ascending atom id.
        std::vector<int> cols;
        for (int a = 0; a < t; ++a)
            if ((outside_mask >> a & 1) && a != root) cols.push_back(a);
        int w = int(cols.size());
        std::vector<int> col_of(t, -1);
        for (int i = 0; i < w; ++i) col_of[cols[i]] = i;

        OrderSearch search;
        search.all = w == 32 ? ~uint32_t(0) : (uint32_t(1) << w) - 1;
        std::unordered_set<uint32_t> distinct;
        for (int i = 0; i < c; ++i) {
            uint32_t oriented =
                (member[i] >> root & 1) ? ~member[i] & ~inside_mask : member[i] & ~inside_mask;
            uint32_t row = 0;
            for (int a = 0; a < t; ++a)
                if ((oriented >> a & 1) && a != root) row |= uint32_t(1) << col_of[a];
            if (!row) return false;  // a cut must occupy a nonempty stretch
            if (!distinct.insert(row).second) return false;  // two cuts would collide
            search.rows.push_back(row);
        }
        if (!search.run(opts.order_node_budget)) return false;

        PolygonRep cand;
        cand.atom_sets = comp.atoms;
        cand.outside.push_back(root);
        // Orient so position 1 holds a smaller min-vertex than the last one.
        std::vector<int> order = search.order;
        if (!order.empty() && comp.atoms[cols[order.front()]].min_element() >
                                  comp.atoms[cols[order.back()]].min_element())
            std::reverse(order.begin(), order.end());
        for (int idx : order) cand.outside.push_back(cols[idx]);
        for (int a = 0; a < t; ++a)
            if (inside_mask >> a & 1) cand.inside.push_back(a);

        std::vector<int> pos(t, -1);
        for (int p = 0; p < cand.m(); ++p) pos[cand.outside[p]] = p;
        for (int i = 0; i < c; ++i) {
            bool flip = member[i] >> root & 1;
            VertexSet shore = flip ? comp.cuts[i].shore.complement() : comp.cuts[i].shore;
            cand.oriented.push_back(shore);
            int lo = t + 1, hi = -1;
            uint32_t oriented = flip ? ~member[i] : member[i];
            for (int a = 0; a < t; ++a)
                if ((oriented >> a & 1) && pos[a] > 0) {
                    lo = std::min(lo, pos[a]);
                    hi = std::max(hi, pos[a]);
                }
            cand.interval_of.push_back({lo, hi + 1});
        }
        if (!try_verify(cand, comp)) return false;
        result = std::move(cand);
        return true;
    };

    // Enumerate size-r subsets of atom ids in lexicographic order.
    for (int r = 0; r <= max_inside && !found; ++r) {
        combo.assign(r, 0);
        for (int i = 0; i < r; ++i) combo[i] = i;
        while (true) {
            uint32_t mask = 0;
            for (int a : combo) mask |= uint32_t(1) << a;
            if (attempt(mask)) {
                found = true;
                break;
            }
            // next combination
            int i = r - 1;
            while (i >= 0 && combo[i] == t - r + i) --i;
            if (i < 0) break;
            ++combo[i];
            for (int j = i + 1; j < r; ++j) combo[j] = combo[j - 1] + 1;
        }
    }
    if (!found)
        throw VerificationError(
            "component admits no circular layout with >= 3 outside atoms (tried inside sets up "
            "to size " +
            std::to_string(std::max(max_inside, 0)) + " of " + std::to_string(t) + " atoms)");
    return result;
}

void verify_polygon(const PolygonRep& poly, const CrossComponent& comp) {
    auto fail = [](const std::string& msg) { throw VerificationError("polygon: " + msg); };
    int c = int(comp.cuts.size());
    int t = int(poly.atom_sets.size());
    if (t != int(comp.atoms.size())) fail("atom list size mismatch");
    if (int(poly.interval_of.size()) != c || int(poly.oriented.size()) != c)
        fail("per-cut table size mismatch");
    int n = comp.cuts.empty() ? 0 : comp.cuts[0].shore.universe_size();

    // Atoms partition the vertex set.
    VertexSet seen(n);
    for (const auto& a : poly.atom_sets) {
        if (a.empty()) fail("empty atom");
        if (a.intersects(seen)) fail("atoms overlap");
        seen = seen | a;
    }
    if (!seen.is_full()) fail("atoms do not cover the vertex set");

    int m = poly.m();
    if (m < 3) fail("fewer than 3 outside atoms");
    if (int(poly.inside.size()) + m != t) fail("inside/outside do not partition the atoms");
    std::vector<char> placed(t, 0);
    for (int a : poly.outside) placed[a]++;
    for (int a : poly.inside) placed[a]++;
    for (int a = 0; a < t; ++a)
        if (placed[a] != 1) fail("atom " + std::to_string(a) + " not placed exactly once");

    // Root: outside atom with the smallest vertex, and the fixed orientation.
    int best_min = poly.atom_sets[poly.outside[0]].min_element();
    for (int p = 1; p < m; ++p)
        if (poly.atom_sets[poly.outside[p]].min_element() < best_min)
            fail("root is not the outside atom with the smallest vertex");
    if (m >= 3 && poly.atom_sets[poly.outside[1]].min_element() >
                      poly.atom_sets[poly.outside[m - 1]].min_element())
        fail("orientation rule violated (positions 1 vs m-1)");

    const VertexSet& root_atom = poly.atom_sets[poly.outside[0]];
    std::vector<int> pos(t, -1);
    for (int p = 0; p < m; ++p) pos[poly.outside[p]] = p;

    for (int i = 0; i < c; ++i) {
        const VertexSet& oriented = poly.oriented[i];
        if (!(oriented == comp.cuts[i].shore) && !(oriented == comp.cuts[i].shore.complement()))
            fail("oriented shore of cut " + std::to_string(i) + " is not a shore of that cut");
        if (oriented.intersects(root_atom)) fail("root atom inside an oriented shore");
        Interval iv = poly.interval_of[i];
        if (!iv.valid() || iv.r > m) fail("invalid interval " + iv.to_string());
        // The oriented shore must consist of whole atoms whose outside part is
        // exactly the stretch [l, r).
        for (int a = 0; a < t; ++a) {
            const VertexSet& atom = poly.atom_sets[a];
            bool in_shore = atom.is_subset_of(oriented);
            if (!in_shore && atom.intersects(oriented)) fail("shore splits an atom");
            if (pos[a] > 0) {
                bool in_iv = iv.contains_pos(pos[a]);
                if (in_shore != in_iv)
                    fail("cut " + std::to_string(i) + " stretch mismatch at atom " +
                         std::to_string(a));
            }
        }
    }

    for (int i = 0; i < c; ++i)
        for (int j = i + 1; j < c; ++j) {
            if (poly.interval_of[i] == poly.interval_of[j])
                fail("cuts " + std::to_string(i) + "," + std::to_string(j) +
                     " share interval " + poly.interval_of[i].to_string());
            bool cut_cross = crossing(comp.cuts[i].shore, comp.cuts[j].shore);
            bool iv_cross = intervals_cross(poly.interval_of[i], poly.interval_of[j]);
            if (cut_cross != iv_cross)
                fail("crossing mismatch between cuts " + std::to_string(i) + "," +
                     std::to_string(j) + ": sets " + (cut_cross ? "cross" : "don't cross") +
                     " but intervals " + (iv_cross ? "cross" : "don't"));
        }
}

}  // namespace thintree
