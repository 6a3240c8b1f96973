#include "thintree/cover.hpp"

#include <algorithm>
#include <optional>

#include "thintree/errors.hpp"

namespace thintree {

namespace {

// Interval of the canonical cut equal (or complementary) to `shore`.
Interval locate_interval(const VertexSet& shore, const CanonicalTable& table) {
    VertexSet flipped = shore.complement();
    for (int l = 1; l < table.m; ++l)
        for (int r = l + 1; r <= table.m; ++r) {
            const auto& cell = table.at({l, r});
            if (cell.shadow && (cell.cut == shore || cell.cut == flipped)) return {l, r};
        }
    throw IntegrityError("cut " + shore.to_string() + " has no canonical interval");
}

struct CoverBuilder {
    const CanonicalTable& table;
    const std::vector<Interval>& family;
    std::vector<Interval> picked;

    bool in_family(const Interval& iv) const {
        return std::binary_search(family.begin(), family.end(), iv);
    }

    void add(const Interval& iv) {
        if (!iv.valid())
            throw IntegrityError("cover construction produced bad interval " + iv.to_string());
        if (!in_family(iv))
            throw IntegrityError("cover construction left the family at " + iv.to_string());
        if (std::find(picked.begin(), picked.end(), iv) == picked.end()) picked.push_back(iv);
    }

    bool special(int l, int r) const { return l < r && table.special({l, r}); }

    // Stop positions of a chain node: L, x_1, ..., x_m, R.
    static std::vector<int> stops_of(const TraceNode& node) {
        std::vector<int> stops;
        stops.push_back(node.active.l);
        stops.insert(stops.end(), node.chain.begin(), node.chain.end());
        stops.push_back(node.active.r);
        return stops;
    }

    const TraceNode& descend(const TraceNode& node, const Interval& s) const {
        switch (node.kind) {
            case TraceKind::Rings: {
                auto stops = stops_of(node);
                for (size_t i = 0; i + 1 < stops.size(); ++i)
                    if (stops[i] <= s.l && s.r <= stops[i + 1])
                        return descend(*node.children[i], s);
                return node;
            }
            case TraceKind::Flip:
                return descend(*node.children[0], s);
            case TraceKind::Shrink:
                if (s.l >= node.active.l + 1) return descend(*node.children[0], s);
                [[fallthrough]];
            case TraceKind::Leaf:
                throw IntegrityError("trace descent for " + s.to_string() +
                                     " dead-ends without a chain");
        }
        throw IntegrityError("unreachable trace kind");
    }

    // The ring (stops[idx], stops[idx+1]) starting at chain point x.
    static Interval ring_after(const TraceNode& node, int x) {
        auto stops = stops_of(node);
        for (size_t i = 0; i + 1 < stops.size(); ++i)
            if (stops[i] == x) return {stops[i], stops[i + 1]};
        throw IntegrityError("chain point " + std::to_string(x) + " has no ring");
    }

    static Interval ring_before(const TraceNode& node, int x) {
        auto stops = stops_of(node);
        for (size_t i = 0; i + 1 < stops.size(); ++i)
            if (stops[i + 1] == x) return {stops[i], stops[i + 1]};
        throw IntegrityError("chain point " + std::to_string(x) + " has no ring");
    }

    void build(const TraceNode& root, const Interval& s) {
        const TraceNode& node = descend(root, s);
        if (node.kind != TraceKind::Rings || node.chain.empty())
            throw IntegrityError("deepest visited interval for " + s.to_string() +
                                 " carries no chain");
        if (node.prefix_round)
            from_prefix(node, s);
        else
            from_suffix(node, s);
    }

    // Chain grows from the left end l1: cuts <l1, x>.
    void from_prefix(const TraceNode& node, const Interval& s) {
        int l1 = node.active.l;
        std::optional<int> i, j;
        for (int x = std::max(s.l, l1 + 1); x <= s.r; ++x)
            if (special(l1, x)) {
                if (!i) i = x;
                j = x;
            }
        if (!i)
            throw IntegrityError("no chain cut reaches into " + s.to_string());
        add({l1, *i});
        add({l1, *j});
        if (s.l < *i) add({s.l, *i});
        if (s.r <= *j) return;

        Interval ring = ring_after(node, *j);  // <l2, r2>, holds s.r
        int l2 = ring.l, r2 = ring.r;
        std::optional<int> l3, r3, z;
        for (int x = l2; x <= s.r; ++x)
            if (x == l2 ? special(l2, r2) : special(x, r2)) {
                if (!z) z = x;
                l3 = x;
            }
        for (int x = s.r; x < r2; ++x)
            if (special(x, r2)) {
                r3 = x;
                break;
            }
        if (!l3) {
            add({l2, s.r});
            return;
        }
        add(*z == l2 ? ring : Interval{*z, r2});
        add(*l3 == l2 ? ring : Interval{*l3, r2});
        if (r3) add({*r3, r2});
        if (*z > l2) add({l2, *z});
        if (*l3 < s.r) add({*l3, s.r});
    }

    // Mirror image: chain grows from the right end r1, cuts <x, r1>.
    void from_suffix(const TraceNode& node, const Interval& s) {
        int r1 = node.active.r;
        std::optional<int> i, j;
        for (int x = std::min(s.r, r1 - 1); x >= s.l; --x)
            if (special(x, r1)) {
                if (!i) i = x;
                j = x;
            }
        if (!i)
            throw IntegrityError("no chain cut reaches into " + s.to_string());
        add({*i, r1});
        add({*j, r1});
        if (s.r > *i) add({*i, s.r});
        if (s.l >= *j) return;

        Interval ring = ring_before(node, *j);  // <l2, r2>, holds s.l
        int l2 = ring.l, r2 = ring.r;
        std::optional<int> l3, r3, z;
        for (int x = r2; x >= s.l; --x)
            if (x == r2 ? special(l2, r2) : special(l2, x)) {
                if (!z) z = x;
                l3 = x;
            }
        for (int x = s.l; x > l2; --x)
            if (special(l2, x)) {
                r3 = x;
                break;
            }
        if (!l3) {
            add({s.l, r2});
            return;
        }
        add(*z == r2 ? ring : Interval{l2, *z});
        add(*l3 == r2 ? ring : Interval{l2, *l3});
        if (r3) add({l2, *r3});
        if (*z < r2) add({*z, r2});
        if (*l3 > s.l) add({s.l, *l3});
    }
};

}  // namespace

bool verify_cover(const MultiGraph& g, const VertexSet& s,
                  const std::vector<VertexSet>& cover) {
    for (auto [u, v] : g.edges()) {
        if (s.contains(u) == s.contains(v)) continue;
        bool hit = false;
        for (const VertexSet& b : cover)
            if (b.contains(u) != b.contains(v)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

std::vector<VertexSet> cuts_for_intervals(const CanonicalTable& table,
                                          const std::vector<Interval>& ivs) {
    std::vector<VertexSet> out;
    out.reserve(ivs.size());
    for (const Interval& iv : ivs) {
        const auto& cell = table.at(iv);
        if (!cell.shadow)
            throw IntegrityError("interval " + iv.to_string() + " has no canonical cut");
        out.push_back(cell.cut);
    }
    return out;
}

std::vector<Interval> extract_cover(const MultiGraph& g, const VertexSet& shore,
                                    const TraceNode& trace, const CanonicalTable& table,
                                    const std::vector<Interval>& family) {
    Interval s = locate_interval(shore, table);
    if (!table.near_min(s))
        throw ParameterError("cover extraction needs a near-minimum cut, got " +
                             shore.to_string());

    CoverBuilder builder{table, family, {}};
    if (builder.in_family(s))
        builder.picked.push_back(s);
    else
        builder.build(trace, s);

    if (builder.picked.size() > 8)
        throw IntegrityError("cover for " + s.to_string() + " has " +
                             std::to_string(builder.picked.size()) + " members");
    auto cuts = cuts_for_intervals(table, builder.picked);
    for (auto [u, v] : g.edges()) {
        if (shore.contains(u) == shore.contains(v)) continue;
        bool hit = false;
        for (const VertexSet& b : cuts)
            if (b.contains(u) != b.contains(v)) {
                hit = true;
                break;
            }
        if (!hit)
            throw VerificationError("cover misses edge (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") of cut " + s.to_string());
    }
    std::sort(builder.picked.begin(), builder.picked.end());
    return builder.picked;
}

}  // namespace thintree
