#include "thintree/make_lam.hpp"

#include <algorithm>
#include <set>

#include "thintree/errors.hpp"

namespace thintree {

bool intervals_laminar(const std::vector<Interval>& family) {
    for (size_t i = 0; i < family.size(); ++i)
        for (size_t j = i + 1; j < family.size(); ++j)
            if (intervals_cross(family[i], family[j])) return false;
    return true;
}

namespace {

struct LamBuilder {
    const CanonicalTable& table;
    std::set<Interval> family;
    int depth_cap;

    explicit LamBuilder(const CanonicalTable& t)
        : table(t), depth_cap(4 * t.m + 16) {}

    bool in_family_language(const Interval& iv) const {
        const auto& cell = table.at(iv);
        return cell.special || cell.diff_of_specials;
    }

    std::unique_ptr<TraceNode> run(int l, int r, int depth, int untouched) {
        auto node = std::make_unique<TraceNode>();
        node->active = {l, r};
        node->depth = depth;
        node->untouched = untouched;
        if (depth > depth_cap)
            throw IntegrityError("laminar recursion exceeded its depth cap at <" +
                                 std::to_string(l) + "," + std::to_string(r) + ">");
        if (l >= r) return node;

        if (untouched >= 2) {
            node->kind = TraceKind::Shrink;
            node->children.push_back(run(l + 1, r, depth + 1, 0));
            return node;
        }

        if (in_family_language({l, r})) {
            family.insert({l, r});
            node->emitted = true;
        }

        bool prefix = depth % 2 == 0;
        // Chain points strictly inside (l, r); the degenerate endpoint would
        // recreate the same interval one level down and never terminate.
        std::vector<int> chain;
        for (int x = l + 1; x < r; ++x) {
            Interval candidate = prefix ? Interval{l, x} : Interval{x, r};
            if (table.special(candidate)) chain.push_back(x);
        }

        if (chain.empty()) {
            node->kind = TraceKind::Flip;
            node->children.push_back(run(l, r, depth + 1, untouched + 1));
            return node;
        }

        node->kind = TraceKind::Rings;
        node->prefix_round = prefix;
        node->chain = chain;
        for (int x : chain) family.insert(prefix ? Interval{l, x} : Interval{x, r});
        std::vector<int> stops;
        stops.push_back(l);
        stops.insert(stops.end(), chain.begin(), chain.end());
        stops.push_back(r);
        for (size_t i = 0; i + 1 < stops.size(); ++i)
            node->children.push_back(run(stops[i], stops[i + 1], depth + 1, 0));
        return node;
    }
};

// Strict 4-eta threshold: b * q < (q + 4 p) * k for eta = p/q.
bool within_four_eta(long long boundary, long long k, const Rational& eta) {
    BigInt p = numerator(eta), q = denominator(eta);
    return BigInt(boundary) * q < (q + 4 * p) * BigInt(k);
}

}  // namespace

MakeLamResult make_lam(const CanonicalTable& table) {
    if (table.eta > Rational(1, 20))
        throw ParameterError("laminar construction needs eta <= 1/20");

    LamBuilder builder(table);
    MakeLamResult result;
    result.trace = builder.run(1, table.m, 0, 0);
    result.family.assign(builder.family.begin(), builder.family.end());

    for (const Interval& iv : result.family) {
        const auto& cell = table.at(iv);
        if (!cell.shadow)
            throw IntegrityError("family member " + iv.to_string() + " has no canonical cut");
        if (!table.heuristic && !within_four_eta(cell.boundary, table.k, table.eta))
            throw IntegrityError("family member " + iv.to_string() +
                                 " is not a 4-eta near-minimum cut");
    }
    if (!intervals_laminar(result.family))
        throw IntegrityError("constructed family is not laminar");
    return result;
}

}  // namespace thintree
