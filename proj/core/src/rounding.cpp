#include "thintree/rounding.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "thintree/errors.hpp"

namespace thintree {

namespace {

std::vector<long long> family_crossings(const MultiGraph& g, const LaminarFamily& family,
                                        const SpanningTree& tree) {
    std::vector<long long> out;
    out.reserve(family.sets.size());
    for (const auto& e : family.sets) out.push_back(crossing_count(g, tree, e.shore));
    return out;
}

}  // namespace

RoundResult iterative_round(const MultiGraph& g, const LaminarFamily& family,
                            const BoundsMap& bounds, const FractionalPoint& start) {
    if (int(start.x.size()) != g.num_edges())
        throw ParameterError("starting point does not match the graph");

    RoundResult result;
    result.dropped.assign(family.sets.size(), false);

    bool integral = true;
    for (const auto& v : start.x)
        if (v != 0 && v != 1) {
            integral = false;
            break;
        }
    if (integral) {
        SpanningTree t;
        for (int e = 0; e < g.num_edges(); ++e)
            if (start.x[e] == 1) t.edges.push_back(e);
        check_spanning_tree(g, t);
        result.tree = t;
        result.crossings = family_crossings(g, family, t);
        return result;
    }

    TreeLp lp(g, family, bounds);
    const auto& sup = lp.support();
    int ms = int(sup.size());
    std::vector<EdgeStatus> status(ms, EdgeStatus::Active);
    std::vector<bool> active_row(family.sets.size(), true);

    auto residual = [&](size_t f) {
        long long r = bounds.b[f];
        for (int e = 0; e < ms; ++e)
            if (status[e] == EdgeStatus::Fixed &&
                family.sets[f].shore.contains(sup[e].u) !=
                    family.sets[f].shore.contains(sup[e].v))
                --r;
        return r;
    };
    auto fractional_boundary = [&](size_t f) {
        long long c = 0;
        for (int e = 0; e < ms; ++e)
            if (status[e] == EdgeStatus::Active &&
                family.sets[f].shore.contains(sup[e].u) !=
                    family.sets[f].shore.contains(sup[e].v))
                ++c;
        return c;
    };

    while (std::count(status.begin(), status.end(), EdgeStatus::Active) > 0) {
        auto vals = lp.solve(status, active_row);
        ++result.lp_solves;

        bool changed = false;
        for (int e = 0; e < ms; ++e) {
            if (status[e] != EdgeStatus::Active) continue;
            if (vals[e] == 0) {
                status[e] = EdgeStatus::Deleted;
                changed = true;
            } else if (vals[e] == 1) {
                status[e] = EdgeStatus::Fixed;
                changed = true;
            }
        }
        if (changed) continue;

        for (size_t f = 0; f < family.sets.size(); ++f) {
            if (!active_row[f]) continue;
            if (fractional_boundary(f) <= residual(f) + 3) {
                active_row[f] = false;
                result.dropped[f] = true;
                changed = true;
            }
        }
        if (changed) continue;

        std::ostringstream dump;
        dump << "iterative rounding is stuck at a fully fractional vertex;";
        dump << " active edges:";
        for (int e = 0; e < ms; ++e)
            if (status[e] == EdgeStatus::Active)
                dump << " (" << sup[e].u << "," << sup[e].v << ")="
                     << rational_to_string(vals[e]);
        dump << "; live rows:";
        for (size_t f = 0; f < family.sets.size(); ++f)
            if (active_row[f])
                dump << " " << family.sets[f].shore.to_string() << " frac="
                     << fractional_boundary(f) << " residual=" << residual(f);
        throw IntegrityError(dump.str());
    }

    std::map<std::pair<int, int>, int> first_id;
    for (int e = 0; e < g.num_edges(); ++e) first_id.emplace(g.edges()[e], e);
    SpanningTree tree;
    for (int e = 0; e < ms; ++e)
        if (status[e] == EdgeStatus::Fixed)
            tree.edges.push_back(first_id.at({sup[e].u, sup[e].v}));
    std::sort(tree.edges.begin(), tree.edges.end());
    check_spanning_tree(g, tree);

    result.tree = tree;
    result.crossings = family_crossings(g, family, tree);
    return result;
}

}  // namespace thintree
