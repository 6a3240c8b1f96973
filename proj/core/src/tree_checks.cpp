#include "thintree/tree_checks.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>

#include "thintree/errors.hpp"

namespace thintree {

void check_spanning_tree(const MultiGraph& g, const SpanningTree& t) {
    int n = g.num_vertices();
    if (int(t.edges.size()) != n - 1)
        throw VerificationError("tree has " + std::to_string(t.edges.size()) +
                                " edges, expected " + std::to_string(n - 1));
    std::vector<int> sorted = t.edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw VerificationError("tree repeats an edge id");

    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int id : t.edges) {
        if (id < 0 || id >= g.num_edges())
            throw VerificationError("tree edge id " + std::to_string(id) + " out of range");
        auto [u, v] = g.edges()[id];
        int ru = find(u), rv = find(v);
        if (ru == rv)
            throw VerificationError("tree contains a cycle through edge " + std::to_string(id));
        parent[ru] = rv;
    }
}

long long crossing_count(const MultiGraph& g, const SpanningTree& t, const VertexSet& shore) {
    long long c = 0;
    for (int id : t.edges) {
        auto [u, v] = g.edges()[id];
        if (shore.contains(u) != shore.contains(v)) ++c;
    }
    return c;
}

CrossingReport verify_tree(const MultiGraph& g, const SpanningTree& t,
                           const std::vector<CutRecord>& cuts, long long threshold) {
    check_spanning_tree(g, t);
    CrossingReport rep;
    rep.threshold = threshold;
    rep.counts.reserve(cuts.size());
    for (const auto& rec : cuts) {
        long long c = crossing_count(g, t, rec.shore);
        rep.counts.push_back(c);
        rep.max_crossing = std::max(rep.max_crossing, c);
    }
    rep.pass = rep.max_crossing <= threshold;
    return rep;
}

namespace {

struct TreeSearch {
    const std::vector<SupportEdge>& sup;
    const LaminarFamily& family;
    const BoundsMap& bounds;
    int n;

    std::vector<std::vector<bool>> crosses;  // [set][support edge]
    std::vector<long long> cnt;              // crossings of the partial tree
    std::vector<int> chosen;
    std::vector<int> best;
    long long best_violation = 0;
    bool have_best = false;
    long long nodes = 0;

    long long current_violation() const {
        long long worst = LLONG_MIN;
        for (size_t f = 0; f < cnt.size(); ++f)
            worst = std::max(worst, cnt[f] - bounds.b[f]);
        return cnt.empty() ? 0 : worst;
    }

    void rec(int idx, int taken, std::vector<int> parent) {
        if (++nodes > 20'000'000) throw BudgetError("tree enumeration budget exceeded");
        if (taken == n - 1) {
            long long v = current_violation();
            if (!have_best || v < best_violation) {
                have_best = true;
                best_violation = v;
                best = chosen;
            }
            return;
        }
        if (idx >= int(sup.size()) || taken + int(sup.size()) - idx < n - 1) return;

        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v];
            return v;
        };
        int ru = find(sup[idx].u), rv = find(sup[idx].v);
        if (ru != rv) {
            auto linked = parent;
            linked[ru] = rv;
            for (size_t f = 0; f < cnt.size(); ++f) cnt[f] += crosses[f][idx];
            chosen.push_back(idx);
            // Crossing counts only grow along this branch; prune when the
            // partial tree already matches the best finished one.
            if (!have_best || current_violation() < best_violation)
                rec(idx + 1, taken + 1, std::move(linked));
            chosen.pop_back();
            for (size_t f = 0; f < cnt.size(); ++f) cnt[f] -= crosses[f][idx];
        }
        rec(idx + 1, taken, std::move(parent));
    }
};

}  // namespace

SpanningTree oracle_best_tree(const MultiGraph& g, const LaminarFamily& family,
                              const BoundsMap& bounds) {
    auto sup = g.support();
    if (g.num_vertices() > 12 || sup.size() > 24)
        throw BudgetError("exhaustive tree search limited to 12 vertices / 24 support edges");
    if (bounds.b.size() != family.sets.size())
        throw ParameterError("bounds do not align with the family");

    TreeSearch search{sup, family, bounds, g.num_vertices(), {}, {}, {}, {}};
    search.crosses.assign(family.sets.size(), std::vector<bool>(sup.size(), false));
    for (size_t f = 0; f < family.sets.size(); ++f)
        for (size_t e = 0; e < sup.size(); ++e)
            search.crosses[f][e] = family.sets[f].shore.contains(sup[e].u) !=
                                   family.sets[f].shore.contains(sup[e].v);
    search.cnt.assign(family.sets.size(), 0);

    std::vector<int> parent(g.num_vertices());
    std::iota(parent.begin(), parent.end(), 0);
    search.rec(0, 0, parent);
    if (!search.have_best)
        throw VerificationError("support graph is not connected; no spanning tree exists");

    std::map<std::pair<int, int>, int> first_id;
    for (int e = 0; e < g.num_edges(); ++e) first_id.emplace(g.edges()[e], e);
    SpanningTree t;
    for (int idx : search.best) t.edges.push_back(first_id.at({sup[idx].u, sup[idx].v}));
    std::sort(t.edges.begin(), t.edges.end());
    return t;
}

}  // namespace thintree
