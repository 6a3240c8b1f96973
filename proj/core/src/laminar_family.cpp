#include "thintree/laminar_family.hpp"

#include <algorithm>
#include <numeric>

#include "thintree/crossing.hpp"
#include "thintree/errors.hpp"

namespace thintree {

namespace {

void orient_away(FamilyEntry& e, int root_vertex) {
    if (e.shore.contains(root_vertex)) e.shore = e.shore.complement();
}

// parent[i] = smallest strict superset; requires pairwise nested-or-disjoint.
std::vector<int> build_forest(const std::vector<FamilyEntry>& sets) {
    std::vector<int> parent(sets.size(), -1);
    for (size_t i = 0; i < sets.size(); ++i) {
        int best = -1;
        for (size_t j = 0; j < sets.size(); ++j) {
            if (i == j || !(sets[i].shore.is_subset_of(sets[j].shore))) continue;
            if (sets[i].shore == sets[j].shore) continue;
            if (best < 0 || sets[j].shore.count() < sets[best].shore.count()) best = int(j);
        }
        parent[i] = best;
    }
    return parent;
}

void append_unique(std::vector<FamilyEntry>& out, FamilyEntry e, int root_vertex) {
    orient_away(e, root_vertex);
    for (const auto& kept : out)
        if (kept.shore == e.shore) return;
    out.push_back(std::move(e));
}

}  // namespace

LaminarFamily combine_components(const MultiGraph& g,
                                 const std::vector<std::vector<FamilyEntry>>& per_component,
                                 const std::vector<CutRecord>& singleton_cuts,
                                 int root_vertex) {
    if (root_vertex < 0 || root_vertex >= g.num_vertices())
        throw ParameterError("root vertex out of range");

    LaminarFamily fam;
    for (const auto& comp : per_component)
        for (const auto& e : comp) append_unique(fam.sets, e, root_vertex);
    for (const auto& rec : singleton_cuts) {
        FamilyEntry e;
        e.shore = rec.shore;
        e.boundary = rec.boundary;
        append_unique(fam.sets, std::move(e), root_vertex);
    }

    for (size_t i = 0; i < fam.sets.size(); ++i)
        for (size_t j = i + 1; j < fam.sets.size(); ++j)
            if (crossing(fam.sets[i].shore, fam.sets[j].shore))
                throw IntegrityError("combined family is not cross-free: " +
                                     fam.sets[i].shore.to_string() + " crosses " +
                                     fam.sets[j].shore.to_string());

    fam.parent = build_forest(fam.sets);
    return fam;
}

LaminarFamily naive_maximal_laminar(const MultiGraph& g, const std::vector<CutRecord>& cuts,
                                    int root_vertex) {
    if (root_vertex < 0 || root_vertex >= g.num_vertices())
        throw ParameterError("root vertex out of range");

    LaminarFamily fam;
    for (const auto& rec : cuts) {
        bool crosses = false;
        for (const auto& kept : fam.sets)
            if (crossing(kept.shore, rec.shore)) {
                crosses = true;
                break;
            }
        if (crosses) continue;
        FamilyEntry e;
        e.shore = rec.shore;
        e.boundary = rec.boundary;
        append_unique(fam.sets, std::move(e), root_vertex);
    }
    fam.parent = build_forest(fam.sets);
    return fam;
}

}  // namespace thintree
