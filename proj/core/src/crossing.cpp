#include "thintree/crossing.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace thintree {

bool crossing(const VertexSet& a, const VertexSet& b) {
    if (!(a & b).empty() && !(a - b).empty() && !(b - a).empty() && !(a | b).is_full())
        return true;
    return false;
}

std::vector<CrossComponent> components(const std::vector<CutRecord>& cuts, int n) {
    int c = int(cuts.size());
    std::vector<int> parent(c);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < c; ++i)
        for (int j = i + 1; j < c; ++j)
            if (crossing(cuts[i].shore, cuts[j].shore)) {
                int ri = find(i), rj = find(j);
                if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
            }

    std::map<int, CrossComponent> by_root;  // keyed by smallest member index
    for (int i = 0; i < c; ++i) {
        auto& comp = by_root[find(i)];
        comp.members.push_back(i);
        comp.cuts.push_back(cuts[i]);
    }
    std::vector<CrossComponent> out;
    out.reserve(by_root.size());
    for (auto& [root, comp] : by_root) {
        comp.atoms = atoms(comp.cuts, n);
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<VertexSet> atoms(const std::vector<CutRecord>& cuts, int n) {
    // Membership signature per vertex; equal signatures share an atom.
    std::map<std::vector<bool>, VertexSet> groups;
    for (int v = 0; v < n; ++v) {
        std::vector<bool> sig(cuts.size());
        for (size_t i = 0; i < cuts.size(); ++i) sig[i] = cuts[i].shore.contains(v);
        auto [it, fresh] = groups.try_emplace(std::move(sig), VertexSet(n));
        it->second.add(v);
    }
    std::vector<VertexSet> out;
    out.reserve(groups.size());
    for (auto& [sig, block] : groups) out.push_back(std::move(block));
    std::sort(out.begin(), out.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.min_element() < b.min_element(); });
    return out;
}

}  // namespace thintree
