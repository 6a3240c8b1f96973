#include "thintree/kcycle.hpp"

namespace thintree {

bool is_cut_cycle(const std::vector<VertexSet>& sets, const std::vector<int>& seq) {
    int k = int(seq.size());
    if (k < 3) return false;
    int n = sets[seq[0]].universe_size();
    VertexSet uni(n);
    for (int i = 0; i < k; ++i) uni = uni | sets[seq[i]];
    if (uni.is_full()) return false;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool adjacent = (j - i == 1) || (i == 0 && j == k - 1);
            if (adjacent) {
                if (!crossing(sets[seq[i]], sets[seq[j]])) return false;
            } else {
                if (sets[seq[i]].intersects(sets[seq[j]])) return false;
            }
        }
    if (k == 3)
        for (int i = 0; i < 3; ++i) {
            const VertexSet& a = sets[seq[i]];
            const VertexSet& b = sets[seq[(i + 1) % 3]];
            const VertexSet& c = sets[seq[(i + 2) % 3]];
            if ((a & b).is_subset_of(c)) return false;
        }
    return true;
}

namespace {

struct CycleSearch {
    const std::vector<VertexSet>* sets;
    std::vector<std::vector<char>> cross, disjoint;
    int target_len = 0;
    long long budget = 0;
    bool exhausted = false;
    std::vector<int> seq;

    bool dfs() {
        if (--budget < 0) {
            exhausted = true;
            return false;
        }
        int p = int(seq.size());
        if (p == target_len) {
            // Reflection canonicalization, then the full predicate.
            if (target_len > 3 && seq[1] > seq.back()) return false;
            return is_cut_cycle(*sets, seq);
        }
        int first = seq[0];
        for (int cand = first + 1; cand < int(sets->size()); ++cand) {
            if (!cross[seq[p - 1]][cand]) continue;
            bool ok = true;
            for (int q = 0; q + 1 < p && ok; ++q) {
                if (q == 0 && p == target_len - 1) continue;  // closing neighbor
                if (!disjoint[seq[q]][cand]) ok = false;
            }
            if (p == target_len - 1 && !cross[first][cand]) ok = false;
            if (!ok) continue;
            seq.push_back(cand);
            if (dfs()) return true;
            seq.pop_back();
        }
        return false;
    }
};

}  // namespace

KCycleResult find_short_k_cycle(const std::vector<VertexSet>& sets, int max_len,
                                long long node_budget) {
    int c = int(sets.size());
    CycleSearch s;
    s.sets = &sets;
    s.cross.assign(c, std::vector<char>(c, 0));
    s.disjoint.assign(c, std::vector<char>(c, 0));
    for (int i = 0; i < c; ++i)
        for (int j = i + 1; j < c; ++j) {
            s.cross[i][j] = s.cross[j][i] = crossing(sets[i], sets[j]);
            s.disjoint[i][j] = s.disjoint[j][i] = !sets[i].intersects(sets[j]);
        }
    s.budget = node_budget;
    for (int len = 3; len <= max_len; ++len) {
        s.target_len = len;
        for (int start = 0; start < c; ++start) {
            s.seq = {start};
            if (s.dfs()) return {KCycleStatus::Found, s.seq};
        }
    }
    return {s.exhausted ? KCycleStatus::Inconclusive : KCycleStatus::None, {}};
}

KCycleResult find_short_k_cycle(const CrossComponent& comp, int max_len, long long node_budget) {
    std::vector<VertexSet> shores;
    shores.reserve(comp.cuts.size());
    for (const auto& cut : comp.cuts) shores.push_back(cut.shore);
    return find_short_k_cycle(shores, max_len, node_budget);
}

}  // namespace thintree
