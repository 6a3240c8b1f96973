#include "thintree/generators.hpp"

#include <numeric>
#include <random>

#include "thintree/errors.hpp"

namespace thintree {

MultiGraph gen_cycle(int n, int copies) {
    if (n < 3) throw ParameterError("cycle needs at least 3 vertices");
    if (copies < 1) throw ParameterError("cycle needs at least one copy per edge");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < copies; ++c) edges.push_back({i, (i + 1) % n});
    return MultiGraph(n, edges);
}

std::vector<int> fig1_h2_order(int n) {
    if (n < 6 || n % 2 != 0) throw ParameterError("zigzag instance needs even n >= 6");
    std::vector<int> seq{0};
    int lo = 1, hi = n - 1;
    while (int(seq.size()) < n) {
        seq.push_back(lo++);
        if (int(seq.size()) < n) seq.push_back(hi--);
    }
    return seq;
}

MultiGraph gen_fig1(int n, int k) {
    if (k < 1) throw ParameterError("zigzag instance needs k >= 1");
    auto seq = fig1_h2_order(n);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < k; ++c) edges.push_back({i, (i + 1) % n});
    for (int i = 0; i < n; ++i) edges.push_back({seq[i], seq[(i + 1) % n]});
    return MultiGraph(n, edges);
}

std::vector<VertexSet> fig1_adversarial_cuts(int n) {
    auto seq = fig1_h2_order(n);
    std::vector<VertexSet> cuts;
    VertexSet prefix(n);
    prefix.add(seq[0]);
    for (int i = 1; i + 1 < n; ++i) {
        prefix.add(seq[i]);
        if (prefix.count() >= 2) cuts.push_back(prefix);
    }
    return cuts;
}

std::vector<int> fig1_h2_tree(int n, int k) {
    fig1_h2_order(n);  // validates n
    std::vector<int> ids(n - 1);
    std::iota(ids.begin(), ids.end(), n * k);
    return ids;
}

MultiGraph gen_fig2() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 14; ++i)
        for (int c = 0; c < 3; ++c) edges.push_back({i, (i + 1) % 14});
    for (int v = 0; v <= 5; ++v) edges.push_back({v, 14});
    for (int v = 8; v <= 13; ++v) edges.push_back({v, 15});
    edges.push_back({14, 15});
    edges.push_back({5, 7});
    edges.push_back({6, 8});
    return MultiGraph(16, edges);
}

MultiGraph gen_random_kec(int n, int c, uint64_t seed) {
    if (n < 4) throw ParameterError("random instance needs n >= 4");
    if (c < 1) throw ParameterError("random instance needs at least one cycle");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> perm(n);
    for (int cycle = 0; cycle < c; ++cycle) {
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = n - 1; i >= 1; --i) {
            int j = int(rng() % uint64_t(i + 1));
            std::swap(perm[i], perm[j]);
        }
        for (int i = 0; i < n; ++i) edges.push_back({perm[i], perm[(i + 1) % n]});
    }
    return MultiGraph(n, edges);
}

}  // namespace thintree
