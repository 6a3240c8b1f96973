#include "thintree/cuts.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "thintree/errors.hpp"

namespace thintree {

long long boundary_size(const MultiGraph& g, const VertexSet& shore) {
    long long c = 0;
    for (auto [u, v] : g.edges()) c += shore.contains(u) != shore.contains(v);
    return c;
}

long long min_cut_value(const MultiGraph& g) {
    int n = g.num_vertices();
    if (n < 2) throw ParameterError("minimum cut needs >= 2 vertices");
    if (!g.connected()) throw ParameterError("graph must be connected");

    // Stoer-Wagner on the multiplicity matrix; vertices get merged in place.
    std::vector<std::vector<long long>> w(n, std::vector<long long>(n, 0));
    for (auto [u, v] : g.edges()) {
        w[u][v]++;
        w[v][u]++;
    }
    std::vector<int> active(n);
    for (int i = 0; i < n; ++i) active[i] = i;

    long long best = -1;
    while (active.size() > 1) {
        // Maximum adjacency order over the active vertices.
        std::vector<long long> weight(active.size(), 0);
        std::vector<char> added(active.size(), 0);
        int prev = -1, last = -1;
        for (size_t step = 0; step < active.size(); ++step) {
            int pick = -1;
            for (size_t i = 0; i < active.size(); ++i)
                if (!added[i] && (pick == -1 || weight[i] > weight[pick])) pick = int(i);
            added[pick] = 1;
            prev = last;
            last = pick;
            for (size_t i = 0; i < active.size(); ++i)
                if (!added[i]) weight[i] += w[active[pick]][active[i]];
        }
        long long phase_cut = weight[last];
        if (best < 0 || phase_cut < best) best = phase_cut;
        // Merge last into prev.
        int a = active[prev], b = active[last];
        for (int x : active) {
            if (x == a || x == b) continue;
            w[a][x] += w[b][x];
            w[x][a] += w[x][b];
        }
        active.erase(active.begin() + last);
    }
    return best;
}

VertexSet canonical_shore(const VertexSet& s) { return s.contains(0) ? s.complement() : s; }

bool is_proper_cut(const VertexSet& shore) {
    int c = shore.count();
    return c >= 2 && shore.universe_size() - c >= 2;
}

bool below_near_min_threshold(long long boundary, long long k, const Rational& eta) {
    return Rational(boundary) < (Rational(1) + eta) * k;
}

namespace {

// Collect near-min cuts by repeated uniform edge contraction.  Batches of
// runs are repeated until three consecutive batches discover nothing new.
std::vector<CutRecord> contraction_enumerate(const MultiGraph& g, long long k,
                                             const Rational& eta, uint64_t seed) {
    int n = g.num_vertices();
    std::mt19937_64 rng(seed);
    std::unordered_set<VertexSet, VertexSetHash> seen;
    std::vector<CutRecord> found;

    auto run_once = [&] {
        // Union-find over vertices; contract random edges until 2 groups.
        std::vector<int> parent(n);
        for (int i = 0; i < n; ++i) parent[i] = i;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        int groups = n;
        while (groups > 2) {
            int id = int(rng() % uint64_t(g.num_edges()));
            auto [u, v] = g.edge(id);
            int ru = find(u), rv = find(v);
            if (ru == rv) continue;
            parent[ru] = rv;
            --groups;
        }
        VertexSet side(n);
        int rep = find(0);
        for (int v = 0; v < n; ++v)
            if (find(v) != rep) side.add(v);
        if (side.empty()) return;
        long long b = boundary_size(g, side);
        if (below_near_min_threshold(b, k, eta) && seen.insert(side).second)
            found.push_back({side, b});
    };

    int batch = std::max(64, n * n);
    int calm = 0;
    while (calm < 3) {
        size_t before = seen.size();
        for (int i = 0; i < batch; ++i) run_once();
        calm = seen.size() == before ? calm + 1 : 0;
    }
    return found;
}

}  // namespace

std::vector<CutRecord> enumerate_near_min_cuts(const MultiGraph& g, const Rational& eta,
                                               const EnumerateOptions& opts) {
    if (!(eta > 0) || eta > Rational(1, 5))
        throw ParameterError("eta must satisfy 0 < eta <= 1/5, got " + rational_to_string(eta));
    int n = g.num_vertices();
    long long k = min_cut_value(g);

    std::vector<CutRecord> out;
    if (n <= opts.max_bruteforce_n) {
        if (n > 26) throw BudgetError("exhaustive shore enumeration capped at 26 vertices");
        // Shores are the nonempty subsets of {1..n-1}: each cut exactly once.
        uint64_t limit = uint64_t(1) << (n - 1);
        for (uint64_t mask = 1; mask < limit; ++mask) {
            VertexSet shore(n);
            for (int v = 1; v < n; ++v)
                if ((mask >> (v - 1)) & 1) shore.add(v);
            long long b = boundary_size(g, shore);
            if (below_near_min_threshold(b, k, eta)) out.push_back({shore, b});
        }
    } else {
        out = contraction_enumerate(g, k, eta, opts.seed);
    }
    std::sort(out.begin(), out.end(),
              [](const CutRecord& a, const CutRecord& b) { return a.shore.lex_less(b.shore); });
    return out;
}

}  // namespace thintree
