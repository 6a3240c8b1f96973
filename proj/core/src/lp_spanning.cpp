#include "thintree/lp_spanning.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "thintree/errors.hpp"
#include "thintree/simplex.hpp"

namespace thintree {

namespace {

// Exact-arithmetic max flow (shortest augmenting paths).
struct FlowNet {
    struct Arc {
        int to, rev;
        Rational cap;
    };
    std::vector<std::vector<Arc>> adj;

    explicit FlowNet(int n) : adj(n) {}

    void add(int u, int v, const Rational& cap) {
        adj[u].push_back({v, int(adj[v].size()), cap});
        adj[v].push_back({u, int(adj[u].size()) - 1, Rational(0)});
    }

    Rational max_flow(int s, int t) {
        Rational total = 0;
        for (;;) {
            std::vector<std::pair<int, int>> pred(adj.size(), {-1, -1});
            std::deque<int> queue{s};
            pred[s] = {s, 0};
            while (!queue.empty() && pred[t].first < 0) {
                int u = queue.front();
                queue.pop_front();
                for (int i = 0; i < int(adj[u].size()); ++i) {
                    const Arc& a = adj[u][i];
                    if (a.cap > 0 && pred[a.to].first < 0) {
                        pred[a.to] = {u, i};
                        queue.push_back(a.to);
                    }
                }
            }
            if (pred[t].first < 0) return total;
            Rational push = -1;
            for (int v = t; v != s;) {
                auto [u, i] = pred[v];
                if (push < 0 || adj[u][i].cap < push) push = adj[u][i].cap;
                v = u;
            }
            for (int v = t; v != s;) {
                auto [u, i] = pred[v];
                adj[u][i].cap -= push;
                adj[adj[u][i].to][adj[u][i].rev].cap += push;
                v = u;
            }
            total += push;
        }
    }

    // Source side of the final residual graph.
    std::vector<bool> min_cut_side(int s) const {
        std::vector<bool> seen(adj.size(), false);
        std::deque<int> queue{s};
        seen[s] = true;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (const Arc& a : adj[u])
                if (a.cap > 0 && !seen[a.to]) {
                    seen[a.to] = true;
                    queue.push_back(a.to);
                }
        }
        return seen;
    }
};

}  // namespace

TreeLp::TreeLp(const MultiGraph& g, const LaminarFamily& family, const BoundsMap& bounds)
    : g_(g), family_(family), bounds_(bounds), support_(g.support()) {
    if (bounds.b.size() != family.sets.size())
        throw ParameterError("bounds do not align with the family");
    if (support_.size() > 200)
        throw BudgetError("tree LP limited to 200 support edges for exact arithmetic");
}

VertexSet TreeLp::find_violated_subtour(const std::vector<Rational>& x_full) const {
    int n = g_.num_vertices();
    int ms = int(support_.size());
    Rational total = 0;
    for (const auto& v : x_full) total += v;

    for (int t = 0; t < n; ++t) {
        // Nodes: 0 source, 1 sink, 2..2+ms-1 support edges, 2+ms.. vertices.
        FlowNet net(2 + ms + n);
        auto vnode = [&](int v) { return 2 + ms + v; };
        for (int e = 0; e < ms; ++e) {
            if (x_full[e] == 0) continue;
            net.add(0, 2 + e, x_full[e]);
            net.add(2 + e, vnode(support_[e].u), total + 1);
            net.add(2 + e, vnode(support_[e].v), total + 1);
        }
        for (int v = 0; v < n; ++v)
            if (v != t) net.add(vnode(v), 1, Rational(1));

        Rational flow = net.max_flow(0, 1);
        if (flow >= total) continue;  // no set containing t beats x(E(U)) = |U|-1

        auto side = net.min_cut_side(0);
        VertexSet u(n);
        for (int v = 0; v < n; ++v)
            if (side[vnode(v)]) u.add(v);
        if (u.count() >= 2 && !u.is_full()) return u;
    }
    return VertexSet(n);
}

std::vector<Rational> TreeLp::solve(const std::vector<EdgeStatus>& status,
                                    const std::vector<bool>& family_active) {
    int n = g_.num_vertices();
    int ms = int(support_.size());
    if (int(status.size()) != ms || family_active.size() != family_.sets.size())
        throw ParameterError("status vectors do not align with the LP");

    std::vector<int> var_of(ms, -1);
    std::vector<int> active;
    long long fixed_count = 0;
    for (int e = 0; e < ms; ++e) {
        if (status[e] == EdgeStatus::Active) {
            var_of[e] = int(active.size());
            active.push_back(e);
        } else if (status[e] == EdgeStatus::Fixed) {
            ++fixed_count;
        }
    }

    for (;;) {
        int nv = int(active.size());
        std::vector<std::vector<Rational>> rows;
        std::vector<Rational> rhs;
        auto blank = [&] { return std::vector<Rational>(nv, Rational(0)); };

        Rational mass = Rational(n - 1 - fixed_count);
        if (mass < 0)
            throw IntegrityError("more fixed edges than a spanning tree can hold");
        auto all_one = blank();
        for (auto& c : all_one) c = 1;
        rows.push_back(all_one);
        rhs.push_back(mass);
        for (auto& c : all_one) c = -1;
        rows.push_back(all_one);
        rhs.push_back(-mass);

        for (int j = 0; j < nv; ++j) {
            auto row = blank();
            row[j] = 1;
            rows.push_back(row);
            rhs.push_back(Rational(1));
        }

        for (size_t f = 0; f < family_.sets.size(); ++f) {
            if (!family_active[f]) continue;
            const VertexSet& shore = family_.sets[f].shore;
            auto row = blank();
            long long folded = bounds_.b[f];
            bool any = false;
            for (int e = 0; e < ms; ++e) {
                if (shore.contains(support_[e].u) == shore.contains(support_[e].v)) continue;
                if (status[e] == EdgeStatus::Fixed) --folded;
                if (var_of[e] >= 0) {
                    row[var_of[e]] = 1;
                    any = true;
                }
            }
            if (folded < 0)
                throw IntegrityError("fixed edges already exceed the bound of " +
                                     shore.to_string());
            if (!any) continue;
            rows.push_back(row);
            rhs.push_back(Rational(folded));
        }

        for (const VertexSet& u : subtours_) {
            auto row = blank();
            long long folded = (long long)u.count() - 1;
            bool any = false;
            for (int e = 0; e < ms; ++e) {
                if (!u.contains(support_[e].u) || !u.contains(support_[e].v)) continue;
                if (status[e] == EdgeStatus::Fixed) --folded;
                if (var_of[e] >= 0) {
                    row[var_of[e]] = 1;
                    any = true;
                }
            }
            if (folded < 0)
                throw IntegrityError("fixed edges form a cycle inside " + u.to_string());
            if (!any) continue;
            rows.push_back(row);
            rhs.push_back(Rational(folded));
        }

        auto res = solve_lp(rows, rhs, std::vector<Rational>(nv, Rational(0)));
        if (res.status != SimplexResult::Status::Optimal)
            throw IntegrityError("tree polytope with family bounds is infeasible "
                                 "(phase-one deficit " +
                                 rational_to_string(res.value) + ")");

        std::vector<Rational> full(ms, Rational(0));
        for (int e = 0; e < ms; ++e) {
            if (status[e] == EdgeStatus::Fixed)
                full[e] = 1;
            else if (var_of[e] >= 0)
                full[e] = res.x[var_of[e]];
        }

        VertexSet u = find_violated_subtour(full);
        if (u.empty()) return full;
        for (const VertexSet& seen : subtours_)
            if (seen == u)
                throw IntegrityError("separator repeated subtour set " + u.to_string());
        subtours_.push_back(u);
    }
}

FractionalPoint solve_fractional(const MultiGraph& g, const LaminarFamily& family,
                                 const BoundsMap& bounds) {
    TreeLp lp(g, family, bounds);
    std::vector<EdgeStatus> status(lp.support().size(), EdgeStatus::Active);
    std::vector<bool> family_active(family.sets.size(), true);
    auto vals = lp.solve(status, family_active);

    std::map<std::pair<int, int>, int> first_id;
    const auto& edges = g.edges();
    for (int e = 0; e < g.num_edges(); ++e)
        first_id.emplace(edges[e], e);

    FractionalPoint p;
    p.x.assign(g.num_edges(), Rational(0));
    const auto& sup = lp.support();
    for (size_t i = 0; i < sup.size(); ++i)
        p.x[first_id.at({sup[i].u, sup[i].v})] = vals[i];
    return p;
}

}  // namespace thintree
