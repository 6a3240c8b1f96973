#include "thintree/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <memory>
#include <string>
#include <utility>

#include "thintree/canonical.hpp"
#include "thintree/cover.hpp"
#include "thintree/crossing.hpp"
#include "thintree/errors.hpp"
#include "thintree/lp_spanning.hpp"
#include "thintree/make_lam.hpp"
#include "thintree/polygon.hpp"

namespace thintree {

std::string instance_hash(const MultiGraph& g) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : graph_to_string(g)) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

namespace {

// Everything the cover stage needs to revisit one big component.
struct CompData {
    PolygonRep poly;
    CanonicalTable table;
    MakeLamResult lam;
};

template <class F>
auto stage(const std::string& name, const std::string& hash, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const IntegrityError& e) {
        throw IntegrityError("stage " + name + " on instance " + hash + ": " + e.what());
    } catch (const VerificationError& e) {
        throw VerificationError("stage " + name + " on instance " + hash + ": " + e.what());
    }
}

BaselineReport run_baseline(const MultiGraph& g, const RunConfig& config, long long k,
                            const std::vector<CutRecord>& cuts) {
    std::vector<CutRecord> ordered;
    auto push_unique = [&](CutRecord rec) {
        for (const auto& kept : ordered)
            if (kept.shore == rec.shore) return;
        ordered.push_back(std::move(rec));
    };
    for (const VertexSet& s : config.baseline->priority_cuts) {
        if (s.universe_size() != g.num_vertices())
            throw ParameterError("baseline cut universe does not match the graph");
        CutRecord rec;
        rec.shore = canonical_shore(s);
        rec.boundary = boundary_size(g, rec.shore);
        if (!below_near_min_threshold(rec.boundary, k, config.eta))
            throw ParameterError("baseline priority cut is not near-minimum: " +
                                 rec.shore.to_string());
        push_unique(std::move(rec));
    }
    for (const auto& rec : cuts) push_unique(rec);

    LaminarFamily naive = naive_maximal_laminar(g, ordered, config.root_vertex);
    BoundsMap nb = compute_bounds(g, naive, k);
    SpanningTree tree{config.baseline->tree_edges};
    check_spanning_tree(g, tree);

    BaselineReport rep;
    rep.family_size = int(naive.sets.size());
    rep.tree_family_bounds_ok = true;
    for (size_t f = 0; f < naive.sets.size(); ++f) {
        long long c = crossing_count(g, tree, naive.sets[f].shore);
        rep.tree_max_family_crossing = std::max(rep.tree_max_family_crossing, c);
        if (c > nb.b[f]) rep.tree_family_bounds_ok = false;
    }
    rep.tree_max_nmc_crossing = verify_tree(g, tree, cuts, 88).max_crossing;
    return rep;
}

}  // namespace

PipelineResult run_pipeline(const MultiGraph& g, const RunConfig& config) {
    if (g.num_vertices() < 2) throw ParameterError("pipeline needs at least two vertices");
    if (!g.connected()) throw ParameterError("pipeline needs a connected graph");
    if (config.eta <= 0 || config.eta > Rational(1, 5))
        throw ParameterError("eta must lie in (0, 1/5]");
    if (config.root_vertex < 0 || config.root_vertex >= g.num_vertices())
        throw ParameterError("root vertex out of range");

    PipelineResult r;
    r.instance_hash = instance_hash(g);
    r.n = g.num_vertices();
    r.edges = g.num_edges();
    r.eta = config.eta;
    const std::string hash = r.instance_hash;

    r.k = stage("min-cut", hash, [&] { return min_cut_value(g); });

    EnumerateOptions eopts;
    eopts.max_bruteforce_n = config.max_bruteforce_n;
    eopts.seed = config.seed;
    auto cuts = stage("enumerate", hash,
                      [&] { return enumerate_near_min_cuts(g, config.eta, eopts); });
    r.near_min_cuts = int(cuts.size());

    auto comps =
        stage("components", hash, [&] { return components(cuts, g.num_vertices()); });
    std::vector<int> comp_of(cuts.size(), -1);
    for (size_t c = 0; c < comps.size(); ++c)
        for (int idx : comps[c].members) comp_of[idx] = int(c);

    std::vector<std::unique_ptr<CompData>> data(comps.size());
    std::vector<std::vector<FamilyEntry>> per_component;
    std::vector<CutRecord> singles;
    r.component_reports.resize(comps.size());
    for (size_t c = 0; c < comps.size(); ++c) {
        auto& rep = r.component_reports[c];
        rep.cuts = int(comps[c].cuts.size());
        if (comps[c].cuts.size() < 2) {
            singles.push_back(comps[c].cuts[0]);
            rep.family_intervals = 1;
            ++r.singleton_components;
            continue;
        }
        ++r.big_components;
        const std::string tag = "[" + std::to_string(c) + "]";
        auto d = std::make_unique<CompData>();
        d->poly = stage("polygon" + tag, hash, [&] {
            auto p = build_polygon(comps[c]);
            verify_polygon(p, comps[c]);
            return p;
        });
        d->table = stage("canonical-table" + tag, hash,
                         [&] { return build_canonical_table(g, d->poly, r.k, config.eta); });
        d->lam = stage("make-lam" + tag, hash, [&] { return make_lam(d->table); });
        rep.outside = d->poly.m();
        rep.inside = int(d->poly.inside.size());
        rep.family_intervals = int(d->lam.family.size());
        rep.heuristic = d->table.heuristic;
        r.heuristic = r.heuristic || d->table.heuristic;

        std::vector<FamilyEntry> entries;
        for (const Interval& iv : d->lam.family) {
            const CanonicalEntry& cell = d->table.at(iv);
            FamilyEntry e;
            e.shore = cell.cut;
            e.boundary = cell.boundary;
            e.component = int(c);
            e.special = cell.special;
            e.diff_of_specials = cell.diff_of_specials;
            e.interval = iv;
            entries.push_back(std::move(e));
        }
        per_component.push_back(std::move(entries));
        data[c] = std::move(d);
    }

    r.family = stage("combine", hash, [&] {
        return combine_components(g, per_component, singles, config.root_vertex);
    });
    for (auto& e : r.family.sets)
        if (e.component < 0) e.special = true;  // a lone near-min cut is its own special

    r.bounds = stage("bounds", hash, [&] { return compute_bounds(g, r.family, r.k); });

    // The constant point x_e = 2/k must satisfy every family bound (the
    // bounds were rounded up from exactly this mass).
    stage("point", hash, [&] {
        FractionalPoint p2 = fractional_point(g, r.k, Rational(2, r.k));
        r.point_in_polytope = true;
        for (size_t f = 0; f < r.family.sets.size(); ++f) {
            const VertexSet& shore = r.family.sets[f].shore;
            Rational mass = 0;
            for (int e = 0; e < g.num_edges(); ++e) {
                auto [u, v] = g.edge(e);
                if (shore.contains(u) != shore.contains(v)) mass += p2.x[e];
            }
            if (mass > r.bounds.b[f]) r.point_in_polytope = false;
        }
        return 0;
    });

    auto vertex_point =
        stage("solve-lp", hash, [&] { return solve_fractional(g, r.family, r.bounds); });
    r.round = stage("round", hash,
                    [&] { return iterative_round(g, r.family, r.bounds, vertex_point); });

    r.tree_within_bounds = true;
    for (size_t f = 0; f < r.family.sets.size(); ++f) {
        r.max_family_crossing = std::max(r.max_family_crossing, r.round.crossings[f]);
        long long limit = r.bounds.b[f] + (r.round.dropped[f] ? 3 : 0);
        if (r.round.crossings[f] > limit) r.tree_within_bounds = false;
    }

    r.nmc_report = stage("verify", hash, [&] { return verify_tree(g, r.round.tree, cuts, 88); });

    {
        BigInt p = numerator(config.eta), q = denominator(config.eta);
        r.family_quality_ok = true;
        for (const auto& e : r.family.sets) {
            if (BigInt(e.boundary) * q >= (q + 4 * p) * BigInt(r.k)) r.family_quality_ok = false;
            if (e.special && BigInt(e.boundary) * q >= (q + 2 * p) * BigInt(r.k))
                r.family_quality_ok = false;
        }
    }

    r.composed_bound_ok = true;
    stage("covers", hash, [&] {
        for (size_t i = 0; i < cuts.size(); ++i) {
            int c = comp_of[i];
            std::vector<VertexSet> cover_cuts;
            if (!data[c]) {
                cover_cuts.push_back(cuts[i].shore);  // lone cut covers itself
            } else {
                auto ivs = extract_cover(g, cuts[i].shore, *data[c]->lam.trace,
                                         data[c]->table, data[c]->lam.family);
                cover_cuts = cuts_for_intervals(data[c]->table, ivs);
            }
            if (!verify_cover(g, cuts[i].shore, cover_cuts))
                throw IntegrityError("cover re-check failed for " + cuts[i].shore.to_string());
            int size = int(cover_cuts.size());
            ++r.cover_histogram[size];
            r.max_cover_size = std::max(r.max_cover_size, (long long)size);

            long long sum = 0;
            for (const auto& b : cover_cuts) sum += crossing_count(g, r.round.tree, b);
            if (r.nmc_report.counts[i] > sum) r.composed_bound_ok = false;
            if (r.nmc_report.counts[i] > 8 * r.max_family_crossing) r.composed_bound_ok = false;
            ++r.covers_checked;
        }
        return 0;
    });

    if (config.oracle && !r.family.sets.empty() && g.num_vertices() <= 12 &&
        g.support().size() <= 24) {
        SpanningTree best =
            stage("oracle", hash, [&] { return oracle_best_tree(g, r.family, r.bounds); });
        OracleReport orep;
        bool first = true;
        for (size_t f = 0; f < r.family.sets.size(); ++f) {
            long long mine = r.round.crossings[f] - r.bounds.b[f];
            long long theirs =
                crossing_count(g, best, r.family.sets[f].shore) - r.bounds.b[f];
            if (first || mine > orep.tree_violation) orep.tree_violation = mine;
            if (first || theirs > orep.oracle_violation) orep.oracle_violation = theirs;
            first = false;
        }
        r.oracle = orep;
    }

    if (config.baseline)
        r.baseline =
            stage("baseline", hash, [&] { return run_baseline(g, config, r.k, cuts); });

    r.pass = r.tree_within_bounds && r.nmc_report.pass && r.composed_bound_ok &&
             r.family_quality_ok && r.point_in_polytope &&
             r.covers_checked == r.near_min_cuts && r.max_cover_size <= 8;
    return r;
}

}  // namespace thintree
