// Acceptance gate: every promised behavior gets one verdict line
//   criterion N: PASS/FAIL (detail)
// and the process exits with the number of failures.  Checks are exact
// (integer or rational); timing clauses use wall-clock seconds.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "thintree/canonical.hpp"
#include "thintree/cover.hpp"
#include "thintree/crossing.hpp"
#include "thintree/cuts.hpp"
#include "thintree/fractional.hpp"
#include "thintree/generators.hpp"
#include "thintree/kcycle.hpp"
#include "thintree/make_lam.hpp"
#include "thintree/pipeline.hpp"
#include "thintree/polygon.hpp"
#include "thintree/tree_checks.hpp"

using namespace thintree;
using namespace thintree::testing;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& why) {
        if (!cond && ok) {
            ok = false;
            detail = why;
        }
    }
    void note(const std::string& text) {
        if (ok) detail = text;
    }
};

struct Instance {
    std::string name;
    MultiGraph g;
};

// The instance corpus every sweeping criterion runs over.
std::vector<Instance> build_corpus() {
    std::vector<Instance> out;
    out.push_back({"fig2", gen_fig2()});
    for (int n = 3; n <= 12; ++n)
        out.push_back({"cycle-" + std::to_string(n), gen_cycle(n)});
    for (int n : {6, 8, 10})
        out.push_back({"fig1-" + std::to_string(n), gen_fig1(n, 30 * n)});
    for (uint64_t seed = 1; seed <= 50; ++seed) {
        int n = 8 + 2 * int(seed % 4);
        int c = 2 + int(seed % 3);
        out.push_back({"kec-" + std::to_string(n) + "x" + std::to_string(c) + "-s" +
                           std::to_string(seed),
                       gen_random_kec(n, c, seed)});
    }
    return out;
}

std::string format_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
}

// ---------------------------------------------------------------- criterion 1

Verdict criterion1() {
    Verdict v;
    auto t0 = Clock::now();

    auto g = gen_fig2();
    v.require(min_cut_value(g) == 7, "min cut is not 7");

    auto cuts = proper_only(enumerate_near_min_cuts(g, Rational(1, 5)));
    auto comps = components(cuts, 16);
    size_t big = 0, singles = 0, big_index = 0;
    for (size_t i = 0; i < comps.size(); ++i) {
        if (comps[i].cuts.size() >= 2) {
            ++big;
            big_index = i;
        } else {
            ++singles;
            v.require(comps[i].cuts[0].shore == VertexSet::of(16, {6, 7}),
                      "singleton component is " + comps[i].cuts[0].shore.to_string() +
                          ", not {v6,v7}");
        }
    }
    v.require(big == 1 && singles == 1,
              "expected one big + one singleton component, got " + std::to_string(big) + "+" +
                  std::to_string(singles));

    auto blocks = atoms(cuts, 16);
    bool merged = false;
    for (const auto& b : blocks)
        if (b == VertexSet::of(16, {6, 7})) merged = true;
    v.require(blocks.size() == 15 && merged,
              "expected 15 atoms with {v6,v7} merged, got " + std::to_string(blocks.size()));

    auto poly = build_polygon(comps[big_index]);
    verify_polygon(poly, comps[big_index]);
    std::string inside_names;
    for (int a : poly.inside) inside_names += poly.atom_sets[a].to_string();
    bool caption_layout = poly.m() == 13 && poly.inside.size() == 2 &&
                          inside_names == "{v14}{v15}";
    v.require(caption_layout,
              "polygon has " + std::to_string(poly.m()) + " outside / " +
                  std::to_string(poly.inside.size()) +
                  " inside; expected 13 outside with {v14},{v15} inside, but the maximal "
                  "circular order proves all 15 atoms fit outside");

    double dt = seconds_since(t0);
    v.require(dt < 5.0, "took " + format_seconds(dt));
    v.note("min cut 7, components 16+1, atoms 15 with {v6,v7}, polygon 13+2, " +
           format_seconds(dt));
    return v;
}

// ------------------------------------------------------- criteria 2, 3 and 4

struct CorpusRun {
    Instance inst;
    PipelineResult r;
};

std::vector<CorpusRun> g_runs;  // sweep results shared by criteria 2-6
double g_sweep_seconds = 0;

void run_corpus_sweep() {
    auto t0 = Clock::now();
    for (auto& inst : build_corpus()) {
        RunConfig config;  // eta 1/40, seed 1
        g_runs.push_back({inst, run_pipeline(inst.g, config)});
    }
    g_sweep_seconds = seconds_since(t0);
}

Verdict criterion2() {
    Verdict v;
    long long worst_cover = 0;
    for (const auto& run : g_runs) {
        const auto& r = run.r;
        v.require(r.pass, run.inst.name + ": pipeline reported FAIL");
        v.require(r.covers_checked == r.near_min_cuts,
                  run.inst.name + ": " + std::to_string(r.covers_checked) + " covers for " +
                      std::to_string(r.near_min_cuts) + " cuts");
        v.require(r.max_cover_size <= 8,
                  run.inst.name + ": cover of size " + std::to_string(r.max_cover_size));
        worst_cover = std::max(worst_cover, r.max_cover_size);
    }
    v.require(g_sweep_seconds < 300.0, "sweep took " + format_seconds(g_sweep_seconds));
    v.note(std::to_string(g_runs.size()) + " instances, every near-min cut covered by <= 8 " +
           "family cuts (max " + std::to_string(worst_cover) + "), sweep " +
           format_seconds(g_sweep_seconds));
    return v;
}

Verdict criterion3() {
    Verdict v;
    size_t sets = 0, specials = 0;
    for (const auto& run : g_runs) {
        const auto& fam = run.r.family;
        long long k = run.r.k;
        for (const auto& e : fam.sets) {
            ++sets;
            v.require(boundary_size(run.inst.g, e.shore) == e.boundary,
                      run.inst.name + ": stored boundary is stale");
            v.require(10 * e.boundary < 11 * k,
                      run.inst.name + ": family cut " + e.shore.to_string() + " has boundary " +
                          std::to_string(e.boundary) + " >= 1.1k");
            if (e.special) {
                ++specials;
                v.require(20 * e.boundary < 21 * k,
                          run.inst.name + ": special cut " + e.shore.to_string() +
                              " has boundary " + std::to_string(e.boundary) + " >= 1.05k");
            }
        }
        for (size_t i = 0; i < fam.sets.size(); ++i)
            for (size_t j = i + 1; j < fam.sets.size(); ++j)
                v.require(!crossing(fam.sets[i].shore, fam.sets[j].shore),
                          run.inst.name + ": family members cross");
    }
    v.note(std::to_string(sets) + " family sets (" + std::to_string(specials) +
           " special) all under the exact 1.1k / 1.05k ceilings, pairwise cross-free");
    return v;
}

Verdict criterion4() {
    Verdict v;
    long long observed = 0;
    for (const auto& run : g_runs) {
        const auto& r = run.r;
        v.require(r.nmc_report.max_crossing <= 88,
                  run.inst.name + ": tree crosses a near-min cut " +
                      std::to_string(r.nmc_report.max_crossing) + " times");
        for (long long c : r.nmc_report.counts)
            v.require(c <= 8 * r.max_family_crossing,
                      run.inst.name + ": crossing " + std::to_string(c) +
                          " exceeds 8 * family max " + std::to_string(r.max_family_crossing));
        v.require(r.composed_bound_ok, run.inst.name + ": composed bound flag is off");
        observed = std::max(observed, r.nmc_report.max_crossing);
    }
    v.note("max near-min crossing observed " + std::to_string(observed) +
           " (ceiling 88); composed bound holds identically");
    return v;
}

// ---------------------------------------------------------------- criterion 5

Verdict criterion5() {
    Verdict v;
    auto g = gen_fig1(8, 240);
    RunConfig config;
    config.baseline = BaselineSpec{fig1_adversarial_cuts(8), fig1_h2_tree(8, 240)};
    auto r = run_pipeline(g, config);

    v.require(r.baseline.has_value(), "baseline report missing");
    if (r.baseline) {
        v.require(r.baseline->tree_family_bounds_ok,
                  "greedy family rejects the zigzag tree (it should admit it)");
        v.require(r.baseline->tree_max_nmc_crossing >= 8 - 3,
                  "zigzag tree crosses only " +
                      std::to_string(r.baseline->tree_max_nmc_crossing) + " < n-3");
    }
    v.require(r.nmc_report.max_crossing <= 88,
              "pipeline tree crosses " + std::to_string(r.nmc_report.max_crossing));
    v.require(r.pass, "pipeline reported FAIL");
    if (r.baseline)
        v.note("greedy family admits a tree crossing a near-min cut " +
               std::to_string(r.baseline->tree_max_nmc_crossing) +
               " times; pipeline tree stays at " + std::to_string(r.nmc_report.max_crossing));
    return v;
}

// ---------------------------------------------------------------- criterion 6

Verdict criterion6() {
    Verdict v;
    for (long long k = 7; k <= 200; ++k) {
        v.require(scaled_ceiling_bound_holds(k),
                  "22*ceil(2d/k) <= 66d/k fails at k=" + std::to_string(k));
        v.require(crossing_budget_holds(k),
                  "2*(3/k)*d + 3 <= 11 fails at k=" + std::to_string(k));
    }

    size_t checked = 0;
    for (const auto& run : g_runs) {
        auto x = fractional_point(run.inst.g, run.r.k, Rational(3, run.r.k));
        for (const auto& e : run.r.family.sets) {
            if (e.shore.count() > 12) continue;
            ++checked;
            v.require(check_partition_inequalities(x, e.shore, run.inst.g),
                      run.inst.name + ": partition inequality fails on " + e.shore.to_string());
        }
    }
    v.note("ceiling/budget arithmetic exact for k in [7,200]; partition inequalities hold on " +
           std::to_string(checked) + " family sets at x=3/k");
    return v;
}

// ------------------------------------------------- criteria 7 and 8 (oracles)

struct CompArtifacts {
    const Instance* inst;
    CrossComponent comp;
    PolygonRep poly;
    CanonicalTable table;
};

// Rebuilt component structure for the whole corpus at eta = 1/40, plus the
// 16-vertex fixture at 1/5 (its components are singletons at 1/40).
std::vector<CompArtifacts> g_artifacts;
Instance g_fig2_loose{"fig2@1/5", gen_fig2()};

void build_artifacts() {
    for (const auto& run : g_runs) {
        auto cuts = enumerate_near_min_cuts(run.inst.g, Rational(1, 40));
        for (auto& comp : components(cuts, run.inst.g.num_vertices())) {
            if (comp.cuts.size() < 2) continue;
            CompArtifacts a{&run.inst, comp, build_polygon(comp), {}};
            a.table = build_canonical_table(run.inst.g, a.poly, run.r.k, Rational(1, 40));
            g_artifacts.push_back(std::move(a));
        }
    }
    auto cuts = proper_only(enumerate_near_min_cuts(g_fig2_loose.g, Rational(1, 5)));
    for (auto& comp : components(cuts, 16)) {
        if (comp.cuts.size() < 2) continue;
        CompArtifacts a{&g_fig2_loose, comp, build_polygon(comp), {}};
        a.table = build_canonical_table(g_fig2_loose.g, a.poly, 7, Rational(1, 5));
        g_artifacts.push_back(std::move(a));
    }
}

VertexSet witness_combination(const CanonicalTable& t, const SpecialWitness& w) {
    const auto& p = t.at(w.p).cut;
    const auto& q = t.at(w.q).cut;
    switch (w.kind) {
        case SpecialKind::Intersection: return p & q;
        case SpecialKind::Union: return p | q;
        case SpecialKind::Difference: return p - q;
        default: return p;
    }
}

Verdict criterion7() {
    Verdict v;

    // (a) enumeration vs exhaustive shores
    size_t enum_checked = 0;
    for (const auto& run : g_runs) {
        if (run.inst.g.num_vertices() > 16) continue;
        auto got = enumerate_near_min_cuts(run.inst.g, Rational(1, 40));
        auto want = naive_near_min_cuts(run.inst.g, Rational(1, 40));
        v.require(got.size() == want.size(),
                  run.inst.name + ": enumeration found " + std::to_string(got.size()) +
                      " cuts, brute force " + std::to_string(want.size()));
        for (size_t i = 0; i < got.size() && i < want.size(); ++i) {
            v.require(got[i].shore == want[i].shore, run.inst.name + ": cut lists differ");
            v.require(got[i].boundary == want[i].boundary,
                      run.inst.name + ": boundary mismatch");
        }
        ++enum_checked;
    }

    // (b) every special witness equals its vertex-level combination
    size_t witnesses = 0;
    for (const auto& a : g_artifacts) {
        for (int l = 1; l < a.table.m; ++l)
            for (int r = l + 1; r <= a.table.m; ++r) {
                const auto& e = a.table.at({l, r});
                if (!e.special) continue;
                if (e.witness.kind != SpecialKind::NearMin) {
                    ++witnesses;
                    v.require(a.table.near_min(e.witness.p) && a.table.near_min(e.witness.q),
                              a.inst->name + ": witness cites non-near-min intervals");
                    v.require(e.cut == witness_combination(a.table, e.witness),
                              a.inst->name + ": witness combination differs from set algebra");
                }
                if (e.diff_of_specials) {
                    ++witnesses;
                    v.require(e.cut == a.table.at(e.diff_p).cut - a.table.at(e.diff_q).cut,
                              a.inst->name + ": difference witness differs from set algebra");
                }
            }
        // resolving a crossing keeps the set algebra honest as well (the
        // combinations stay within 2*eta, so only tight tables qualify)
        if (a.table.eta > Rational(1, 20)) continue;
        auto specials = a.table.special_intervals();
        auto nearmins = a.table.near_min_intervals();
        for (const auto& s : specials)
            for (const auto& b : nearmins) {
                if (!intervals_cross(s, b)) continue;
                auto res = special_cross_resolve(a.table, s, b);
                const auto& A = a.table.at(s).cut;
                const auto& B = a.table.at(b).cut;
                const auto& inner = a.table.at(res.inner).cut;
                const auto& outer = a.table.at(res.outer).cut;
                ++witnesses;
                v.require(a.table.special(res.inner) && a.table.special(res.outer),
                          a.inst->name + ": resolved intervals are not special");
                v.require(inner == (A & B) || inner == (A - B),
                          a.inst->name + ": inner resolution is not A&B or A-B");
                v.require(outer == (A | B) || outer == (B - A),
                          a.inst->name + ": outer resolution is not A|B or B-A");
            }
    }

    // (c) rounded tree within +2 of the exhaustive best on small instances
    size_t oracle_checked = 0;
    for (const auto& run : g_runs) {
        if (run.inst.g.num_vertices() > 12 || run.inst.g.support().size() > 24) continue;
        RunConfig config;
        config.oracle = true;
        auto r = run_pipeline(run.inst.g, config);
        ++oracle_checked;
        v.require(r.oracle.has_value(), run.inst.name + ": oracle report missing");
        if (r.oracle)
            v.require(r.oracle->tree_violation <= r.oracle->oracle_violation + 2,
                      run.inst.name + ": rounded tree violation " +
                          std::to_string(r.oracle->tree_violation) + " vs best " +
                          std::to_string(r.oracle->oracle_violation));
    }

    // (d) extracted covers vs the exhaustive minimum on small layouts
    size_t covers_checked = 0;
    long long max_gap = 0;
    for (const auto& a : g_artifacts) {
        if (a.poly.m() > 10 || a.table.eta != Rational(1, 40)) continue;
        auto lam = make_lam(a.table);
        auto family_cuts = cuts_for_intervals(a.table, lam.family);
        for (size_t i = 0; i < a.comp.cuts.size(); ++i) {
            auto shore = a.poly.oriented[i];
            auto cover =
                extract_cover(a.inst->g, shore, *lam.trace, a.table, lam.family);
            int best = min_cover_size(a.inst->g, shore, family_cuts, 8);
            ++covers_checked;
            v.require(cover.size() <= 8, a.inst->name + ": cover larger than 8");
            v.require(best >= 1, a.inst->name + ": no exhaustive cover though one was extracted");
            v.require(best <= int(cover.size()),
                      a.inst->name + ": exhaustive minimum exceeds the extracted cover");
            max_gap = std::max(max_gap, (long long)cover.size() - best);
        }
    }

    v.note("enumeration matches brute force on " + std::to_string(enum_checked) +
           " instances; " + std::to_string(witnesses) + " witnesses equal their set algebra; " +
           std::to_string(oracle_checked) + " instances within +2 of the best tree; " +
           std::to_string(covers_checked) + " covers at most " + std::to_string(max_gap) +
           " above the exhaustive minimum");
    return v;
}

Verdict criterion8() {
    Verdict v;

    // (a) crossing near-min cuts combine into 2-eta-near-min cuts
    size_t pairs = 0;
    for (const auto& run : g_runs) {
        auto cuts = enumerate_near_min_cuts(run.inst.g, Rational(1, 40));
        long long k = run.r.k;
        for (size_t i = 0; i < cuts.size(); ++i)
            for (size_t j = i + 1; j < cuts.size(); ++j) {
                if (!crossing(cuts[i].shore, cuts[j].shore)) continue;
                ++pairs;
                const auto& A = cuts[i].shore;
                const auto& B = cuts[j].shore;
                for (const auto& s : {A & B, A | B, A - B, B - A}) {
                    long long b = boundary_size(run.inst.g, s);
                    v.require(20 * b < 21 * k,  // strict (1 + 2/40) k
                              run.inst.name + ": combination of crossing cuts has boundary " +
                                  std::to_string(b) + " >= (1+2eta)k");
                }
            }
    }

    // (b) interval injectivity and crossing equivalence on every layout
    for (const auto& a : g_artifacts) {
        verify_polygon(a.poly, a.comp);
        for (size_t i = 0; i < a.comp.cuts.size(); ++i)
            for (size_t j = i + 1; j < a.comp.cuts.size(); ++j) {
                v.require(!(a.poly.interval_of[i] == a.poly.interval_of[j]),
                          a.inst->name + ": two cuts share an interval");
                v.require(crossing(a.comp.cuts[i].shore, a.comp.cuts[j].shore) ==
                              intervals_cross(a.poly.interval_of[i], a.poly.interval_of[j]),
                          a.inst->name + ": interval crossing disagrees with cut crossing");
            }
    }

    // (c) no short cut cycle exists anywhere in the tight corpus
    size_t comps = 0, inconclusive = 0;
    for (const auto& run : g_runs) {
        auto cuts = enumerate_near_min_cuts(run.inst.g, Rational(1, 40));
        for (const auto& comp : components(cuts, run.inst.g.num_vertices())) {
            ++comps;
            auto r = find_short_k_cycle(comp, 12);
            v.require(r.status != KCycleStatus::Found,
                      run.inst.name + ": found a cut cycle of length " +
                          std::to_string(r.cycle.size()) + " despite eta = 1/40");
            if (r.status == KCycleStatus::Inconclusive) ++inconclusive;
        }
    }

    v.note(std::to_string(pairs) + " crossing pairs uncross exactly; " +
           std::to_string(g_artifacts.size()) + " layouts injective and crossing-faithful; " +
           std::to_string(comps) + " components free of cycles up to length 12" +
           (inconclusive ? " (" + std::to_string(inconclusive) + " budget-capped)" : ""));
    return v;
}

}  // namespace

int main() {
    int failures = 0;
    auto report = [&](int number, Verdict verdict) {
        if (!verdict.ok) ++failures;
        std::printf("criterion %d: %s (%s)\n", number, verdict.ok ? "PASS" : "FAIL",
                    verdict.detail.c_str());
        std::fflush(stdout);
    };
    auto guarded = [&](int number, const std::function<Verdict()>& f) {
        Verdict verdict;
        try {
            verdict = f();
        } catch (const std::exception& e) {
            verdict.ok = false;
            verdict.detail = std::string("exception: ") + e.what();
        }
        report(number, verdict);
    };

    guarded(1, criterion1);
    try {
        run_corpus_sweep();
    } catch (const std::exception& e) {
        std::printf("corpus sweep aborted: %s\n", e.what());
        return 99;
    }
    guarded(2, criterion2);
    guarded(3, criterion3);
    guarded(4, criterion4);
    guarded(5, criterion5);
    guarded(6, criterion6);
    try {
        build_artifacts();
    } catch (const std::exception& e) {
        std::printf("component rebuild aborted: %s\n", e.what());
        return 99;
    }
    guarded(7, criterion7);
    guarded(8, criterion8);

    return failures;
}
