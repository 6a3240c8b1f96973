#include "thintree/report.hpp"

#include <json.hpp>

#include <sstream>

namespace thintree {

namespace {

using nlohmann::json;  // the default json type keeps object keys sorted

json family_json(const PipelineResult& r) {
    json sets = json::array();
    for (size_t f = 0; f < r.family.sets.size(); ++f) {
        const FamilyEntry& e = r.family.sets[f];
        json s;
        s["shore"] = e.shore.to_string();
        s["boundary"] = e.boundary;
        s["b"] = r.bounds.b[f];
        s["crossings"] = r.round.crossings[f];
        s["dropped"] = bool(r.round.dropped[f]);
        s["special"] = e.special;
        s["diff_of_specials"] = e.diff_of_specials;
        s["component"] = e.component;
        if (e.interval) s["interval"] = e.interval->to_string();
        sets.push_back(std::move(s));
    }
    json fam;
    fam["size"] = r.family.sets.size();
    fam["heuristic"] = r.heuristic;
    fam["sets"] = std::move(sets);
    return fam;
}

}  // namespace

std::string report_json(const PipelineResult& r) {
    json j;
    j["instance"]["hash"] = r.instance_hash;
    j["instance"]["vertices"] = r.n;
    j["instance"]["edges"] = r.edges;
    j["instance"]["min_cut"] = r.k;
    j["instance"]["eta"] = rational_to_string(r.eta);

    j["near_min_cuts"] = r.near_min_cuts;

    json comps = json::array();
    for (const auto& c : r.component_reports) {
        json cj;
        cj["cuts"] = c.cuts;
        cj["outside"] = c.outside;
        cj["inside"] = c.inside;
        cj["family_intervals"] = c.family_intervals;
        cj["heuristic"] = c.heuristic;
        comps.push_back(std::move(cj));
    }
    j["components"]["big"] = r.big_components;
    j["components"]["singleton"] = r.singleton_components;
    j["components"]["list"] = std::move(comps);

    j["family"] = family_json(r);

    j["tree"]["edges"] = r.round.tree.edges;
    j["tree"]["lp_solves"] = r.round.lp_solves;
    j["tree"]["within_bounds"] = r.tree_within_bounds;
    j["tree"]["max_family_crossing"] = r.max_family_crossing;

    j["near_min_verification"]["max_crossing"] = r.nmc_report.max_crossing;
    j["near_min_verification"]["threshold"] = r.nmc_report.threshold;
    j["near_min_verification"]["pass"] = r.nmc_report.pass;

    json hist;
    for (const auto& [size, count] : r.cover_histogram) hist[std::to_string(size)] = count;
    j["covers"]["checked"] = r.covers_checked;
    j["covers"]["max_size"] = r.max_cover_size;
    j["covers"]["histogram"] = std::move(hist);
    j["covers"]["composed_bound_ok"] = r.composed_bound_ok;

    j["point_in_polytope"] = r.point_in_polytope;
    j["family_quality_ok"] = r.family_quality_ok;

    if (r.oracle) {
        j["oracle"]["tree_violation"] = r.oracle->tree_violation;
        j["oracle"]["oracle_violation"] = r.oracle->oracle_violation;
    }
    if (r.baseline) {
        j["baseline"]["family_size"] = r.baseline->family_size;
        j["baseline"]["tree_max_family_crossing"] = r.baseline->tree_max_family_crossing;
        j["baseline"]["tree_family_bounds_ok"] = r.baseline->tree_family_bounds_ok;
        j["baseline"]["tree_max_nmc_crossing"] = r.baseline->tree_max_nmc_crossing;
    }

    j["pass"] = r.pass;
    return j.dump(2) + "\n";
}

std::string report_text(const PipelineResult& r) {
    std::ostringstream out;
    auto yn = [](bool b) { return b ? "yes" : "no"; };

    out << "instance " << r.instance_hash << "  n=" << r.n << " m=" << r.edges
        << "  k=" << r.k << "  eta=" << rational_to_string(r.eta) << "\n";
    out << "near-min cuts: " << r.near_min_cuts << "  components: " << r.big_components
        << " big + " << r.singleton_components << " singleton\n";
    out << "family: " << r.family.sets.size() << " sets"
        << (r.heuristic ? " (closure heuristic used)" : "") << "\n";
    out << "tree: " << r.round.tree.edges.size() << " edges, " << r.round.lp_solves
        << " LP solves; family crossings max " << r.max_family_crossing
        << " (within bounds: " << yn(r.tree_within_bounds) << ")\n";
    out << "near-min crossings: max " << r.nmc_report.max_crossing << " of threshold "
        << r.nmc_report.threshold << " -> " << (r.nmc_report.pass ? "ok" : "FAIL") << "\n";
    out << "covers: " << r.covers_checked << " checked, max size " << r.max_cover_size
        << ", histogram";
    for (const auto& [size, count] : r.cover_histogram) out << " " << size << ":" << count;
    out << "\n";
    out << "checks: point " << yn(r.point_in_polytope) << ", composed bound "
        << yn(r.composed_bound_ok) << ", family quality " << yn(r.family_quality_ok) << "\n";
    if (r.oracle)
        out << "oracle: tree violation " << r.oracle->tree_violation << " vs best "
            << r.oracle->oracle_violation << "\n";
    if (r.baseline)
        out << "baseline: family " << r.baseline->family_size
            << " sets, tree max family crossing " << r.baseline->tree_max_family_crossing
            << " (bounds ok: " << yn(r.baseline->tree_family_bounds_ok)
            << "), max near-min crossing " << r.baseline->tree_max_nmc_crossing << "\n";
    out << (r.pass ? "PASS" : "FAIL") << "\n";
    return out.str();
}

}  // namespace thintree
