// Command-line front end: instance generators, stage-by-stage inspection of
// the cut structure, and the full verification pipeline with reports.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "thintree/canonical.hpp"
#include "thintree/cover.hpp"
#include "thintree/crossing.hpp"
#include "thintree/cuts.hpp"
#include "thintree/diagram.hpp"
#include "thintree/errors.hpp"
#include "thintree/generators.hpp"
#include "thintree/make_lam.hpp"
#include "thintree/multigraph.hpp"
#include "thintree/pipeline.hpp"
#include "thintree/polygon.hpp"
#include "thintree/report.hpp"
#include "thintree/tree_checks.hpp"

using nlohmann::json;
using namespace thintree;

namespace {

struct Options {
    std::string kind = "fig2";
    int n = 8;
    int k = 0;  // fig1 inner multiplicity; 0 means 30*n
    int copies = 1;
    int cycles = 3;
    uint64_t seed = 1;
    std::string input;
    std::string output;
    std::string format = "text";
    std::string eta_text = "1/40";
    std::string tree_path;
    std::string cut_spec;
    std::string baseline;
    bool oracle = false;
    bool proper = false;
    int max_bruteforce_n = 20;
    int component = 0;
};

void add_instance_opts(CLI::App* sub, Options& o) {
    sub->add_option("--instance", o.kind, "fig1|fig2|cycle|random-kec|file")
        ->check(CLI::IsMember({"fig1", "fig2", "cycle", "random-kec", "file"}))
        ->capture_default_str();
    sub->add_option("--n", o.n, "vertex count for generators")->capture_default_str();
    sub->add_option("--k", o.k, "fig1 inner-cycle multiplicity (default 30*n)");
    sub->add_option("--copies", o.copies, "cycle edge multiplicity")->capture_default_str();
    sub->add_option("--cycles", o.cycles, "random-kec overlay count")->capture_default_str();
    sub->add_option("--input", o.input, "graph file (implies --instance file)");
    sub->add_option("--seed", o.seed, "generation and enumeration seed")
        ->capture_default_str();
}

void add_analysis_opts(CLI::App* sub, Options& o) {
    sub->add_option("--eta", o.eta_text, "near-minimum threshold, as p/q")
        ->capture_default_str();
    sub->add_option("--max-bruteforce-n", o.max_bruteforce_n,
                    "largest n enumerated exhaustively")
        ->capture_default_str();
    sub->add_flag("--proper", o.proper, "keep only cuts with two vertices on each side");
}

void add_output_opts(CLI::App* sub, Options& o, const std::vector<std::string>& formats) {
    sub->add_option("--output", o.output, "write here instead of stdout");
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
}

MultiGraph make_instance(Options& o) {
    if (!o.input.empty()) o.kind = "file";
    if (o.kind == "fig1") return gen_fig1(o.n, o.k > 0 ? o.k : 30 * o.n);
    if (o.kind == "fig2") return gen_fig2();
    if (o.kind == "cycle") return gen_cycle(o.n, o.copies);
    if (o.kind == "random-kec") return gen_random_kec(o.n, o.cycles, o.seed);
    if (o.kind == "file") {
        if (o.input.empty()) throw ParameterError("--instance file needs --input");
        return read_graph_file(o.input);
    }
    throw ParameterError("unknown instance kind: " + o.kind);
}

Rational parse_eta(const Options& o) {
    Rational eta = parse_rational(o.eta_text);
    if (eta <= 0 || eta > Rational(1, 5)) throw ParameterError("eta must lie in (0, 1/5]");
    return eta;
}

void write_out(const Options& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.output);
    if (!f) throw ParameterError("cannot write " + o.output);
    f << text;
}

// "3,7,12" -> VertexSet over n vertices.
VertexSet parse_cut(const std::string& spec, int n) {
    VertexSet s(n);
    std::stringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        size_t pos = 0;
        int v = -1;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
        }
        if (pos != item.size() || v < 0 || v >= n)
            throw ParameterError("bad vertex '" + item + "' in --cut");
        s.add(v);
    }
    if (s.empty()) throw ParameterError("--cut picked no vertices");
    return s;
}

std::vector<int> read_tree_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParameterError("cannot read " + path);
    std::vector<int> ids;
    std::string line;
    while (std::getline(f, line)) {
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        try {
            ids.push_back(std::stoi(line.substr(start)));
        } catch (const std::exception&) {
            throw ParameterError("bad edge id line in " + path + ": '" + line + "'");
        }
    }
    return ids;
}

// Shared preamble for the inspection subcommands.
struct Analysis {
    MultiGraph g;
    long long k = 0;
    Rational eta;
    std::vector<CutRecord> cuts;
    std::vector<CrossComponent> comps;
};

Analysis analyze(Options& o) {
    Analysis a{make_instance(o)};
    a.eta = parse_eta(o);
    a.k = min_cut_value(a.g);
    EnumerateOptions eopts;
    eopts.max_bruteforce_n = o.max_bruteforce_n;
    eopts.seed = o.seed;
    a.cuts = enumerate_near_min_cuts(a.g, a.eta, eopts);
    if (o.proper) {
        std::vector<CutRecord> kept;
        for (const auto& rec : a.cuts)
            if (is_proper_cut(rec.shore)) kept.push_back(rec);
        a.cuts = std::move(kept);
    }
    a.comps = components(a.cuts, a.g.num_vertices());
    return a;
}

struct BigComponent {
    int comp_index = 0;
    PolygonRep poly;
    CanonicalTable table;
    MakeLamResult lam;
};

PolygonRep expand_polygon(const Analysis& a, int comp_index) {
    PolygonRep poly = build_polygon(a.comps[comp_index]);
    verify_polygon(poly, a.comps[comp_index]);
    return poly;
}

BigComponent expand(const Analysis& a, int comp_index) {
    BigComponent b;
    b.comp_index = comp_index;
    b.poly = expand_polygon(a, comp_index);
    b.table = build_canonical_table(a.g, b.poly, a.k, a.eta);
    b.lam = make_lam(b.table);
    return b;
}

std::vector<int> big_component_indices(const Analysis& a) {
    std::vector<int> out;
    for (size_t c = 0; c < a.comps.size(); ++c)
        if (a.comps[c].cuts.size() >= 2) out.push_back(int(c));
    return out;
}

int pick_big_component(const Analysis& a, int nth) {
    auto big = big_component_indices(a);
    if (big.empty()) throw ParameterError("no crossing component with a polygon");
    if (nth < 0 || nth >= int(big.size()))
        throw ParameterError("--component out of range, have " +
                             std::to_string(big.size()) + " big component(s)");
    return big[nth];
}

int run_gen(Options& o) {
    if (o.kind == "file" || !o.input.empty())
        throw ParameterError("gen needs a generator kind, not a file");
    MultiGraph g = make_instance(o);
    write_out(o, graph_to_string(g));
    return 0;
}

int run_enumerate(Options& o) {
    Analysis a = analyze(o);
    if (o.format == "json") {
        json j;
        j["k"] = a.k;
        j["eta"] = rational_to_string(a.eta);
        json arr = json::array();
        for (const auto& rec : a.cuts)
            arr.push_back({{"shore", rec.shore.to_string()}, {"boundary", rec.boundary}});
        j["cuts"] = std::move(arr);
        write_out(o, j.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "# k=" << a.k << " eta=" << rational_to_string(a.eta) << " cuts="
            << a.cuts.size() << "\n";
        for (const auto& rec : a.cuts)
            out << rec.boundary << " " << rec.shore.to_string() << "\n";
        write_out(o, out.str());
    }
    return 0;
}

int run_atoms(Options& o) {
    Analysis a = analyze(o);
    auto blocks = atoms(a.cuts, a.g.num_vertices());
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& b : blocks) arr.push_back(b.to_string());
        write_out(o, json({{"atoms", arr}, {"count", blocks.size()}}).dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "# " << blocks.size() << " atoms\n";
        for (const auto& b : blocks) out << b.to_string() << "\n";
        write_out(o, out.str());
    }
    return 0;
}

int run_polygon(Options& o) {
    Analysis a = analyze(o);
    int ci = pick_big_component(a, o.component);
    PolygonRep poly = expand_polygon(a, ci);
    if (o.format == "dot" || o.format == "svg") {
        write_out(o, emit_polygon_diagram(poly, a.comps[ci],
                                          o.format == "dot" ? DiagramFormat::Dot
                                                            : DiagramFormat::Svg));
        return 0;
    }
    if (o.format == "json") {
        json j;
        j["component"] = ci;
        json outside = json::array();
        for (int atom : poly.outside) outside.push_back(poly.atom_sets[atom].to_string());
        json inside = json::array();
        for (int atom : poly.inside) inside.push_back(poly.atom_sets[atom].to_string());
        json cuts = json::array();
        for (size_t i = 0; i < poly.interval_of.size(); ++i)
            cuts.push_back({{"interval", poly.interval_of[i].to_string()},
                            {"shore", poly.oriented[i].to_string()},
                            {"boundary", a.comps[ci].cuts[i].boundary}});
        j["outside"] = std::move(outside);
        j["inside"] = std::move(inside);
        j["cuts"] = std::move(cuts);
        write_out(o, j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream out;
    out << "# component " << ci << ": " << poly.m() << " outside, "
        << poly.inside.size() << " inside\n";
    out << "outside:";
    for (int atom : poly.outside) out << " " << poly.atom_sets[atom].to_string();
    out << "\ninside:";
    for (int atom : poly.inside) out << " " << poly.atom_sets[atom].to_string();
    out << "\n";
    for (size_t i = 0; i < poly.interval_of.size(); ++i)
        out << poly.interval_of[i].to_string() << " "
            << poly.oriented[i].to_string() << " boundary "
            << a.comps[ci].cuts[i].boundary << "\n";
    write_out(o, out.str());
    return 0;
}

int run_makelam(Options& o) {
    Analysis a = analyze(o);
    auto big = big_component_indices(a);
    json jcomps = json::array();
    std::ostringstream out;
    for (int ci : big) {
        BigComponent b = expand(a, ci);
        if (o.format == "json") {
            json fam = json::array();
            for (const Interval& iv : b.lam.family) {
                const CanonicalEntry& cell = b.table.at(iv);
                fam.push_back({{"interval", iv.to_string()},
                               {"shore", cell.cut.to_string()},
                               {"boundary", cell.boundary},
                               {"special", cell.special},
                               {"diff_of_specials", cell.diff_of_specials}});
            }
            jcomps.push_back({{"component", ci},
                              {"outside", b.poly.m()},
                              {"heuristic", b.table.heuristic},
                              {"family", std::move(fam)}});
        } else {
            out << "# component " << ci << ": " << b.lam.family.size() << " family sets"
                << (b.table.heuristic ? " (closure heuristic)" : "") << "\n";
            for (const Interval& iv : b.lam.family) {
                const CanonicalEntry& cell = b.table.at(iv);
                out << iv.to_string() << " " << cell.cut.to_string() << " boundary "
                    << cell.boundary << (cell.special ? " special" : "")
                    << (cell.diff_of_specials ? " diff" : "") << "\n";
            }
        }
    }
    if (o.format == "json")
        write_out(o, json({{"components", jcomps}}).dump(2) + "\n");
    else
        write_out(o, out.str());
    return 0;
}

int run_cover(Options& o) {
    Analysis a = analyze(o);
    std::vector<int> comp_of(a.cuts.size(), -1);
    for (size_t c = 0; c < a.comps.size(); ++c)
        for (int idx : a.comps[c].members) comp_of[idx] = int(c);

    std::vector<std::unique_ptr<BigComponent>> expanded(a.comps.size());
    auto cover_of = [&](size_t cut_idx) {
        int c = comp_of[cut_idx];
        if (a.comps[c].cuts.size() < 2)
            return std::vector<VertexSet>{a.cuts[cut_idx].shore};
        if (!expanded[c]) expanded[c] = std::make_unique<BigComponent>(expand(a, c));
        auto ivs = extract_cover(a.g, a.cuts[cut_idx].shore, *expanded[c]->lam.trace,
                                 expanded[c]->table, expanded[c]->lam.family);
        return cuts_for_intervals(expanded[c]->table, ivs);
    };

    std::vector<size_t> targets;
    if (!o.cut_spec.empty()) {
        VertexSet want = canonical_shore(parse_cut(o.cut_spec, a.g.num_vertices()));
        for (size_t i = 0; i < a.cuts.size(); ++i)
            if (a.cuts[i].shore == want) targets.push_back(i);
        if (targets.empty())
            throw ParameterError("--cut " + want.to_string() +
                                 " is not an enumerated near-minimum cut");
    } else {
        for (size_t i = 0; i < a.cuts.size(); ++i) targets.push_back(i);
    }

    json arr = json::array();
    std::ostringstream out;
    for (size_t i : targets) {
        auto cover = cover_of(i);
        if (!verify_cover(a.g, a.cuts[i].shore, cover))
            throw IntegrityError("cover re-check failed for " + a.cuts[i].shore.to_string());
        if (o.format == "json") {
            json members = json::array();
            for (const auto& s : cover) members.push_back(s.to_string());
            arr.push_back({{"cut", a.cuts[i].shore.to_string()},
                           {"size", cover.size()},
                           {"members", std::move(members)}});
        } else {
            out << a.cuts[i].shore.to_string() << " size " << cover.size() << ":";
            for (const auto& s : cover) out << " " << s.to_string();
            out << "\n";
        }
    }
    if (o.format == "json")
        write_out(o, json({{"covers", arr}}).dump(2) + "\n");
    else
        write_out(o, out.str());
    return 0;
}

RunConfig to_config(Options& o) {
    RunConfig config;
    config.eta = parse_eta(o);
    config.seed = o.seed;
    config.max_bruteforce_n = o.max_bruteforce_n;
    config.oracle = o.oracle;
    if (!o.baseline.empty()) {
        if (o.kind != "fig1")
            throw ParameterError("--baseline naive is only wired up for --instance fig1");
        BaselineSpec spec;
        spec.priority_cuts = fig1_adversarial_cuts(o.n);
        spec.tree_edges = fig1_h2_tree(o.n, o.k > 0 ? o.k : 30 * o.n);
        config.baseline = std::move(spec);
    }
    return config;
}

int run_tree(Options& o) {
    MultiGraph g = make_instance(o);
    RunConfig config = to_config(o);
    PipelineResult r = run_pipeline(g, config);
    std::ostringstream out;
    out << "# spanning tree for instance " << r.instance_hash << "\n";
    out << "# k=" << r.k << " max-family-crossing=" << r.max_family_crossing
        << " max-near-min-crossing=" << r.nmc_report.max_crossing << "\n";
    for (int e : r.round.tree.edges) out << e << "\n";
    write_out(o, out.str());
    return 0;
}

int run_verify(Options& o) {
    MultiGraph g = make_instance(o);
    Rational eta = parse_eta(o);
    long long k = min_cut_value(g);
    EnumerateOptions eopts;
    eopts.max_bruteforce_n = o.max_bruteforce_n;
    eopts.seed = o.seed;
    auto cuts = enumerate_near_min_cuts(g, eta, eopts);

    SpanningTree tree{read_tree_file(o.tree_path)};
    check_spanning_tree(g, tree);
    CrossingReport rep = verify_tree(g, tree, cuts, 88);

    if (o.format == "json") {
        json j;
        j["k"] = k;
        j["near_min_cuts"] = cuts.size();
        j["max_crossing"] = rep.max_crossing;
        j["threshold"] = rep.threshold;
        j["pass"] = rep.pass;
        write_out(o, j.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "tree crosses " << cuts.size() << " near-min cuts at most "
            << rep.max_crossing << " times (threshold " << rep.threshold << "): "
            << (rep.pass ? "ok" : "FAIL") << "\n";
        write_out(o, out.str());
    }
    return rep.pass ? 0 : 1;
}

int run_pipeline_cmd(Options& o) {
    MultiGraph g = make_instance(o);
    RunConfig config = to_config(o);
    PipelineResult r = run_pipeline(g, config);
    write_out(o, o.format == "json" ? report_json(r) : report_text(r));
    return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"near-minimum cut structure and low-crossing spanning trees"};
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("gen", "generate an instance and print it");
    add_instance_opts(gen, o);
    gen->add_option("--output", o.output, "write here instead of stdout");

    auto* enumerate = app.add_subcommand("enumerate", "list near-minimum cuts");
    add_instance_opts(enumerate, o);
    add_analysis_opts(enumerate, o);
    add_output_opts(enumerate, o, {"json", "text"});

    auto* atoms_cmd = app.add_subcommand("atoms", "coarsest partition respecting all cuts");
    add_instance_opts(atoms_cmd, o);
    add_analysis_opts(atoms_cmd, o);
    add_output_opts(atoms_cmd, o, {"json", "text"});

    auto* polygon = app.add_subcommand("polygon", "polygon layout of one component");
    add_instance_opts(polygon, o);
    add_analysis_opts(polygon, o);
    add_output_opts(polygon, o, {"json", "text", "dot", "svg"});
    polygon->add_option("--component", o.component, "which big component (default 0)")
        ->capture_default_str();

    auto* makelam = app.add_subcommand("makelam", "laminar family of each component");
    add_instance_opts(makelam, o);
    add_analysis_opts(makelam, o);
    add_output_opts(makelam, o, {"json", "text"});

    auto* cover = app.add_subcommand("cover", "small covers for near-minimum cuts");
    add_instance_opts(cover, o);
    add_analysis_opts(cover, o);
    add_output_opts(cover, o, {"json", "text"});
    cover->add_option("--cut", o.cut_spec, "comma-separated shore, e.g. 1,2,3");

    auto* tree = app.add_subcommand("tree", "compute the low-crossing spanning tree");
    add_instance_opts(tree, o);
    add_analysis_opts(tree, o);
    tree->add_option("--output", o.output, "write here instead of stdout");

    auto* verify = app.add_subcommand("verify", "score a tree file against all cuts");
    add_instance_opts(verify, o);
    add_analysis_opts(verify, o);
    add_output_opts(verify, o, {"json", "text"});
    verify->add_option("--tree", o.tree_path, "edge ids, one per line")->required();

    auto* pipeline = app.add_subcommand("pipeline", "full run with report");
    add_instance_opts(pipeline, o);
    add_analysis_opts(pipeline, o);
    add_output_opts(pipeline, o, {"json", "text"});
    pipeline->add_flag("--oracle", o.oracle, "compare against the exhaustive best tree");
    pipeline->add_option("--baseline", o.baseline, "greedy-family negative control")
        ->check(CLI::IsMember({"naive"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(gen)) return run_gen(o);
        if (app.got_subcommand(enumerate)) return run_enumerate(o);
        if (app.got_subcommand(atoms_cmd)) return run_atoms(o);
        if (app.got_subcommand(polygon)) return run_polygon(o);
        if (app.got_subcommand(makelam)) return run_makelam(o);
        if (app.got_subcommand(cover)) return run_cover(o);
        if (app.got_subcommand(tree)) return run_tree(o);
        if (app.got_subcommand(verify)) return run_verify(o);
        if (app.got_subcommand(pipeline)) return run_pipeline_cmd(o);
    } catch (const ParameterError& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const VerificationError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const IntegrityError& e) {
        std::cerr << "internal integrity error: " << e.what() << "\n";
        return 3;
    }
    return 2;  // unreachable with require_subcommand(1)
}
