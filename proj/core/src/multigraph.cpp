#include "thintree/multigraph.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "thintree/errors.hpp"

namespace thintree {

MultiGraph::MultiGraph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)), incident_(n) {
    if (n < 1) throw ParameterError("graph needs at least one vertex");
    for (size_t id = 0; id < edges_.size(); ++id) {
        auto [u, v] = edges_[id];
        if (u == v) throw ParameterError("self-loop at edge " + std::to_string(id));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParameterError("endpoint out of range at edge " + std::to_string(id));
        if (u > v) std::swap(edges_[id].first, edges_[id].second);
        incident_[edges_[id].first].push_back(int(id));
        incident_[edges_[id].second].push_back(int(id));
    }
}

bool MultiGraph::connected() const {
    if (n_ == 0) return false;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int id : incident_[v]) {
            auto [a, b] = edges_[id];
            int w = a == v ? b : a;
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n_;
}

int MultiGraph::multiplicity(int u, int v) const {
    if (u > v) std::swap(u, v);
    int c = 0;
    for (int id : incident_[u]) {
        auto [a, b] = edges_[id];
        if (a == u && b == v) ++c;
    }
    return c;
}

std::vector<MultiGraph::SupportEdge> MultiGraph::support() const {
    std::map<std::pair<int, int>, std::vector<int>> groups;
    for (int id = 0; id < num_edges(); ++id) groups[edges_[id]].push_back(id);
    std::vector<SupportEdge> out;
    out.reserve(groups.size());
    for (auto& [uv, copies] : groups) out.push_back({uv.first, uv.second, std::move(copies)});
    return out;
}

MultiGraph read_graph(std::istream& in) {
    std::string line;
    auto next_content_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            if (!line.empty() && line[0] == '#') continue;
            // Skip blank lines too; they carry no edge id.
            bool blank = true;
            for (char c : line)
                if (!isspace(static_cast<unsigned char>(c))) blank = false;
            if (blank) continue;
            out = line;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_content_line(header)) throw ParameterError("empty graph input");
    std::istringstream hs(header);
    long long n, m;
    if (!(hs >> n >> m) || n < 1 || m < 0)
        throw ParameterError("bad graph header: '" + header + "'");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(size_t(m));
    for (long long i = 0; i < m; ++i) {
        std::string entry;
        if (!next_content_line(entry))
            throw ParameterError("expected " + std::to_string(m) + " edges, got " +
                                 std::to_string(i));
        std::istringstream es(entry);
        long long u, v;
        if (!(es >> u >> v)) throw ParameterError("bad edge line: '" + entry + "'");
        std::string extra;
        if (es >> extra) throw ParameterError("trailing tokens on edge line: '" + entry + "'");
        if (!(0 <= u && u < v && v < n))
            throw ParameterError("edge line violates 0 <= u < v < n: '" + entry + "'");
        edges.emplace_back(int(u), int(v));
    }
    return MultiGraph(int(n), std::move(edges));
}

MultiGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open graph file: " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const MultiGraph& g) {
    out << g.num_vertices() << " " << g.num_edges() << "\n";
    for (int id = 0; id < g.num_edges(); ++id) {
        auto [u, v] = g.edge(id);
        out << u << " " << v << "\n";
    }
}

std::string graph_to_string(const MultiGraph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

}  // namespace thintree
