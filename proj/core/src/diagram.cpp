#include "thintree/diagram.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace thintree {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fixed2(double v) {
    if (std::fabs(v) < 0.005) v = 0;  // avoid "-0.00"
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// Screen coordinates (y grows downward) of fractional position p on the m
// circle: root at the top, positions clockwise.  Chord endpoints sit at the
// half positions p - 1/2, which is also where position m wraps to.
std::pair<double, double> at_position(double p, int m, double cx, double cy, double r) {
    double ang = kPi / 2 - 2 * kPi * p / m;
    return {cx + r * std::cos(ang), cy - r * std::sin(ang)};
}

std::string atom_label(const PolygonRep& poly, int atom) {
    return "a" + std::to_string(atom) + " " + poly.atom_sets[atom].to_string();
}

std::string membership_row(const PolygonRep& poly, int atom) {
    std::string row;
    int probe = poly.atom_sets[atom].min_element();
    for (const auto& shore : poly.oriented) row += shore.contains(probe) ? '1' : '0';
    return row;
}

std::string emit_dot(const PolygonRep& poly) {
    const int m = poly.m();
    std::ostringstream out;
    out << "graph polygon {\n";
    out << "  layout=neato;\n  overlap=true;\n  splines=line;\n";
    out << "  node [shape=circle, fontsize=10];\n";
    for (int p = 0; p < m; ++p) {
        auto [x, y] = at_position(p, m, 0, 0, 4);
        out << "  o" << p << " [label=\"" << atom_label(poly, poly.outside[p]) << "\", pos=\""
            << fixed2(x) << "," << fixed2(-y) << "!\"";  // dot's y grows upward
        if (p == 0) out << ", style=bold";
        out << "];\n";
    }
    for (int p = 0; p < m; ++p) {
        auto [x, y] = at_position(p - 0.5, m, 0, 0, 4);
        out << "  g" << p << " [shape=point, width=0.03, pos=\"" << fixed2(x) << ","
            << fixed2(-y) << "!\"];\n";
    }
    out << "  edge [color=gray70];\n";
    for (int p = 0; p < m; ++p) out << "  o" << p << " -- o" << (p + 1) % m << ";\n";
    out << "  edge [color=black, fontsize=9];\n";
    for (const Interval& iv : poly.interval_of)
        out << "  g" << iv.l << " -- g" << iv.r % m << " [label=\"" << iv.to_string()
            << "\"];\n";
    if (!poly.inside.empty()) {
        out << "  legend [shape=box, fontsize=9, pos=\"0.00,-6.00!\", label=\"inside atoms\\l";
        for (int atom : poly.inside)
            out << atom_label(poly, atom) << "  " << membership_row(poly, atom) << "\\l";
        out << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string emit_svg(const PolygonRep& poly) {
    const int m = poly.m();
    const double cx = 400, cy = 400, r = 300;
    const int height = poly.inside.empty() ? 800 : 824 + 16 * int(poly.inside.size());
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"" << height
        << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (int p = 0; p < m; ++p) {
        auto [x1, y1] = at_position(p, m, cx, cy, r);
        auto [x2, y2] = at_position(p + 1, m, cx, cy, r);
        out << "<line x1=\"" << fixed2(x1) << "\" y1=\"" << fixed2(y1) << "\" x2=\""
            << fixed2(x2) << "\" y2=\"" << fixed2(y2) << "\" stroke=\"#bbbbbb\"/>\n";
    }
    for (const Interval& iv : poly.interval_of) {
        auto [x1, y1] = at_position(iv.l - 0.5, m, cx, cy, r);
        auto [x2, y2] = at_position(iv.r - 0.5, m, cx, cy, r);
        out << "<line x1=\"" << fixed2(x1) << "\" y1=\"" << fixed2(y1) << "\" x2=\""
            << fixed2(x2) << "\" y2=\"" << fixed2(y2)
            << "\" stroke=\"black\" stroke-width=\"1.2\"/>\n";
        out << "<text x=\"" << fixed2((x1 + x2) / 2) << "\" y=\"" << fixed2((y1 + y2) / 2)
            << "\" font-size=\"11\" fill=\"#444444\">" << iv.to_string() << "</text>\n";
    }
    for (int p = 0; p < m; ++p) {
        auto [x, y] = at_position(p, m, cx, cy, r);
        out << "<circle cx=\"" << fixed2(x) << "\" cy=\"" << fixed2(y) << "\" r=\"14\" fill=\""
            << (p == 0 ? "#ffe9a8" : "#e8eefc") << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << fixed2(x - 5) << "\" y=\"" << fixed2(y + 4)
            << "\" font-size=\"11\">" << p << "</text>\n";
        auto [lx, ly] = at_position(p, m, cx, cy, r + 36);
        out << "<text x=\"" << fixed2(lx - 20) << "\" y=\"" << fixed2(ly + 4)
            << "\" font-size=\"10\" fill=\"#333333\">" << atom_label(poly, poly.outside[p])
            << "</text>\n";
    }
    if (!poly.inside.empty()) {
        double ty = cy + r + 60;
        out << "<text x=\"30\" y=\"" << fixed2(ty)
            << "\" font-size=\"12\">inside atoms (membership per cut, listed cut order):"
            << "</text>\n";
        for (size_t i = 0; i < poly.inside.size(); ++i)
            out << "<text x=\"30\" y=\"" << fixed2(ty + 16 * double(i + 1))
                << "\" font-size=\"11\" font-family=\"monospace\">"
                << atom_label(poly, poly.inside[i]) << "  "
                << membership_row(poly, poly.inside[i]) << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace

std::string emit_polygon_diagram(const PolygonRep& poly, const CrossComponent& comp,
                                 DiagramFormat format) {
    verify_polygon(poly, comp);  // refuse stale or hand-built representations
    return format == DiagramFormat::Dot ? emit_dot(poly) : emit_svg(poly);
}

}  // namespace thintree
