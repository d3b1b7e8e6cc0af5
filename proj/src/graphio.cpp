#include "textmine/graphio.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <unordered_map>

#include "textmine/csvio.hpp"
#include "textmine/errors.hpp"

namespace textmine {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path.string());
    return out;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += ch;
        }
    }
    return out;
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

std::string num(double x) { return csv::fmt_general(x, 12); }

// weight -> [lo, hi], top of the range when all weights are equal
double scale(double w, double wmin, double wmax, double lo, double hi) {
    if (wmax <= wmin) return hi;
    return lo + (hi - lo) * (w - wmin) / (wmax - wmin);
}

} // namespace

void write_graphml(const GraphSpec& g, const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"d0\" for=\"node\" attr.name=\"" << xml_escape(g.node_attr)
        << "\" attr.type=\"double\"/>\n"
        << "  <key id=\"d1\" for=\"edge\" attr.name=\"" << xml_escape(g.edge_attr)
        << "\" attr.type=\"double\"/>\n"
        << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
    for (const auto& n : g.nodes)
        out << "    <node id=\"" << xml_escape(n.id) << "\"><data key=\"d0\">"
            << num(n.weight) << "</data></node>\n";
    for (const auto& e : g.edges)
        out << "    <edge source=\"" << xml_escape(e.a) << "\" target=\""
            << xml_escape(e.b) << "\"><data key=\"d1\">" << num(e.weight)
            << "</data></edge>\n";
    out << "  </graph>\n</graphml>\n";
}

void write_dot(const GraphSpec& g, const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << "graph G {\n";
    for (const auto& n : g.nodes)
        out << "  \"" << dot_escape(n.id) << "\" [" << g.node_attr << "="
            << num(n.weight) << "];\n";
    for (const auto& e : g.edges)
        out << "  \"" << dot_escape(e.a) << "\" -- \"" << dot_escape(e.b) << "\" ["
            << g.edge_attr << "=" << num(e.weight) << "];\n";
    out << "}\n";
}

void write_svg(const GraphSpec& g, const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    const double cx = 400.0, cy = 400.0, ring = 320.0;
    const std::size_t n = g.nodes.size();

    double nw_min = 0.0, nw_max = 0.0, ew_min = 0.0, ew_max = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == 0) nw_min = nw_max = g.nodes[i].weight;
        nw_min = std::min(nw_min, g.nodes[i].weight);
        nw_max = std::max(nw_max, g.nodes[i].weight);
    }
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        if (i == 0) ew_min = ew_max = g.edges[i].weight;
        ew_min = std::min(ew_min, g.edges[i].weight);
        ew_max = std::max(ew_max, g.edges[i].weight);
    }

    std::vector<double> xs(n), ys(n);
    std::unordered_map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < n; ++i) {
        double angle = n == 1 ? 0.0
                              : 2.0 * 3.14159265358979323846 * static_cast<double>(i) /
                                        static_cast<double>(n) -
                                    1.5707963267948966;
        xs[i] = cx + (n == 1 ? 0.0 : ring * std::cos(angle));
        ys[i] = cy + (n == 1 ? 0.0 : ring * std::sin(angle));
        pos[g.nodes[i].id] = i;
    }

    char buf[256];
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
           "viewBox=\"0 0 800 800\">\n";
    for (const auto& e : g.edges) {
        auto ia = pos.find(e.a);
        auto ib = pos.find(e.b);
        if (ia == pos.end() || ib == pos.end())
            throw DomainError("edge endpoint '" + (ia == pos.end() ? e.a : e.b) +
                              "' is not a node");
        double w = scale(e.weight, ew_min, ew_max, 0.6, 4.0);
        double op = scale(e.weight, ew_min, ew_max, 0.25, 0.9);
        std::snprintf(buf, sizeof buf,
                      "  <line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
                      "stroke=\"#3566a5\" stroke-width=\"%.2f\" stroke-opacity=\"%.2f\"/>\n",
                      xs[ia->second], ys[ia->second], xs[ib->second], ys[ib->second], w, op);
        out << buf;
    }
    for (std::size_t i = 0; i < n; ++i) {
        double r = scale(g.nodes[i].weight, nw_min, nw_max, 6.0, 20.0);
        std::snprintf(buf, sizeof buf,
                      "  <circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.2f\" fill=\"#e8964a\" "
                      "stroke=\"#7a4a14\"/>\n",
                      xs[i], ys[i], r);
        out << buf;
        std::snprintf(buf, sizeof buf,
                      "  <text x=\"%.2f\" y=\"%.2f\" font-size=\"13\" "
                      "font-family=\"sans-serif\" text-anchor=\"middle\">",
                      xs[i], ys[i] - r - 4.0);
        out << buf << xml_escape(g.nodes[i].id) << "</text>\n";
    }
    out << "</svg>\n";
}

} // namespace textmine
