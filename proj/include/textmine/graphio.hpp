#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace textmine {

// Undirected weighted graph ready for export. node_attr/edge_attr name
// the weight attributes in GraphML/DOT output (e.g. "degree"/"llr" for
// ego networks, "frequency"/"count" for term networks).
struct GraphSpec {
    struct Node {
        std::string id;
        double weight = 0.0;
    };
    struct Edge {
        std::string a;
        std::string b;
        double weight = 0.0;
    };
    std::vector<Node> nodes;
    std::vector<Edge> edges;
    std::string node_attr = "degree";
    std::string edge_attr = "llr";
};

void write_graphml(const GraphSpec& g, const std::filesystem::path& path);
void write_dot(const GraphSpec& g, const std::filesystem::path& path);

// Deterministic circular layout on an 800x800 canvas (centre 400,400,
// ring radius 320). Node radius maps node weight linearly onto [6, 20]
// px, edge stroke width maps edge weight onto [0.6, 4.0] px and edge
// opacity onto [0.25, 0.9]; equal weights take the upper bound.
void write_svg(const GraphSpec& g, const std::filesystem::path& path);

} // namespace textmine
