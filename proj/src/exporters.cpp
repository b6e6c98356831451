#include "geoslice/exporters.hpp"

#include <algorithm>
#include <sstream>

namespace geoslice {

std::vector<Edge> collect_edges(const ImplicitGraph& g, const Window& w) {
    w.validate();
    std::vector<Edge> edges;
    std::vector<WeightedNeighbor> nb;
    for (i64 y = w.y_min; y <= w.y_max; ++y)
        for (i64 x = w.x_min; x <= w.x_max; ++x) {
            Vertex v{x, y};
            g.neighbors(v, nb);
            for (const auto& n : nb) {
                if (!w.contains(n.to)) continue;
                Edge e(v, n.to);
                if (e.u == v) edges.push_back(e);  // emit once, from the low end
            }
        }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

std::string edge_list_text(const ImplicitGraph& g, const Window& w) {
    std::ostringstream out;
    for (const Edge& e : collect_edges(g, w))
        out << e.u.x << ' ' << e.u.y << ' ' << e.v.x << ' ' << e.v.y << '\n';
    return out.str();
}

std::string dot_text(const ImplicitGraph& g, const Window& w) {
    std::ostringstream out;
    out << "graph lattice {\n  node [shape=point];\n";
    for (const Edge& e : collect_edges(g, w)) {
        out << "  \"" << e.u.x << ',' << e.u.y << "\" -- \"" << e.v.x << ','
            << e.v.y << "\"";
        if (g.is_new_edge(e.u, e.v))
            out << " [color=black]";
        else
            out << " [color=gray]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string svg_text(const ImplicitGraph& g, const Window& w) {
    const i64 scale = 16, margin = 16;
    auto px = [&](i64 x) { return margin + (x - w.x_min) * scale; };
    auto py = [&](i64 y) { return margin + (w.y_max - y) * scale; };
    i64 width = 2 * margin + (w.x_max - w.x_min) * scale;
    i64 height = 2 * margin + (w.y_max - w.y_min) * scale;

    std::vector<Edge> edges = collect_edges(g, w);
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\">\n";

    // base edges first so new edges draw over them
    for (int pass = 0; pass < 2; ++pass)
        for (const Edge& e : edges) {
            bool is_new = g.is_new_edge(e.u, e.v);
            if (is_new != (pass == 1)) continue;
            const char* stroke = "#cccccc";
            int stroke_width = 1;
            if (is_new) {
                stroke_width = 3;
                stroke = z2_distance(e.u, e.v) < g.max_span() ? "#777777"
                                                              : "#000000";
            }
            out << "<line x1=\"" << px(e.u.x) << "\" y1=\"" << py(e.u.y)
                << "\" x2=\"" << px(e.v.x) << "\" y2=\"" << py(e.v.y)
                << "\" stroke=\"" << stroke << "\" stroke-width=\""
                << stroke_width << "\"/>\n";
        }

    // mark endpoints of new edges
    std::vector<Vertex> marks;
    for (const Edge& e : edges)
        if (g.is_new_edge(e.u, e.v)) {
            marks.push_back(e.u);
            marks.push_back(e.v);
        }
    std::sort(marks.begin(), marks.end());
    marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
    for (const Vertex& v : marks)
        out << "<circle cx=\"" << px(v.x) << "\" cy=\"" << py(v.y)
            << "\" r=\"3\" fill=\"white\" stroke=\"black\"/>\n";

    out << "</svg>\n";
    return out.str();
}

}  // namespace geoslice
