#pragma once

#include <string>

#include "geoslice/graphs.hpp"

namespace geoslice {

// Edges of the windowed graph (both endpoints inside), canonical endpoint
// order, sorted; each edge appears exactly once.
std::vector<Edge> collect_edges(const ImplicitGraph& g, const Window& w);

// One edge per line, "x1 y1 x2 y2", sorted; byte-stable across runs.
std::string edge_list_text(const ImplicitGraph& g, const Window& w);

std::string dot_text(const ImplicitGraph& g, const Window& w);

// Window rendering: base edges light grey, short new edges dark grey, long
// new edges black, endpoints of new edges marked.
std::string svg_text(const ImplicitGraph& g, const Window& w);

}  // namespace geoslice
