#pragma once

#include <string>

#include "ppbox/hexgraph.hpp"

namespace ppbox {

// Deterministic SVG of a lozenge tiling; the three lozenge orientations get
// distinct fills.  Unit edge is 40 px.
std::string render_matching_svg(const WeightedGraph& g, const Matching& m);

}  // namespace ppbox
