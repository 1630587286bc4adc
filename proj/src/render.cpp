#include "ppbox/render.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace ppbox {

namespace {

constexpr double kEdge = 40.0;
constexpr double kMargin = 20.0;
const double kRoot3Half = std::sqrt(3.0) / 2.0;

struct Pt {
    double x, y;
};

// axial (p,q) -> pixels, q axis at 60 degrees, y flipped for SVG
Pt to_px(int p, int q, double height) {
    return {kMargin + kEdge * (p + 0.5 * q), height - kMargin - kEdge * kRoot3Half * q};
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

}  // namespace

std::string render_matching_svg(const WeightedGraph& g, const Matching& m) {
    require_invariant(g.cls == GraphClass::pp, "renderer draws full hexagon tilings");
    const long pmax = g.box.chat(), qmax = g.box.bhat();
    const double width = 2 * kMargin + kEdge * (pmax + 0.5 * qmax);
    const double height = 2 * kMargin + kEdge * kRoot3Half * qmax;

    static const char* fills[3] = {"#9ecbff", "#ffd28f", "#b7e3a8"};

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
       << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";

    for (int id : m) {
        const GraphEdge& e = g.edges[id];
        int x = e.up_rep[0], y = e.up_rep[1];
        // quad = up triangle corners plus the opposite down apex
        std::array<std::pair<int, int>, 4> quad;
        switch (e.dir) {
            case 0: quad = {{{x + 1, y}, {x, y}, {x - 1, y + 1}, {x, y + 1}}}; break;
            case 1: quad = {{{x, y + 1}, {x, y}, {x + 1, y - 1}, {x + 1, y}}}; break;
            default: quad = {{{x, y}, {x + 1, y}, {x + 1, y + 1}, {x, y + 1}}}; break;
        }
        os << "<polygon points=\"";
        for (size_t i = 0; i < quad.size(); ++i) {
            Pt p = to_px(quad[i].first, quad[i].second, height);
            os << (i ? " " : "") << fmt(p.x) << "," << fmt(p.y);
        }
        os << "\" fill=\"" << fills[e.dir] << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace ppbox
