#pragma once

#include <vector>

#include "ppbox/hexgraph.hpp"

namespace ppbox::fixtures {

// Frozen edge weights of the 2x2x3 hexagon graph:
// three columns of horizontal edges weighted 3,2,1 (4,5,4 edges), and two
// diagonal families running 4..1 and 1..4 (3,4,4,3 edges each).  Each entry
// is (up rank triple, decremented coordinate, weight).
struct FigEdge {
    RankTriple up;
    int dir;
    int w;
};

inline const std::vector<FigEdge>& weights_223() {
    static const std::vector<FigEdge> edges = {
        // horizontal (dir 0): weight = first coordinate
        {{3, 0, 3}, 0, 3}, {{3, 1, 2}, 0, 3}, {{3, 2, 1}, 0, 3}, {{3, 3, 0}, 0, 3},
        {{2, 0, 4}, 0, 2}, {{2, 1, 3}, 0, 2}, {{2, 2, 2}, 0, 2}, {{2, 3, 1}, 0, 2},
        {{2, 4, 0}, 0, 2},
        {{1, 1, 4}, 0, 1}, {{1, 2, 3}, 0, 1}, {{1, 3, 2}, 0, 1}, {{1, 4, 1}, 0, 1},
        // first diagonal family (dir 1): weight = second coordinate
        {{2, 4, 0}, 1, 4}, {{1, 4, 1}, 1, 4}, {{0, 4, 2}, 1, 4},
        {{3, 3, 0}, 1, 3}, {{2, 3, 1}, 1, 3}, {{1, 3, 2}, 1, 3}, {{0, 3, 3}, 1, 3},
        {{3, 2, 1}, 1, 2}, {{2, 2, 2}, 1, 2}, {{1, 2, 3}, 1, 2}, {{0, 2, 4}, 1, 2},
        {{3, 1, 2}, 1, 1}, {{2, 1, 3}, 1, 1}, {{1, 1, 4}, 1, 1},
        // second diagonal family (dir 2): weight = third coordinate
        {{1, 4, 1}, 2, 1}, {{2, 3, 1}, 2, 1}, {{3, 2, 1}, 2, 1},
        {{0, 4, 2}, 2, 2}, {{1, 3, 2}, 2, 2}, {{2, 2, 2}, 2, 2}, {{3, 1, 2}, 2, 2},
        {{0, 3, 3}, 2, 3}, {{1, 2, 3}, 2, 3}, {{2, 1, 3}, 2, 3}, {{3, 0, 3}, 2, 3},
        {{0, 2, 4}, 2, 4}, {{1, 1, 4}, 2, 4}, {{2, 0, 4}, 2, 4},
    };
    return edges;
}

}  // namespace ppbox::fixtures
