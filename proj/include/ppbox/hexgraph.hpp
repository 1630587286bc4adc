#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ppbox/laurent.hpp"
#include "ppbox/products.hpp"

namespace ppbox {

// Unit triangles of the hexagon H(a,b,c) are indexed by rank triples
// (r0,r1,r2) in [0,chat) x [0,bhat) x [0,ahat):  up triangles have coordinate
// sum d-1, down triangles d-2, and an up triangle is adjacent to the three
// down triangles reached by decrementing one coordinate.  In axial lattice
// coordinates the triple is (x, y, d-1-x-y) resp. (x, y, d-2-x-y), which is
// what TriCoord records.

using RankTriple = std::array<int, 3>;

struct TriCoord {
    int x = 0;
    int y = 0;
    bool up = true;
};

enum class GraphClass { pp, tcpp, cspp, cstcpp };

std::string class_name(GraphClass c);
GraphClass class_from_name(const std::string& s);

struct GraphVertex {
    RankTriple r;  // canonical representative for quotient graphs
    TriCoord tri() const { return TriCoord{r[0], r[1], true}; }
};

struct GraphEdge {
    int up_v = -1;   // index into ups
    int down_v = -1; // index into downs
    int dir = 0;     // coordinate of up_rep that decrements along this edge
    RankTriple up_rep{};  // the lift anchored at the canonical up representative
    Laurent weight = Laurent::constant(Var::q, BigRat(1));
};

struct Face {
    std::vector<int> edge_ids;  // cyclic; even positions form the curvature numerator
    bool two_gon = false;
};

struct WeightedGraph {
    GraphClass cls = GraphClass::pp;
    BoxDims box;
    std::vector<GraphVertex> ups, downs;
    std::vector<GraphEdge> edges;
    std::vector<Face> faces;
    std::vector<std::vector<int>> up_inc, down_inc;
    std::map<RankTriple, int> up_index, down_index;

    int n_up() const { return static_cast<int>(ups.size()); }
    int n_down() const { return static_cast<int>(downs.size()); }
    int vertex_count() const { return n_up() + n_down(); }
    std::array<int, 3> highest_weights() const;  // (chat-1, bhat-1, ahat-1)
    std::array<int, 3> weight_tuple_up(int idx) const;
    std::array<int, 3> weight_tuple_down(int idx) const;
};

// All triangles of H(a,b,c); unit weights.
WeightedGraph build_hexagon(const BoxDims& dims);

// Fundamental-domain component of Z(a,a,2b) for the bisector reflection:
// triangles with r1 > r2 (the component holding the canonical representatives).
WeightedGraph build_tcpp_graph(long a, long b);

// Orbit quotient Z(a,a,a)/rotation; a true multigraph whose central face is
// the 2-gon carried by the two parallel edges.
WeightedGraph build_cspp_graph(long a);

// Fundamental-domain chamber r0 > r1 > r2 of Z(2a,2a,2a) for the full
// order-6 symmetry group.
WeightedGraph build_cstcpp_graph(long a);

enum class Symmetry { rho, kappa_tau };

struct SymmetryPerm {
    std::vector<int> up_map, down_map, edge_map;
    int order = 1;
};

// Vertex/edge permutation of the full hexagon graph induced by the symmetry;
// rho needs a=b=c, kappa_tau needs a=b.  Commutes with adjacency by
// construction and is checked while being built.
SymmetryPerm apply_symmetry(const WeightedGraph& g, Symmetry s);

using Matching = std::vector<int>;  // edge ids, one per vertex pair

// Every perfect matching exactly once, via backtracking on the up vertex of
// lowest remaining degree.  Refuses graphs above the budget.
long enumerate_matchings(const WeightedGraph& g, long max_ups,
                         const std::function<void(const Matching&)>& sink);
long count_matchings(const WeightedGraph& g, long max_ups);

// First matching found, without any budget (used to weigh one term).
Matching first_matching(const WeightedGraph& g);

long matching_budget_from_env();  // PPBOX_MATCHING_BUDGET, default 40

Laurent matching_weight(const WeightedGraph& g, const Matching& m);

// Alternating product around a face: (even positions)/(odd positions).
struct CurvatureRatio {
    Laurent num, den;
    // reduced form when the quotient is exact, e.g. "q"; otherwise "num / den"
    std::string str() const;
    bool equals_monomial(long qexp) const;  // num == var^{qexp/4} * den
};

CurvatureRatio kasteleyn_curvature(const WeightedGraph& g, const Face& f);

// Canonical order used for vertices and matrix labels everywhere: ascending
// by weight tuple, which on rank triples is descending lexicographic.
inline bool rank_before(const RankTriple& s, const RankTriple& t) { return t < s; }

}  // namespace ppbox
