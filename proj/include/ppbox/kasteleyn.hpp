#pragma once

#include <string>
#include <vector>

#include "ppbox/oracle.hpp"
#include "ppbox/reptheory.hpp"

namespace ppbox {

// Fraction-free (Bareiss) determinant over any integral domain with exact
// division; BigInt and the Laurent ring both qualify.  Sign is retained.
template <class R>
R det_bareiss(std::vector<std::vector<R>> m);

// det of one sliced block; requires a square block.
template <class R>
R block_determinant(const SlicedBlock<R>& blk);

// Validates box shape for a symmetry class (tcpp: a=b, c even; cspp: cube;
// cstcpp: cube with even side).  Throws UsageError otherwise.
void check_class_dims(GraphClass cls, const BoxDims& dims);

// The weighted graph whose matching terms the determinant expands into.
WeightedGraph weighted_graph(GraphClass cls, const BoxDims& dims, RepMode mode);

// Weight of the reference matching (empty plane partition for pp, first
// enumerated matching otherwise), cross-checked against the closed forms
//   |m|     = C(a,b;chat-1) C(a,c;bhat-1) C(b,c;ahat-1)
//   m_q     = +-q^{-abc/2} (same product q-ified)
//   m_tc    = sqrt(|m| / (2a-1)!!)
//   m_rho   = cbrt(m)
// (cstcpp has no closed form; the matching weight is the definition there).
struct NormalizationTerm {
    GraphClass cls = GraphClass::pp;
    RepMode mode = RepMode::classical;
    Laurent value = Laurent(Var::q);  // constant for classical classes

    BigInt as_integer() const;
};

NormalizationTerm normalization(GraphClass cls, const BoxDims& dims, RepMode mode);

struct CountResult {
    GraphClass cls = GraphClass::pp;
    BoxDims dims;
    std::string route;  // "determinant" | "formula" | "oracle"
    bool quantum = false;
    BigInt value = 0;
    Laurent value_q = Laurent(Var::q);

    std::string value_str() const;
};

CountResult count_via_determinant(GraphClass cls, const BoxDims& dims, RepMode mode);
CountResult count_via_formula(GraphClass cls, const BoxDims& dims, RepMode mode);
CountResult count_via_oracle(GraphClass cls, const BoxDims& dims, RepMode mode, long budget);

struct FaceReport {
    int face = 0;
    bool two_gon = false;
    std::string curvature;
    bool ok = false;
};

struct FlatnessReport {
    std::vector<FaceReport> faces;
    bool all_ok = true;
};

// classical: curvature 1 at every face (and equal sides on the 2-gon);
// quantum: curvature q at every hexagon.  Violations are listed, not thrown.
FlatnessReport verify_flatness(const WeightedGraph& g, RepMode mode);

struct TermReport {
    long matchings = 0;
    bool all_equal = true;
    Laurent common = Laurent(Var::q);   // the first signed term
    std::vector<Laurent> terms;         // signed term per matching
};

// Expands the determinant by perfect matchings: term = permutation sign
// times the product of matched edge weights.
TermReport verify_term_equality(const WeightedGraph& g, long max_ups);

// det((alpha(Y) alpha(X))|_{-1}) three ways: through the D map on the
// character, through the box-product quotient squared, and directly from the
// composed sliced blocks.  All three must agree exactly.
BigRat determinant_via_dmap(const BoxDims& dims);

}  // namespace ppbox
