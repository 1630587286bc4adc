#pragma once

#include <functional>
#include <vector>

#include "ppbox/hexgraph.hpp"
#include "ppbox/products.hpp"

namespace ppbox {

// Brute-force ground truth.  Enumeration is deliberately dumb: row-major
// lexicographic with monotonicity pruning, symmetry filters tested on the
// cube set, no counting shortcuts.

struct PlanePartition {
    BoxDims dims;
    std::vector<std::vector<int>> rows;  // a rows of b entries in [0,c]

    static PlanePartition empty_box(const BoxDims& d);
    static PlanePartition full_box(const BoxDims& d);

    bool valid() const;
    long cube_count() const;
    // cube indices are 0-based: (x,y,z) with x<a, y<b, z<c
    bool contains_cube(long x, long y, long z) const;
    bool operator==(const PlanePartition& o) const { return rows == o.rows; }
};

enum class PPSymmetry { tau, rho, kappa };
enum class PPFilter { none, rho, kappa_tau, rho_kappa_tau };

PPFilter filter_for_class(GraphClass c);

// tau needs a=b, rho needs a=b=c, kappa always exists.
PlanePartition apply_pp_symmetry(const PlanePartition& p, PPSymmetry op);

bool pp_invariant(const PlanePartition& p, PPFilter f);

long oracle_budget_from_env();  // PPBOX_ORACLE_BUDGET, default 64 (= abc)

// Every monotone matrix exactly once; returns the number that pass the filter.
long enumerate_pp(const BoxDims& dims, PPFilter filter, long budget,
                  const std::function<void(const PlanePartition&)>& sink);
long count_pp_oracle(const BoxDims& dims, PPFilter filter, long budget);

// weight q^{number of cubes}
Laurent q_weight(const PlanePartition& p);
Laurent qsum_pp_oracle(const BoxDims& dims, long budget);

// The tiling bijection.  Each face of the stack becomes one lozenge, i.e.
// one matching edge of the graph g (which must be build_hexagon(p.dims)).
Matching pp_to_matching(const PlanePartition& p, const WeightedGraph& g);
PlanePartition matching_to_pp(const Matching& m, const WeightedGraph& g);

}  // namespace ppbox
