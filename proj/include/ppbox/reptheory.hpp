#pragma once

#include <map>
#include <string>
#include <vector>

#include "ppbox/hexgraph.hpp"
#include "ppbox/laurent.hpp"

namespace ppbox {

// sl(2) machinery, classical and quantum.  The two modes share every code
// path through the scalar-ring template; the classical matrices are built
// over BigInt directly, never as a q=1 specialization (that equality is a
// test, not a definition).

enum class RepMode { classical, quantum };
enum class Generator { H, X, Y };

template <class R>
struct RingOps;

template <>
struct RingOps<BigInt> {
    static BigInt zero() { return BigInt(0); }
    static bool is_zero(const BigInt& v) { return sgn(v) == 0; }
    static std::string str(const BigInt& v) { return v.get_str(); }
};

template <>
struct RingOps<Laurent> {
    static Laurent zero() { return Laurent(Var::q); }
    static bool is_zero(const Laurent& v) { return v.is_zero(); }
    static std::string str(const Laurent& v) { return v.str(); }
};

// Column-sparse matrix; every stored value nonzero, rows sorted per column.
template <class R>
struct SparseMat {
    int n_rows = 0, n_cols = 0;
    std::vector<std::vector<std::pair<int, R>>> col;

    SparseMat() = default;
    SparseMat(int r, int c) : n_rows(r), n_cols(c), col(c) {}

    void add(int r, int c, const R& v);
    void normalize();  // sort + drop zeros + merge
    static SparseMat diagonal(const std::vector<R>& d);
    SparseMat operator*(const SparseMat& o) const;
    SparseMat operator+(const SparseMat& o) const;
    SparseMat operator-(const SparseMat& o) const;
    bool operator==(const SparseMat& o) const;
};

template <class R>
SparseMat<R> commutator(const SparseMat<R>& a, const SparseMat<R>& b) {
    return a * b - b * a;
}

// Tensor-product weight basis, ordered ascending by weight tuple (which is
// descending lexicographic on rank tuples).  Rank r in factor f is the basis
// vector of weight highest[f] - 2r.
struct TensorBasis {
    std::vector<int> highest;
    std::vector<std::vector<int>> ranks;
    std::map<std::vector<int>, int> index_of;

    int dim() const { return static_cast<int>(ranks.size()); }
    std::vector<int> weights(int idx) const;
    int hweight(int idx) const;
};

TensorBasis make_tensor_basis(const std::vector<int>& highest);

template <class R>
struct TensorGenerators {
    TensorBasis basis;
    SparseMat<R> H, X, Y;
};

TensorGenerators<BigInt> tensor_generators_classical(const std::vector<int>& highest);
TensorGenerators<Laurent> tensor_generators_quantum(const std::vector<int>& highest);

// single-irrep convenience (a one-factor tensor)
TensorGenerators<BigInt> irrep_generators_classical(long n);
TensorGenerators<Laurent> irrep_generators_quantum(long n);

// diag([w]) over the basis, the right-hand side of the quantum [X,Y] axiom
SparseMat<Laurent> bracket_of_H(const TensorBasis& basis);
// diag(q^{w/2}); used by the exponential-of-sum identity check
SparseMat<Laurent> half_power_of_H(const TensorBasis& basis);

// Signed permutation action on the tensor basis.
struct GroupAction {
    std::vector<std::vector<int>> perm;  // perm[g][idx]
    std::vector<int> sign;
};

GroupAction trivial_action(const TensorBasis& basis);
GroupAction tcpp_action(const TensorBasis& basis);    // swap last two factors, sign -1
GroupAction cspp_action(const TensorBasis& basis);    // cyclic rotations, sign +1
GroupAction cstcpp_action(const TensorBasis& basis);  // all permutations, parity sign

// One weight-graded block of a generator, restricted to the isotypic
// subspace cut out by the action.  Labels are orbit representatives.
template <class R>
struct SlicedBlock {
    std::vector<int> highest;
    std::vector<std::vector<int>> col_ranks, row_ranks;
    std::vector<std::vector<R>> a;  // a[row][col]

    int rows() const { return static_cast<int>(row_ranks.size()); }
    int cols() const { return static_cast<int>(col_ranks.size()); }
    std::vector<int> col_weights(int i) const;
    std::vector<int> row_weights(int i) const;
    // index maps run both ways: position -> label via the vectors above,
    // label -> position here (-1 if absent)
    int col_index(const std::vector<int>& ranks) const;
    int row_index(const std::vector<int>& ranks) const;
};

// gen = X maps slice lambda -> lambda+2, gen = Y maps lambda -> lambda-2.
// Applying the generator to each symmetrized basis vector must land exactly
// in the span of the target symmetrized basis; anything else throws.
template <class R>
SlicedBlock<R> slice_block(const TensorGenerators<R>& gens, Generator gen, int lambda,
                           const GroupAction& action);

// The four determinantal constructions.  Each validates its support against
// the corresponding graph before returning.
SlicedBlock<BigInt> pp_matrix_classical(const BoxDims& dims);
SlicedBlock<Laurent> pp_matrix_quantum(const BoxDims& dims);
SlicedBlock<BigInt> tcpp_matrix(long a, long b);
SlicedBlock<BigInt> cspp_matrix(long a);
SlicedBlock<BigInt> cstcpp_matrix(long a);

// Classical edge weights induced from the slice matrices: an edge that
// decrements coordinate f carries weight r_f of its up representative.
void attach_induced_weights_classical(WeightedGraph& g);
// Quantum weights for the full hexagon graph, copied off the matrix entries.
void attach_weights_from_matrix(WeightedGraph& g, const SlicedBlock<Laurent>& m);

// characters (Laurent polynomials in t)
Laurent character_irrep(long n);
Laurent character_tensor(const std::vector<int>& highest);
Laurent character_tcpp_subspace(long a, long b);
Laurent character_cspp_subspace(long a);

// D(t^{2n-1}) = max(n,1)^2 / max(n-1,1)^2, multiplicative over monomials;
// rejects even exponents and non-integer coefficients.
BigRat d_map(const Laurent& character);

std::vector<long> clebsch_gordan(long n, long k);

}  // namespace ppbox
