#include "ppbox/reptheory.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ppbox {

template <class R>
void SparseMat<R>::add(int r, int c, const R& v) {
    if (RingOps<R>::is_zero(v)) return;
    col[c].emplace_back(r, v);
}

template <class R>
void SparseMat<R>::normalize() {
    for (auto& column : col) {
        std::sort(column.begin(), column.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        std::vector<std::pair<int, R>> merged;
        for (auto& [r, v] : column) {
            if (!merged.empty() && merged.back().first == r)
                merged.back().second = merged.back().second + v;
            else
                merged.emplace_back(r, v);
        }
        column.clear();
        for (auto& [r, v] : merged)
            if (!RingOps<R>::is_zero(v)) column.emplace_back(r, v);
    }
}

template <class R>
SparseMat<R> SparseMat<R>::diagonal(const std::vector<R>& d) {
    SparseMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < m.n_cols; ++i) m.add(i, i, d[i]);
    return m;
}

template <class R>
SparseMat<R> SparseMat<R>::operator*(const SparseMat& o) const {
    require_invariant(n_cols == o.n_rows, "sparse product shape mismatch");
    SparseMat out(n_rows, o.n_cols);
    for (int j = 0; j < o.n_cols; ++j) {
        std::map<int, R> acc;
        for (const auto& [k, v] : o.col[j])
            for (const auto& [i, w] : col[k]) {
                auto it = acc.find(i);
                if (it == acc.end())
                    acc.emplace(i, w * v);
                else
                    it->second = it->second + w * v;
            }
        for (auto& [i, v] : acc)
            if (!RingOps<R>::is_zero(v)) out.col[j].emplace_back(i, v);
    }
    return out;
}

template <class R>
SparseMat<R> SparseMat<R>::operator+(const SparseMat& o) const {
    require_invariant(n_rows == o.n_rows && n_cols == o.n_cols, "sparse sum shape mismatch");
    SparseMat out(n_rows, n_cols);
    for (int j = 0; j < n_cols; ++j) {
        out.col[j] = col[j];
        for (const auto& [r, v] : o.col[j]) out.col[j].emplace_back(r, v);
    }
    out.normalize();
    return out;
}

template <class R>
SparseMat<R> SparseMat<R>::operator-(const SparseMat& o) const {
    require_invariant(n_rows == o.n_rows && n_cols == o.n_cols, "sparse diff shape mismatch");
    SparseMat out(n_rows, n_cols);
    for (int j = 0; j < n_cols; ++j) {
        out.col[j] = col[j];
        for (const auto& [r, v] : o.col[j]) out.col[j].emplace_back(r, R(0) - v);
    }
    out.normalize();
    return out;
}

template <>
SparseMat<Laurent> SparseMat<Laurent>::operator-(const SparseMat& o) const {
    require_invariant(n_rows == o.n_rows && n_cols == o.n_cols, "sparse diff shape mismatch");
    SparseMat out(n_rows, n_cols);
    for (int j = 0; j < n_cols; ++j) {
        out.col[j] = col[j];
        for (const auto& [r, v] : o.col[j]) out.col[j].emplace_back(r, -v);
    }
    out.normalize();
    return out;
}

template <class R>
bool SparseMat<R>::operator==(const SparseMat& o) const {
    if (n_rows != o.n_rows || n_cols != o.n_cols) return false;
    SparseMat a = *this, b = o;
    a.normalize();
    b.normalize();
    return a.col == b.col;
}

template struct SparseMat<BigInt>;
template struct SparseMat<Laurent>;

std::vector<int> TensorBasis::weights(int idx) const {
    std::vector<int> w(highest.size());
    for (size_t f = 0; f < highest.size(); ++f) w[f] = highest[f] - 2 * ranks[idx][f];
    return w;
}

int TensorBasis::hweight(int idx) const {
    int s = 0;
    for (size_t f = 0; f < highest.size(); ++f) s += highest[f] - 2 * ranks[idx][f];
    return s;
}

TensorBasis make_tensor_basis(const std::vector<int>& highest) {
    if (highest.empty()) throw UsageError("tensor product needs at least one factor");
    for (int n : highest)
        if (n < 0) throw UsageError("irrep highest weight must be >= 0");
    TensorBasis b;
    b.highest = highest;
    std::vector<int> r(highest.size(), 0);
    while (true) {
        b.ranks.push_back(r);
        size_t f = highest.size();
        while (f > 0) {
            --f;
            if (r[f] < highest[f]) {
                ++r[f];
                std::fill(r.begin() + f + 1, r.end(), 0);
                break;
            }
            if (f == 0) goto done;
        }
    }
done:
    // ascending weight tuples = descending rank tuples
    std::sort(b.ranks.begin(), b.ranks.end(),
              [](const std::vector<int>& s, const std::vector<int>& t) { return t < s; });
    for (int i = 0; i < b.dim(); ++i) b.index_of[b.ranks[i]] = i;
    return b;
}

namespace {

// X decrements one rank (raising the weight by 2), Y increments it.
// coeff(X, factor at rank r) = r resp. [r]; coeff(Y) = n-r resp. [n-r].
// The quantum entries carry q^{(sum of weights right of f minus left of f)/4}.

template <class R>
struct EntryMaker;

template <>
struct EntryMaker<BigInt> {
    static BigInt make(long plain, long) { return BigInt(plain); }
    static BigInt weight_entry(int w) { return BigInt(w); }
};

template <>
struct EntryMaker<Laurent> {
    static Laurent make(long plain, long qexp) { return bracket_integer(plain).shifted(qexp); }
    static Laurent weight_entry(int w) { return Laurent::constant(Var::q, BigRat(w)); }
};

template <class R>
TensorGenerators<R> build_generators(const std::vector<int>& highest, bool quantum) {
    TensorGenerators<R> g;
    g.basis = make_tensor_basis(highest);
    const int dim = g.basis.dim();
    const size_t nf = highest.size();
    g.H = SparseMat<R>(dim, dim);
    g.X = SparseMat<R>(dim, dim);
    g.Y = SparseMat<R>(dim, dim);

    for (int idx = 0; idx < dim; ++idx) {
        const std::vector<int>& r = g.basis.ranks[idx];
        std::vector<int> w = g.basis.weights(idx);
        g.H.add(idx, idx, EntryMaker<R>::weight_entry(g.basis.hweight(idx)));
        for (size_t f = 0; f < nf; ++f) {
            long qexp = 0;
            if (quantum) {
                for (size_t gth = 0; gth < nf; ++gth) {
                    if (gth > f) qexp += w[gth];
                    if (gth < f) qexp -= w[gth];
                }
            }
            if (r[f] >= 1) {
                std::vector<int> t = r;
                --t[f];
                g.X.add(g.basis.index_of.at(t), idx, EntryMaker<R>::make(r[f], qexp));
            }
            if (r[f] < highest[f]) {
                std::vector<int> t = r;
                ++t[f];
                g.Y.add(g.basis.index_of.at(t), idx, EntryMaker<R>::make(highest[f] - r[f], qexp));
            }
        }
    }
    g.H.normalize();
    g.X.normalize();
    g.Y.normalize();
    return g;
}

}  // namespace

TensorGenerators<BigInt> tensor_generators_classical(const std::vector<int>& highest) {
    return build_generators<BigInt>(highest, false);
}

TensorGenerators<Laurent> tensor_generators_quantum(const std::vector<int>& highest) {
    return build_generators<Laurent>(highest, true);
}

TensorGenerators<BigInt> irrep_generators_classical(long n) {
    return tensor_generators_classical({static_cast<int>(n)});
}

TensorGenerators<Laurent> irrep_generators_quantum(long n) {
    return tensor_generators_quantum({static_cast<int>(n)});
}

SparseMat<Laurent> bracket_of_H(const TensorBasis& basis) {
    std::vector<Laurent> d;
    d.reserve(basis.dim());
    for (int i = 0; i < basis.dim(); ++i) d.push_back(bracket_integer(basis.hweight(i)));
    return SparseMat<Laurent>::diagonal(d);
}

SparseMat<Laurent> half_power_of_H(const TensorBasis& basis) {
    std::vector<Laurent> d;
    d.reserve(basis.dim());
    for (int i = 0; i < basis.dim(); ++i)
        d.push_back(Laurent::monomial(Var::q, BigRat(1), 2 * basis.hweight(i)));
    return SparseMat<Laurent>::diagonal(d);
}

namespace {

GroupAction permutation_action(const TensorBasis& basis,
                               const std::vector<std::vector<int>>& factor_perms,
                               const std::vector<int>& signs) {
    GroupAction act;
    act.sign = signs;
    for (const auto& p : factor_perms) {
        for (size_t f = 0; f < p.size(); ++f)
            require_invariant(basis.highest[f] == basis.highest[p[f]],
                              "factor permutation needs equal highest weights");
        std::vector<int> perm(basis.dim());
        for (int idx = 0; idx < basis.dim(); ++idx) {
            const std::vector<int>& r = basis.ranks[idx];
            std::vector<int> t(r.size());
            // position f of the image holds the rank from position p[f]
            for (size_t f = 0; f < p.size(); ++f) t[f] = r[p[f]];
            perm[idx] = basis.index_of.at(t);
        }
        act.perm.push_back(std::move(perm));
    }
    return act;
}

}  // namespace

GroupAction trivial_action(const TensorBasis& basis) {
    std::vector<int> id(basis.highest.size());
    std::iota(id.begin(), id.end(), 0);
    return permutation_action(basis, {id}, {1});
}

GroupAction tcpp_action(const TensorBasis& basis) {
    require_invariant(basis.highest.size() == 3, "tcpp action is for triple tensors");
    return permutation_action(basis, {{0, 1, 2}, {0, 2, 1}}, {1, -1});
}

GroupAction cspp_action(const TensorBasis& basis) {
    require_invariant(basis.highest.size() == 3, "cspp action is for triple tensors");
    return permutation_action(basis, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, {1, 1, 1});
}

GroupAction cstcpp_action(const TensorBasis& basis) {
    require_invariant(basis.highest.size() == 3, "cstcpp action is for triple tensors");
    return permutation_action(basis,
                              {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}},
                              {1, 1, 1, -1, -1, -1});
}

template <class R>
std::vector<int> SlicedBlock<R>::col_weights(int i) const {
    std::vector<int> w(highest.size());
    for (size_t f = 0; f < highest.size(); ++f) w[f] = highest[f] - 2 * col_ranks[i][f];
    return w;
}

template <class R>
std::vector<int> SlicedBlock<R>::row_weights(int i) const {
    std::vector<int> w(highest.size());
    for (size_t f = 0; f < highest.size(); ++f) w[f] = highest[f] - 2 * row_ranks[i][f];
    return w;
}

template <class R>
int SlicedBlock<R>::col_index(const std::vector<int>& ranks) const {
    for (int i = 0; i < cols(); ++i)
        if (col_ranks[i] == ranks) return i;
    return -1;
}

template <class R>
int SlicedBlock<R>::row_index(const std::vector<int>& ranks) const {
    for (int i = 0; i < rows(); ++i)
        if (row_ranks[i] == ranks) return i;
    return -1;
}

template struct SlicedBlock<BigInt>;
template struct SlicedBlock<Laurent>;

namespace {

struct Orbits {
    std::vector<int> rep;                             // idx -> representative (-1 if killed)
    std::vector<int> rel;                             // idx -> sign relative to rep (0 if killed)
    std::map<int, std::vector<std::pair<int, int>>> members;  // rep -> [(idx, rel)]
};

Orbits make_orbits(const GroupAction& act, const TensorBasis& basis) {
    const int dim = basis.dim();
    Orbits o;
    o.rep.assign(dim, -2);  // -2 unvisited
    o.rel.assign(dim, 0);
    for (int idx = 0; idx < dim; ++idx) {
        if (o.rep[idx] != -2) continue;
        std::map<int, int> image_sign;
        bool killed = false;
        for (size_t g = 0; g < act.perm.size(); ++g) {
            int img = act.perm[g][idx];
            auto it = image_sign.find(img);
            if (it == image_sign.end())
                image_sign.emplace(img, act.sign[g]);
            else if (it->second != act.sign[g])
                killed = true;  // signed sum vanishes
        }
        // representative: weight-lex least = rank-lex greatest
        int rep = -1;
        for (const auto& [img, s] : image_sign)
            if (rep < 0 || basis.ranks[img] > basis.ranks[rep]) rep = img;
        int rep_sign = image_sign.at(rep);
        for (const auto& [img, s] : image_sign) {
            o.rep[img] = killed ? -1 : rep;
            o.rel[img] = killed ? 0 : s * rep_sign;
            if (!killed) o.members[rep].emplace_back(img, s * rep_sign);
        }
    }
    return o;
}

}  // namespace

template <class R>
SlicedBlock<R> slice_block(const TensorGenerators<R>& gens, Generator gen, int lambda,
                           const GroupAction& action) {
    require_invariant(gen != Generator::H, "slice_block expects a raising or lowering generator");
    const TensorBasis& basis = gens.basis;
    const SparseMat<R>& M = gen == Generator::X ? gens.X : gens.Y;
    const int target = gen == Generator::X ? lambda + 2 : lambda - 2;

    Orbits orbits = make_orbits(action, basis);

    auto reps_in_slice = [&](int weight) {
        std::vector<int> out;
        for (const auto& [rep, mem] : orbits.members)
            if (basis.hweight(rep) == weight) out.push_back(rep);
        // members map is keyed by index; indices are already weight-sorted
        std::sort(out.begin(), out.end());
        return out;
    };
    std::vector<int> cols = reps_in_slice(lambda);
    std::vector<int> rows = reps_in_slice(target);
    std::map<int, int> row_pos;
    for (size_t i = 0; i < rows.size(); ++i) row_pos[rows[i]] = static_cast<int>(i);

    SlicedBlock<R> blk;
    blk.highest = basis.highest;
    for (int c : cols) blk.col_ranks.push_back(basis.ranks[c]);
    for (int r : rows) blk.row_ranks.push_back(basis.ranks[r]);
    blk.a.assign(rows.size(), std::vector<R>(cols.size(), RingOps<R>::zero()));

    for (size_t cj = 0; cj < cols.size(); ++cj) {
        // image of the symmetrized vector for this orbit
        std::map<int, R> out;
        for (const auto& [idx, rel] : orbits.members.at(cols[cj])) {
            for (const auto& [row_idx, val] : M.col[idx]) {
                R signed_val = rel > 0 ? val : R(RingOps<R>::zero()) - val;
                auto it = out.find(row_idx);
                if (it == out.end())
                    out.emplace(row_idx, signed_val);
                else
                    it->second = it->second + signed_val;
            }
        }
        for (auto it = out.begin(); it != out.end();) {
            if (RingOps<R>::is_zero(it->second))
                it = out.erase(it);
            else
                ++it;
        }
        // fold back through the target orbits, checking equivariance
        std::set<int> touched;
        for (const auto& [idx, val] : out) {
            int rep = orbits.rep[idx];
            require_invariant(rep >= 0, "generator image leaves the symmetrized subspace");
            touched.insert(rep);
        }
        for (int rep : touched) {
            auto pos = row_pos.find(rep);
            require_invariant(pos != row_pos.end(), "generator image lands outside the slice");
            const auto& mem = orbits.members.at(rep);
            R folded = RingOps<R>::zero();
            bool have = false;
            for (const auto& [idx, rel] : mem) {
                auto it = out.find(idx);
                R val = it == out.end() ? RingOps<R>::zero() : it->second;
                R normalized = rel > 0 ? val : R(RingOps<R>::zero()) - val;
                if (!have) {
                    folded = normalized;
                    have = true;
                } else {
                    require_invariant(normalized == folded,
                                      "generator image is not equivariant on an orbit");
                }
            }
            blk.a[pos->second][cj] = folded;
        }
    }
    return blk;
}

template SlicedBlock<BigInt> slice_block(const TensorGenerators<BigInt>&, Generator, int,
                                         const GroupAction&);
template SlicedBlock<Laurent> slice_block(const TensorGenerators<Laurent>&, Generator, int,
                                          const GroupAction&);

namespace {

std::vector<int> factors_for_box(const BoxDims& dims) {
    return {static_cast<int>(dims.chat() - 1), static_cast<int>(dims.bhat() - 1),
            static_cast<int>(dims.ahat() - 1)};
}

// support must match the graph: one nonzero per edge, aggregated for the
// quotient multigraph (parallel edges sum their lifted weights)
template <class R>
void check_support(const SlicedBlock<R>& blk, const WeightedGraph& g, bool aggregated) {
    require_invariant(static_cast<int>(blk.col_ranks.size()) == g.n_up() &&
                          static_cast<int>(blk.row_ranks.size()) == g.n_down(),
                      "slice dimensions do not match the graph");
    for (int i = 0; i < g.n_up(); ++i)
        require_invariant(RankTriple{blk.col_ranks[i][0], blk.col_ranks[i][1],
                                     blk.col_ranks[i][2]} == g.ups[i].r,
                          "column labels do not match the up triangles");
    for (int i = 0; i < g.n_down(); ++i)
        require_invariant(RankTriple{blk.row_ranks[i][0], blk.row_ranks[i][1],
                                     blk.row_ranks[i][2]} == g.downs[i].r,
                          "row labels do not match the down triangles");

    std::map<std::pair<int, int>, int> edge_multiplicity;
    for (const auto& e : g.edges) ++edge_multiplicity[{e.down_v, e.up_v}];
    long nnz = 0;
    for (int i = 0; i < blk.rows(); ++i)
        for (int j = 0; j < blk.cols(); ++j)
            if (!RingOps<R>::is_zero(blk.a[i][j])) {
                ++nnz;
                auto it = edge_multiplicity.find({i, j});
                require_invariant(it != edge_multiplicity.end(),
                                  "matrix supported off the graph edge set");
                require_invariant(aggregated || it->second == 1,
                                  "unexpected parallel edges in a simple graph");
            }
    require_invariant(nnz == static_cast<long>(edge_multiplicity.size()),
                      "graph edge missing from the matrix support");
}

}  // namespace

SlicedBlock<BigInt> pp_matrix_classical(const BoxDims& dims) {
    auto gens = tensor_generators_classical(factors_for_box(dims));
    auto blk = slice_block(gens, Generator::X, -1, trivial_action(gens.basis));
    check_support(blk, build_hexagon(dims), false);
    return blk;
}

SlicedBlock<Laurent> pp_matrix_quantum(const BoxDims& dims) {
    auto gens = tensor_generators_quantum(factors_for_box(dims));
    auto blk = slice_block(gens, Generator::X, -1, trivial_action(gens.basis));
    check_support(blk, build_hexagon(dims), false);
    return blk;
}

SlicedBlock<BigInt> tcpp_matrix(long a, long b) {
    BoxDims box(a, a, 2 * b);
    auto gens = tensor_generators_classical(factors_for_box(box));
    auto blk = slice_block(gens, Generator::X, -1, tcpp_action(gens.basis));
    check_support(blk, build_tcpp_graph(a, b), false);
    return blk;
}

SlicedBlock<BigInt> cspp_matrix(long a) {
    BoxDims box(a, a, a);
    auto gens = tensor_generators_classical(factors_for_box(box));
    auto blk = slice_block(gens, Generator::X, -1, cspp_action(gens.basis));
    check_support(blk, build_cspp_graph(a), true);
    return blk;
}

SlicedBlock<BigInt> cstcpp_matrix(long a) {
    BoxDims box(2 * a, 2 * a, 2 * a);
    auto gens = tensor_generators_classical(factors_for_box(box));
    auto blk = slice_block(gens, Generator::X, -1, cstcpp_action(gens.basis));
    check_support(blk, build_cstcpp_graph(a), false);
    return blk;
}

void attach_induced_weights_classical(WeightedGraph& g) {
    for (auto& e : g.edges)
        e.weight = Laurent::constant(Var::q, BigRat(e.up_rep[e.dir]));
}

void attach_weights_from_matrix(WeightedGraph& g, const SlicedBlock<Laurent>& m) {
    require_invariant(g.cls == GraphClass::pp, "matrix weights attach to the hexagon graph");
    require_invariant(m.cols() == g.n_up() && m.rows() == g.n_down(),
                      "matrix does not match the graph");
    for (auto& e : g.edges) {
        const Laurent& v = m.a[e.down_v][e.up_v];
        require_invariant(!v.is_zero(), "graph edge missing from matrix");
        e.weight = v;
    }
}

Laurent character_irrep(long n) {
    if (n < 0) throw UsageError("character of negative highest weight");
    Laurent ch(Var::t);
    for (long w = -n; w <= n; w += 2) ch += Laurent::monomial(Var::t, BigRat(1), 4 * w);
    return ch;
}

Laurent character_tensor(const std::vector<int>& highest) {
    Laurent ch = Laurent::constant(Var::t, BigRat(1));
    for (int n : highest) ch *= character_irrep(n);
    return ch;
}

Laurent character_tcpp_subspace(long a, long b) {
    // diagonal vectors pair the two equal factors: ch(V_{2a-1})(t) ch(V_{a+2b-1})(t^2)
    BoxDims box(a, a, 2 * b);
    Laurent full = character_tensor(factors_for_box(box));
    Laurent diag = character_irrep(2 * a - 1) * character_irrep(a + 2 * b - 1).substituted_power(2);
    Laurent ch = (full - diag).scaled(BigRat(1, 2));
    require_invariant(ch.has_integer_coefficients(), "tcpp character is not integral");
    return ch;
}

Laurent character_cspp_subspace(long a) {
    BoxDims box(a, a, a);
    Laurent full = character_tensor(factors_for_box(box));
    Laurent ch =
        (full + character_irrep(2 * a - 1).substituted_power(3).scaled(BigRat(2))).scaled(BigRat(1, 3));
    require_invariant(ch.has_integer_coefficients(), "cspp character is not integral");
    return ch;
}

BigRat d_map(const Laurent& character) {
    require_invariant(character.var() == Var::t, "the D map acts on characters in t");
    BigRat out(1);
    for (const auto& [qexp, c] : character.terms()) {
        require_invariant(qexp % 4 == 0 && ((qexp / 4) % 2 != 0),
                          "D map needs odd integer exponents");
        require_invariant(is_integer(c) && c.get_num().fits_slong_p(),
                          "D map needs (small) integer multiplicities");
        long n = (qexp / 4 + 1) / 2;
        BigRat base(std::max(n, 1L), 1);
        base /= BigRat(std::max(n - 1, 1L), 1);
        out *= rat_pow(base * base, c.get_num().get_si());
    }
    return out;
}

std::vector<long> clebsch_gordan(long n, long k) {
    if (n < 0 || k < 0) throw UsageError("clebsch_gordan needs n,k >= 0");
    std::vector<long> parts;
    for (long m = n + k; m >= std::labs(n - k); m -= 2) parts.push_back(m);
    return parts;
}

}  // namespace ppbox
