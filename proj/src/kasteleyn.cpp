#include "ppbox/kasteleyn.hpp"

#include <algorithm>

namespace ppbox {

namespace {

template <class R>
struct DetOps;

template <>
struct DetOps<BigInt> {
    static BigInt div(const BigInt& a, const BigInt& b) { return exact_div(a, b); }
};

template <>
struct DetOps<Laurent> {
    static Laurent div(const Laurent& a, const Laurent& b) {
        Laurent q(a.var());
        require_invariant(a.divide_exact(b, q), "Bareiss division failed over the Laurent ring");
        return q;
    }
};

}  // namespace

template <class R>
R det_bareiss(std::vector<std::vector<R>> m) {
    const size_t n = m.size();
    for (const auto& row : m)
        require_invariant(row.size() == n, "determinant of a non-square matrix");
    if (n == 0) return R(1);

    int sign = 1;
    R prev = R(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (RingOps<R>::is_zero(m[k][k])) {
            size_t swap_row = k + 1;
            while (swap_row < n && RingOps<R>::is_zero(m[swap_row][k])) ++swap_row;
            if (swap_row == n) return R(0);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = DetOps<R>::div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    R det = m[n - 1][n - 1];
    return sign < 0 ? R(R(0) - det) : det;
}

template <>
Laurent det_bareiss<Laurent>(std::vector<std::vector<Laurent>> m) {
    const size_t n = m.size();
    for (const auto& row : m)
        require_invariant(row.size() == n, "determinant of a non-square matrix");
    if (n == 0) return Laurent::constant(Var::q, BigRat(1));
    Var v = m[0][0].var();

    int sign = 1;
    Laurent prev = Laurent::constant(v, BigRat(1));
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return Laurent(v);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = DetOps<Laurent>::div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    Laurent det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

template BigInt det_bareiss<BigInt>(std::vector<std::vector<BigInt>>);

template <class R>
R block_determinant(const SlicedBlock<R>& blk) {
    require_invariant(blk.rows() == blk.cols(), "sliced block is not square");
    return det_bareiss<R>(blk.a);
}

template BigInt block_determinant<BigInt>(const SlicedBlock<BigInt>&);
template Laurent block_determinant<Laurent>(const SlicedBlock<Laurent>&);

void check_class_dims(GraphClass cls, const BoxDims& dims) {
    switch (cls) {
        case GraphClass::pp:
            return;
        case GraphClass::tcpp:
            if (dims.a != dims.b || dims.c % 2 != 0)
                throw UsageError("tcpp needs a box (a,a,2b)");
            return;
        case GraphClass::cspp:
            if (!(dims.a == dims.b && dims.b == dims.c))
                throw UsageError("cspp needs a cube (a,a,a)");
            return;
        case GraphClass::cstcpp:
            if (!(dims.a == dims.b && dims.b == dims.c && dims.a % 2 == 0))
                throw UsageError("cstcpp needs a cube (2a,2a,2a)");
            return;
    }
}

WeightedGraph weighted_graph(GraphClass cls, const BoxDims& dims, RepMode mode) {
    check_class_dims(cls, dims);
    if (mode == RepMode::quantum) {
        require_invariant(cls == GraphClass::pp, "quantum weights exist for pp only");
        WeightedGraph g = build_hexagon(dims);
        attach_weights_from_matrix(g, pp_matrix_quantum(dims));
        return g;
    }
    WeightedGraph g;
    switch (cls) {
        case GraphClass::pp: g = build_hexagon(dims); break;
        case GraphClass::tcpp: g = build_tcpp_graph(dims.a, dims.c / 2); break;
        case GraphClass::cspp: g = build_cspp_graph(dims.a); break;
        case GraphClass::cstcpp: g = build_cstcpp_graph(dims.a / 2); break;
    }
    attach_induced_weights_classical(g);
    return g;
}

BigInt NormalizationTerm::as_integer() const {
    require_invariant(value.is_constant() && !value.is_zero(), "normalization is not a constant");
    BigRat c = value.coeff(0);
    require_invariant(is_integer(c), "normalization is not an integer");
    return c.get_num();
}

namespace {

BigInt closed_m_abs(const BoxDims& dims) {
    const long a = dims.a, b = dims.b, c = dims.c;
    return box_product({a, b}, dims.chat() - 1) * box_product({a, c}, dims.bhat() - 1) *
           box_product({b, c}, dims.ahat() - 1);
}

// The reference-matching weight is q^{(e2(2-e1)+e3)/4} times the q-ified
// edge-weight products; the exponent comes from summing the tensor dressing
// over the three face families of the empty stack (the top and first side
// families cancel, the remaining side contributes -abc/2, and converting
// brackets [n] to (n)_q adds (1-n)/2 per factor).
Laurent closed_m_q(const BoxDims& dims) {
    const long a = dims.a, b = dims.b, c = dims.c;
    const long e1 = a + b + c, e2 = a * b + b * c + a * c, e3 = a * b * c;
    Laurent prod = box_product_q({a, b}, dims.chat() - 1) * box_product_q({a, c}, dims.bhat() - 1) *
                   box_product_q({b, c}, dims.ahat() - 1);
    return prod.shifted(e2 * (2 - e1) + e3);
}

}  // namespace

NormalizationTerm normalization(GraphClass cls, const BoxDims& dims, RepMode mode) {
    check_class_dims(cls, dims);
    NormalizationTerm t;
    t.cls = cls;
    t.mode = mode;

    WeightedGraph g = weighted_graph(cls, dims, mode);
    Laurent reference(Var::q);
    if (cls == GraphClass::pp) {
        Matching empty = pp_to_matching(PlanePartition::empty_box(dims), g);
        reference = matching_weight(g, empty);
    } else {
        reference = matching_weight(g, first_matching(g));
    }

    if (mode == RepMode::quantum) {
        Laurent closed = closed_m_q(dims);
        require_invariant(reference == closed || reference == -closed,
                          "quantum normalization disagrees with the weighed empty matching");
    } else {
        BigInt closed;
        switch (cls) {
            case GraphClass::pp: closed = closed_m_abs(dims); break;
            case GraphClass::tcpp:
                closed = exact_sqrt(
                    exact_div(closed_m_abs(dims), odd_double_factorial(2 * dims.a - 1)));
                break;
            case GraphClass::cspp: closed = exact_cbrt(closed_m_abs(dims)); break;
            case GraphClass::cstcpp: closed = 0; break;  // no closed form
        }
        if (cls != GraphClass::cstcpp)
            require_invariant(reference == Laurent::constant(Var::q, BigRat(closed)),
                              "normalization disagrees with the weighed reference matching");
    }
    t.value = reference;
    return t;
}

std::string CountResult::value_str() const { return quantum ? value_q.str() : value.get_str(); }

CountResult count_via_determinant(GraphClass cls, const BoxDims& dims, RepMode mode) {
    check_class_dims(cls, dims);
    CountResult res;
    res.cls = cls;
    res.dims = dims;
    res.route = "determinant";
    res.quantum = mode == RepMode::quantum;

    NormalizationTerm norm = normalization(cls, dims, mode);

    if (mode == RepMode::quantum) {
        Laurent det = block_determinant(pp_matrix_quantum(dims));
        Laurent count(Var::q);
        require_invariant(det.divide_exact(norm.value, count),
                          "determinant not divisible by the quantum normalization");
        if (sgn(count.coeff(0)) < 0) count = -count;
        require_invariant(count.is_plain_polynomial() && count.has_integer_coefficients(),
                          "quantum count is not an integral polynomial");
        require_invariant(count.coeff(0) == 1, "quantum count has constant term != 1");
        require_invariant(count.max_qexp() == 4 * dims.volume(),
                          "quantum count has the wrong degree");
        res.value_q = count;
        return res;
    }

    BigInt det;
    switch (cls) {
        case GraphClass::pp: det = block_determinant(pp_matrix_classical(dims)); break;
        case GraphClass::tcpp: det = block_determinant(tcpp_matrix(dims.a, dims.c / 2)); break;
        case GraphClass::cspp: det = block_determinant(cspp_matrix(dims.a)); break;
        case GraphClass::cstcpp: det = block_determinant(cstcpp_matrix(dims.a / 2)); break;
    }
    res.value = exact_div(abs(det), norm.as_integer());
    require_invariant(res.value >= 1, "count of a nonempty box must be positive");
    return res;
}

CountResult count_via_formula(GraphClass cls, const BoxDims& dims, RepMode mode) {
    check_class_dims(cls, dims);
    CountResult res;
    res.cls = cls;
    res.dims = dims;
    res.route = "formula";
    res.quantum = mode == RepMode::quantum;
    if (mode == RepMode::quantum) {
        require_invariant(cls == GraphClass::pp, "q-formula exists for pp only");
        res.value_q = count_pp_formula_q(dims);
        return res;
    }
    switch (cls) {
        case GraphClass::pp: res.value = count_pp_formula(dims); break;
        case GraphClass::tcpp: res.value = count_tcpp_formula(dims.a, dims.c / 2); break;
        case GraphClass::cspp: res.value = count_cspp_formula(dims.a); break;
        case GraphClass::cstcpp:
            throw UsageError("no closed cstcpp formula; use the determinant or oracle route");
    }
    return res;
}

CountResult count_via_oracle(GraphClass cls, const BoxDims& dims, RepMode mode, long budget) {
    check_class_dims(cls, dims);
    CountResult res;
    res.cls = cls;
    res.dims = dims;
    res.route = "oracle";
    res.quantum = mode == RepMode::quantum;
    if (mode == RepMode::quantum) {
        require_invariant(cls == GraphClass::pp, "q-oracle exists for pp only");
        res.value_q = qsum_pp_oracle(dims, budget);
        return res;
    }
    res.value = count_pp_oracle(dims, filter_for_class(cls), budget);
    return res;
}

FlatnessReport verify_flatness(const WeightedGraph& g, RepMode mode) {
    FlatnessReport rep;
    for (size_t i = 0; i < g.faces.size(); ++i) {
        const Face& f = g.faces[i];
        CurvatureRatio c = kasteleyn_curvature(g, f);
        long expected = 0;
        if (mode == RepMode::quantum && !f.two_gon) expected = 4;  // curvature q
        FaceReport fr;
        fr.face = static_cast<int>(i);
        fr.two_gon = f.two_gon;
        fr.curvature = c.str();
        fr.ok = c.equals_monomial(expected);
        rep.all_ok = rep.all_ok && fr.ok;
        rep.faces.push_back(fr);
    }
    return rep;
}

namespace {

int permutation_sign(const std::vector<int>& perm) {
    std::vector<char> seen(perm.size(), 0);
    int sign = 1;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        size_t len = 0;
        for (size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = 1;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

}  // namespace

TermReport verify_term_equality(const WeightedGraph& g, long max_ups) {
    TermReport rep;
    bool first = true;
    enumerate_matchings(g, max_ups, [&](const Matching& m) {
        std::vector<int> perm(g.n_up(), -1);
        Laurent w = Laurent::constant(Var::q, BigRat(1));
        for (int id : m) {
            perm[g.edges[id].up_v] = g.edges[id].down_v;
            w *= g.edges[id].weight;
        }
        if (permutation_sign(perm) < 0) w = -w;
        if (first) {
            rep.common = w;
            first = false;
        } else if (!(w == rep.common)) {
            rep.all_equal = false;
        }
        rep.terms.push_back(w);
        ++rep.matchings;
    });
    return rep;
}

BigRat determinant_via_dmap(const BoxDims& dims) {
    std::vector<int> factors = {static_cast<int>(dims.chat() - 1),
                                static_cast<int>(dims.bhat() - 1),
                                static_cast<int>(dims.ahat() - 1)};
    BigRat via_character = d_map(character_tensor(factors));

    std::vector<long> hats = {dims.chat(), dims.bhat(), dims.ahat()};
    BigInt quot = exact_div(box_product(hats, dims.d() - 1), box_product(hats, dims.d() - 2));
    require_invariant(via_character == BigRat(quot * quot),
                      "D-map value disagrees with the box-product quotient");

    auto gens = tensor_generators_classical(factors);
    GroupAction triv = trivial_action(gens.basis);
    SlicedBlock<BigInt> x = slice_block(gens, Generator::X, -1, triv);
    SlicedBlock<BigInt> y = slice_block(gens, Generator::Y, 1, triv);
    require_invariant(x.row_ranks == y.col_ranks && x.col_ranks == y.row_ranks,
                      "slice label mismatch between X and Y blocks");
    const int n = x.cols();
    require_invariant(x.rows() == n && y.rows() == n && y.cols() == n,
                      "composed block is not square");
    std::vector<std::vector<BigInt>> yx(n, std::vector<BigInt>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            BigInt s = 0;
            for (int k = 0; k < x.rows(); ++k) s += y.a[i][k] * x.a[k][j];
            yx[i][j] = s;
        }
    BigInt composed_det = det_bareiss(std::move(yx));
    require_invariant(via_character == BigRat(composed_det),
                      "D-map value disagrees with the composed-block determinant");
    return via_character;
}

}  // namespace ppbox
