// Acceptance suite: every criterion is an exact identity at desk scale.
// Prints one PASS/FAIL line per criterion and exits nonzero on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <vector>

#include "fixtures.hpp"
#include "ppbox/jsonio.hpp"
#include "ppbox/kasteleyn.hpp"

using namespace ppbox;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

// 1. determinant = box-product quotient = hyperfactorial form = oracle,
//    exactly, for every box with sides <= 4
void criterion_routes_classical() {
    for (long a = 1; a <= 4; ++a)
        for (long b = 1; b <= 4; ++b)
            for (long c = 1; c <= 4; ++c) {
                BoxDims dims(a, b, c);
                BigInt quot = exact_div(box_product({a, b, c}, dims.d() - 1),
                                        box_product({a, b, c}, dims.d() - 2));
                BigInt hf = exact_div(
                    hyperfactorial(dims.d()) * hyperfactorial(a) * hyperfactorial(b) *
                        hyperfactorial(c),
                    hyperfactorial(a + b) * hyperfactorial(a + c) * hyperfactorial(b + c));
                BigInt det = count_via_determinant(GraphClass::pp, dims, RepMode::classical).value;
                BigInt oracle = count_pp_oracle(dims, PPFilter::none, 64);
                expect(quot == hf, "quotient vs hyperfactorial at " + std::to_string(a));
                expect(det == quot && det == oracle,
                       "route disagreement at " + std::to_string(a) + "," + std::to_string(b) +
                           "," + std::to_string(c));
            }
    expect(count_pp_formula(BoxDims(1, 1, 1)) == 2, "N(1,1,1)");
    expect(count_pp_formula(BoxDims(1, 1, 2)) == 3, "N(1,1,2)");
    expect(count_pp_formula(BoxDims(2, 2, 2)) == 20, "N(2,2,2)");
}

// 2. q-routes agree as exact Laurent polynomials for sides <= 3
void criterion_routes_quantum() {
    for (long a = 1; a <= 3; ++a)
        for (long b = 1; b <= 3; ++b)
            for (long c = 1; c <= 3; ++c) {
                BoxDims dims(a, b, c);
                Laurent det = count_via_determinant(GraphClass::pp, dims, RepMode::quantum).value_q;
                Laurent formula = count_pp_formula_q(dims);
                Laurent oracle = qsum_pp_oracle(dims, 64);
                expect(det == formula && det == oracle, "q-route disagreement");
                expect(det.coeff(0) == 1, "constant term");
                expect(det.is_plain_polynomial(), "not a polynomial in q");
                expect(det.max_qexp() == 4 * dims.volume(), "degree != abc");
            }
    expect(count_pp_formula_q(BoxDims(1, 1, 1)).str() == "1 + q", "N_q(1,1,1)");
}

// 3. symmetry classes: determinant = oracle (= closed formula where it exists)
void criterion_symmetry_classes() {
    for (long a = 1; a <= 4; ++a) {
        BoxDims box(a, a, a);
        BigInt det = count_via_determinant(GraphClass::cspp, box, RepMode::classical).value;
        expect(det == count_cspp_formula(a), "cspp det vs formula at a=" + std::to_string(a));
        expect(det == count_pp_oracle(box, PPFilter::rho, 64),
               "cspp det vs oracle at a=" + std::to_string(a));
    }
    for (long a = 1; a <= 4; ++a)
        for (long b = 1; b <= 2; ++b) {
            BoxDims box(a, a, 2 * b);
            BigInt det = count_via_determinant(GraphClass::tcpp, box, RepMode::classical).value;
            expect(det == count_tcpp_formula(a, b), "tcpp det vs formula");
            expect(det == count_pp_oracle(box, PPFilter::kappa_tau, 64), "tcpp det vs oracle");
        }
    for (long a = 1; a <= 2; ++a) {
        BoxDims box(2 * a, 2 * a, 2 * a);
        BigInt det = count_via_determinant(GraphClass::cstcpp, box, RepMode::classical).value;
        expect(det == count_pp_oracle(box, PPFilter::rho_kappa_tau, 64), "cstcpp det vs oracle");
    }
    expect(count_cspp_formula(1) == 2, "cspp(1)");
    for (long a = 1; a <= 3; ++a)
        for (long b = 1; b <= 2; ++b)
            expect(count_pp_oracle(BoxDims(a, a, 2 * b - 1), PPFilter::kappa_tau, 64) == 0,
                   "odd-height tcpp count nonzero");
}

// 4. the frozen 4x4 tensor block and the frozen 2x2x3 edge weights
void criterion_fixture_reproduction() {
    auto gens = tensor_generators_classical({4, 3});
    auto blk = slice_block(gens, Generator::X, -1, trivial_action(gens.basis));
    std::vector<std::vector<BigInt>> expected = {
        {4, 1, 0, 0}, {0, 3, 2, 0}, {0, 0, 2, 3}, {0, 0, 0, 1}};
    expect(blk.a == expected, "4x4 tensor block");
    expect(blk.col_weights(0) == std::vector<int>{-4, 3} &&
               blk.row_weights(0) == std::vector<int>{-2, 3},
           "4x4 block labels");

    auto m223 = pp_matrix_classical(BoxDims(2, 2, 3));
    std::map<std::vector<int>, int> col_of, row_of;
    for (int j = 0; j < m223.cols(); ++j) col_of[m223.col_ranks[j]] = j;
    for (int i = 0; i < m223.rows(); ++i) row_of[m223.row_ranks[i]] = i;
    long nnz = 0;
    for (int i = 0; i < m223.rows(); ++i)
        for (int j = 0; j < m223.cols(); ++j)
            if (sgn(m223.a[i][j]) != 0) ++nnz;
    expect(nnz == 41, "2x2x3 edge count");
    for (const auto& e : fixtures::weights_223()) {
        std::vector<int> up = {e.up[0], e.up[1], e.up[2]};
        std::vector<int> down = up;
        --down[e.dir];
        expect(col_of.count(up) == 1 && row_of.count(down) == 1, "2x2x3 fixture labels");
        expect(m223.a[row_of[down]][col_of[up]] == e.w, "2x2x3 fixture weight");
    }
}

// 5. Kasteleyn invariants: curvature and determinant-term equality
void criterion_kasteleyn_invariants() {
    for (long a = 1; a <= 4; ++a)
        for (long b = a; b <= 4; ++b)
            for (long c = b; c <= 4; ++c) {
                BoxDims dims(a, b, c);
                WeightedGraph g = weighted_graph(GraphClass::pp, dims, RepMode::classical);
                expect(verify_flatness(g, RepMode::classical).all_ok, "classical flatness");
                WeightedGraph gq = weighted_graph(GraphClass::pp, dims, RepMode::quantum);
                expect(verify_flatness(gq, RepMode::quantum).all_ok, "quantum flatness");
                if (g.n_up() <= 40) {
                    TermReport rep = verify_term_equality(g, 40);
                    expect(rep.all_equal && rep.matchings == count_pp_formula(dims),
                           "term equality");
                }
            }
    // symmetry-class graphs stay flat too, 2-gon included
    for (long a = 1; a <= 4; ++a) {
        WeightedGraph g = weighted_graph(GraphClass::cspp, BoxDims(a, a, a), RepMode::classical);
        expect(verify_flatness(g, RepMode::classical).all_ok, "cspp flatness");
        if (g.n_up() <= 40) expect(verify_term_equality(g, 40).all_equal, "cspp terms");
    }
    for (long a = 1; a <= 4; ++a)
        for (long b = 1; b <= 2; ++b) {
            WeightedGraph g =
                weighted_graph(GraphClass::tcpp, BoxDims(a, a, 2 * b), RepMode::classical);
            expect(verify_flatness(g, RepMode::classical).all_ok, "tcpp flatness");
            if (g.n_up() <= 40) expect(verify_term_equality(g, 40).all_equal, "tcpp terms");
        }
    for (long a = 1; a <= 2; ++a) {
        WeightedGraph g =
            weighted_graph(GraphClass::cstcpp, BoxDims(2 * a, 2 * a, 2 * a), RepMode::classical);
        expect(verify_flatness(g, RepMode::classical).all_ok, "cstcpp flatness");
        if (g.n_up() <= 40) expect(verify_term_equality(g, 40).all_equal, "cstcpp terms");
    }
}

// 6. representation identities
void criterion_rep_identities() {
    auto check_classical = [](const TensorGenerators<BigInt>& g) {
        SparseMat<BigInt> two_x = g.X + g.X;
        SparseMat<BigInt> minus_two_y = SparseMat<BigInt>(g.Y.n_rows, g.Y.n_cols) - (g.Y + g.Y);
        expect(commutator(g.H, g.X) == two_x, "[H,X] != 2X");
        expect(commutator(g.H, g.Y) == minus_two_y, "[H,Y] != -2Y");
        expect(commutator(g.X, g.Y) == g.H, "[X,Y] != H");
    };
    auto check_quantum = [](const TensorGenerators<Laurent>& g) {
        SparseMat<Laurent> two_x = g.X + g.X;
        SparseMat<Laurent> minus_two_y =
            SparseMat<Laurent>(g.Y.n_rows, g.Y.n_cols) - (g.Y + g.Y);
        expect(commutator(g.H, g.X) == two_x, "q [H,X] != 2X");
        expect(commutator(g.H, g.Y) == minus_two_y, "q [H,Y] != -2Y");
        expect(commutator(g.X, g.Y) == bracket_of_H(g.basis), "q [X,Y] != [H]");
    };
    for (long n = 0; n <= 8; ++n) {
        check_classical(irrep_generators_classical(n));
        check_quantum(irrep_generators_quantum(n));
    }
    for (auto factors : std::vector<std::vector<int>>{{4, 4, 4}, {5, 4, 3}, {5, 5, 4}, {7, 3, 1}}) {
        check_classical(tensor_generators_classical(factors));
        check_quantum(tensor_generators_quantum(factors));
    }

    for (long n = 0; n <= 10; ++n)
        for (long k = 0; k <= 10; ++k) {
            Laurent prod = character_irrep(n) * character_irrep(k);
            Laurent sum(Var::t);
            for (long m : clebsch_gordan(n, k)) sum += character_irrep(m);
            expect(prod == sum, "Clebsch-Gordan character identity");
        }

    for (long n = 1; n <= 10; ++n) {
        expect(d_map(character_irrep(2 * n - 1)) == BigRat(n * n), "middle-slice square");
        auto gens = irrep_generators_classical(2 * n - 1);
        auto x = slice_block(gens, Generator::X, -1, trivial_action(gens.basis));
        auto y = slice_block(gens, Generator::Y, 1, trivial_action(gens.basis));
        expect(x.rows() == 1 && x.cols() == 1 && y.a[0][0] * x.a[0][0] == n * n,
               "composed 1x1 block");
    }

    for (long a = 1; a <= 3; ++a)
        for (long b = a; b <= 3; ++b)
            for (long c = b; c <= 3; ++c)
                determinant_via_dmap(BoxDims(a, b, c));  // cross-checks internally
}

// 7. normalization relations, pinned by independently weighed matchings
void criterion_normalizations() {
    for (long a = 1; a <= 4; ++a)
        for (long b = a; b <= 4; ++b)
            for (long c = b; c <= 4; ++c)
                normalization(GraphClass::pp, BoxDims(a, b, c), RepMode::classical);
    for (long a = 1; a <= 4; ++a)
        for (long b = 1; b <= 2; ++b) {
            BoxDims box(a, a, 2 * b);
            BigInt mtc = normalization(GraphClass::tcpp, box, RepMode::classical).as_integer();
            BigInt mpp = normalization(GraphClass::pp, box, RepMode::classical).as_integer();
            expect(mtc * mtc * odd_double_factorial(2 * a - 1) == mpp, "m_tc^2 (2a-1)!! != |m|");
        }
    for (long a = 1; a <= 4; ++a) {
        BoxDims box(a, a, a);
        BigInt mrho = normalization(GraphClass::cspp, box, RepMode::classical).as_integer();
        BigInt mpp = normalization(GraphClass::pp, box, RepMode::classical).as_integer();
        expect(mrho * mrho * mrho == mpp, "m_rho^3 != m");
    }
    for (long a = 1; a <= 3; ++a)
        for (long b = a; b <= 3; ++b)
            for (long c = b; c <= 3; ++c)
                normalization(GraphClass::pp, BoxDims(a, b, c), RepMode::quantum);
}

// 8. product identities
void criterion_product_identities() {
    for (long a = 1; a <= 4; ++a)
        for (long b = 1; b <= 4; ++b)
            for (long c = 1; c <= 4; ++c)
                for (long n = 0; n <= 12; ++n) {
                    BigInt lhs = box_product({a, b, c}, n) * simplex_product(3, n - a) *
                                 simplex_product(3, n - b) * simplex_product(3, n - c) *
                                 simplex_product(3, n - a - b - c);
                    BigInt rhs = simplex_product(3, n) * simplex_product(3, n - a - b) *
                                 simplex_product(3, n - a - c) * simplex_product(3, n - b - c);
                    expect(lhs == rhs, "inclusion-exclusion identity");
                }
    for (long a1 = 1; a1 <= 4; ++a1)
        for (long a2 = 1; a2 <= 4; ++a2)
            for (long n = 0; n <= 12; ++n)
                expect(box_product({a1, a2}, n) * box_product({kInfiniteDim, a2}, n - a1) ==
                           box_product({kInfiniteDim, a2}, n),
                       "strip-off quotient identity");
    for (long a = 1; a <= 3; ++a)
        for (long b = 1; b <= 3; ++b)
            for (long n = 0; n <= 9; ++n)
                expect(poly_eval_at_one(box_product_q({a, b}, n)) == box_product({a, b}, n),
                       "q-product specialization");
    for (long k = 0; k <= 3; ++k)
        for (long n = 0; n <= 9; ++n)
            expect(poly_eval_at_one(simplex_product_q(k, n)) == simplex_product(k, n),
                   "q-simplex specialization");
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void()> run;
    };
    std::vector<Criterion> criteria = {
        {"1 route agreement, unrestricted boxes <= 4", criterion_routes_classical},
        {"2 q-route agreement, boxes <= 3", criterion_routes_quantum},
        {"3 symmetry classes: determinant = formula = oracle", criterion_symmetry_classes},
        {"4 fixture reproduction (4x4 block, 2x2x3 weights)", criterion_fixture_reproduction},
        {"5 Kasteleyn flatness and term equality", criterion_kasteleyn_invariants},
        {"6 representation identities", criterion_rep_identities},
        {"7 normalization relations", criterion_normalizations},
        {"8 product identities", criterion_product_identities},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string verdict = "PASS", detail;
        try {
            c.run();
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = e.what();
            ++failures;
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::cout << "[" << verdict << "] criterion " << c.name << " (" << ms << " ms)"
                  << (detail.empty() ? "" : " -- " + detail) << std::endl;
    }
    if (failures) std::cout << failures << " criteria failed" << std::endl;
    return failures == 0 ? 0 : 1;
}
