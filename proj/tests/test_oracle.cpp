#include "doctest.h"
#include "ppbox/oracle.hpp"
#include "ppbox/products.hpp"

#include <algorithm>
#include <set>

using namespace ppbox;

TEST_SUITE("oracle") {

TEST_CASE("unfiltered counts match the closed formula") {
    CHECK(count_pp_oracle(BoxDims(1, 1, 1), PPFilter::none, 64) == 2);
    CHECK(count_pp_oracle(BoxDims(2, 2, 2), PPFilter::none, 64) == 20);
    for (long a = 1; a <= 3; ++a)
        for (long b = a; b <= 3; ++b)
            for (long c = b; c <= 3; ++c)
                CHECK(count_pp_oracle(BoxDims(a, b, c), PPFilter::none, 64) ==
                      count_pp_formula(BoxDims(a, b, c)));
}

TEST_CASE("budget refusal") {
    CHECK_THROWS_AS(count_pp_oracle(BoxDims(4, 4, 5), PPFilter::none, 64), BudgetError);
    CHECK(oracle_budget_from_env() >= 1);
}

TEST_CASE("symmetry filters") {
    CHECK(count_pp_oracle(BoxDims(2, 2, 2), PPFilter::rho, 64) == count_cspp_formula(2));
    CHECK(count_pp_oracle(BoxDims(3, 3, 3), PPFilter::rho, 64) == count_cspp_formula(3));
    CHECK(count_pp_oracle(BoxDims(2, 2, 2), PPFilter::kappa_tau, 64) == count_tcpp_formula(2, 1));
    CHECK(count_pp_oracle(BoxDims(3, 3, 2), PPFilter::kappa_tau, 64) == count_tcpp_formula(3, 1));
    CHECK(count_pp_oracle(BoxDims(2, 2, 2), PPFilter::rho_kappa_tau, 64) == 1);
    // no invariant matchings over an odd height
    for (long a = 1; a <= 3; ++a)
        for (long b = 1; b <= 2; ++b)
            CHECK(count_pp_oracle(BoxDims(a, a, 2 * b - 1), PPFilter::kappa_tau, 64) == 0);
    CHECK_THROWS_AS(count_pp_oracle(BoxDims(1, 2, 2), PPFilter::rho, 64), UsageError);
}

TEST_CASE("symmetry operations") {
    BoxDims d(2, 2, 2);
    PlanePartition empty = PlanePartition::empty_box(d);
    CHECK(apply_pp_symmetry(empty, PPSymmetry::kappa) == PlanePartition::full_box(d));

    long seen = 0;
    enumerate_pp(d, PPFilter::none, 64, [&](const PlanePartition& p) {
        ++seen;
        PlanePartition r1 = apply_pp_symmetry(p, PPSymmetry::rho);
        PlanePartition r3 = apply_pp_symmetry(apply_pp_symmetry(r1, PPSymmetry::rho), PPSymmetry::rho);
        CHECK(r3 == p);
        CHECK(apply_pp_symmetry(apply_pp_symmetry(p, PPSymmetry::kappa), PPSymmetry::kappa) == p);
        CHECK(apply_pp_symmetry(apply_pp_symmetry(p, PPSymmetry::tau), PPSymmetry::tau) == p);
    });
    CHECK(seen == 20);

    // 1x1x2 box: the composite sends entry x to 2-x
    BoxDims d2(1, 1, 2);
    for (int x = 0; x <= 2; ++x) {
        PlanePartition p{d2, {{x}}};
        PlanePartition kt = apply_pp_symmetry(apply_pp_symmetry(p, PPSymmetry::tau), PPSymmetry::kappa);
        CHECK(kt.rows[0][0] == 2 - x);
    }
}

TEST_CASE("q weights") {
    BoxDims d(2, 2, 3);
    CHECK(q_weight(PlanePartition::empty_box(d)).is_one());
    CHECK(q_weight(PlanePartition::full_box(d)) == Laurent::monomial(Var::q, 1, 4 * 12));
    CHECK(qsum_pp_oracle(BoxDims(1, 1, 1), 64).str() == "1 + q");
    for (long a = 1; a <= 3; ++a)
        for (long b = a; b <= 3; ++b)
            for (long c = b; c <= 3; ++c)
                CHECK(qsum_pp_oracle(BoxDims(a, b, c), 64) == count_pp_formula_q(BoxDims(a, b, c)));
}

TEST_CASE("tiling bijection round trip and surjectivity") {
    for (long a = 1; a <= 3; ++a)
        for (long b = a; b <= 3; ++b)
            for (long c = b; c <= 3; ++c) {
                BoxDims dims(a, b, c);
                WeightedGraph g = build_hexagon(dims);
                std::set<Matching> images;
                enumerate_pp(dims, PPFilter::none, 64, [&](const PlanePartition& p) {
                    Matching m = pp_to_matching(p, g);
                    Matching sorted = m;
                    std::sort(sorted.begin(), sorted.end());
                    images.insert(sorted);
                    CHECK(matching_to_pp(m, g) == p);
                });
                std::set<Matching> all;
                enumerate_matchings(g, 64, [&](const Matching& m) {
                    Matching sorted = m;
                    std::sort(sorted.begin(), sorted.end());
                    all.insert(sorted);
                });
                CHECK(images == all);
            }
}

TEST_CASE("single face rotation adds or removes one cube") {
    BoxDims dims(2, 2, 2);
    WeightedGraph g = build_hexagon(dims);
    long rotations = 0;
    enumerate_matchings(g, 64, [&](const Matching& m) {
        std::set<int> in(m.begin(), m.end());
        long cubes = matching_to_pp(m, g).cube_count();
        for (const auto& f : g.faces) {
            bool even_in = in.count(f.edge_ids[0]) && in.count(f.edge_ids[2]) &&
                           in.count(f.edge_ids[4]);
            bool odd_in = in.count(f.edge_ids[1]) && in.count(f.edge_ids[3]) &&
                          in.count(f.edge_ids[5]);
            if (!even_in && !odd_in) continue;
            // rotate the face: swap its alternating edge triples
            Matching rotated;
            for (int id : m)
                if (!std::count(f.edge_ids.begin(), f.edge_ids.end(), id)) rotated.push_back(id);
            for (size_t k = even_in ? 1 : 0; k < 6; k += 2) rotated.push_back(f.edge_ids[k]);
            long cubes2 = matching_to_pp(rotated, g).cube_count();
            CHECK(std::labs(cubes2 - cubes) == 1);
            ++rotations;
        }
    });
    CHECK(rotations > 0);
}

TEST_CASE("bijection rejects foreign graphs") {
    WeightedGraph g = build_tcpp_graph(1, 1);
    PlanePartition p = PlanePartition::empty_box(BoxDims(1, 1, 2));
    CHECK_THROWS_AS(pp_to_matching(p, g), InvariantError);
}

}  // TEST_SUITE
