#include "ppbox/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace ppbox {

PlanePartition PlanePartition::empty_box(const BoxDims& d) {
    return {d, std::vector<std::vector<int>>(d.a, std::vector<int>(d.b, 0))};
}

PlanePartition PlanePartition::full_box(const BoxDims& d) {
    return {d, std::vector<std::vector<int>>(d.a, std::vector<int>(d.b, static_cast<int>(d.c)))};
}

bool PlanePartition::valid() const {
    if (static_cast<long>(rows.size()) != dims.a) return false;
    for (long i = 0; i < dims.a; ++i) {
        if (static_cast<long>(rows[i].size()) != dims.b) return false;
        for (long j = 0; j < dims.b; ++j) {
            int v = rows[i][j];
            if (v < 0 || v > dims.c) return false;
            if (j > 0 && rows[i][j - 1] < v) return false;
            if (i > 0 && rows[i - 1][j] < v) return false;
        }
    }
    return true;
}

long PlanePartition::cube_count() const {
    long n = 0;
    for (const auto& row : rows)
        for (int v : row) n += v;
    return n;
}

bool PlanePartition::contains_cube(long x, long y, long z) const {
    return x >= 0 && x < dims.a && y >= 0 && y < dims.b && z >= 0 && z < dims.c &&
           z < rows[x][y];
}

PPFilter filter_for_class(GraphClass c) {
    switch (c) {
        case GraphClass::pp: return PPFilter::none;
        case GraphClass::tcpp: return PPFilter::kappa_tau;
        case GraphClass::cspp: return PPFilter::rho;
        case GraphClass::cstcpp: return PPFilter::rho_kappa_tau;
    }
    return PPFilter::none;
}

PlanePartition apply_pp_symmetry(const PlanePartition& p, PPSymmetry op) {
    const BoxDims& d = p.dims;
    if (op == PPSymmetry::tau && d.a != d.b) throw UsageError("transposition needs a = b");
    if (op == PPSymmetry::rho && !(d.a == d.b && d.b == d.c))
        throw UsageError("rotation needs a cube");

    PlanePartition out{d, std::vector<std::vector<int>>(d.a, std::vector<int>(d.b, 0))};
    // work on the cube set so rho and kappa are uniform
    auto member = [&](long x, long y, long z) {
        switch (op) {
            case PPSymmetry::tau: return p.contains_cube(y, x, z);
            case PPSymmetry::rho: return p.contains_cube(y, z, x);
            case PPSymmetry::kappa:
                return !p.contains_cube(d.a - 1 - x, d.b - 1 - y, d.c - 1 - z);
        }
        return false;
    };
    for (long x = 0; x < d.a; ++x)
        for (long y = 0; y < d.b; ++y) {
            int h = 0;
            for (long z = 0; z < d.c; ++z)
                if (member(x, y, z)) ++h;
            out.rows[x][y] = h;
        }
    require_invariant(out.valid(), "symmetry image is not a plane partition");
    return out;
}

bool pp_invariant(const PlanePartition& p, PPFilter f) {
    const BoxDims& d = p.dims;
    if (f == PPFilter::none) return true;
    bool need_rho = f == PPFilter::rho || f == PPFilter::rho_kappa_tau;
    bool need_kt = f == PPFilter::kappa_tau || f == PPFilter::rho_kappa_tau;
    if (need_rho && !(d.a == d.b && d.b == d.c)) throw UsageError("rho filter needs a cube");
    if (need_kt && d.a != d.b) throw UsageError("kappa*tau filter needs a = b");
    for (long x = 0; x < d.a; ++x)
        for (long y = 0; y < d.b; ++y)
            for (long z = 0; z < d.c; ++z) {
                bool in = p.contains_cube(x, y, z);
                if (need_rho && in != p.contains_cube(y, z, x)) return false;
                if (need_kt &&
                    in == p.contains_cube(d.b - 1 - y, d.a - 1 - x, d.c - 1 - z))
                    return false;
            }
    return true;
}

long oracle_budget_from_env() {
    if (const char* s = std::getenv("PPBOX_ORACLE_BUDGET")) {
        long v = std::atol(s);
        if (v > 0) return v;
    }
    return 64;
}

namespace {

void enumerate_rec(PlanePartition& p, long i, long j, PPFilter filter, long& count,
                   const std::function<void(const PlanePartition&)>& sink) {
    const BoxDims& d = p.dims;
    if (i == d.a) {
        if (pp_invariant(p, filter)) {
            ++count;
            if (sink) sink(p);
        }
        return;
    }
    long ni = j + 1 == d.b ? i + 1 : i;
    long nj = j + 1 == d.b ? 0 : j + 1;
    int cap = static_cast<int>(d.c);
    if (i > 0) cap = std::min(cap, p.rows[i - 1][j]);
    if (j > 0) cap = std::min(cap, p.rows[i][j - 1]);
    for (int v = cap; v >= 0; --v) {
        p.rows[i][j] = v;
        enumerate_rec(p, ni, nj, filter, count, sink);
    }
    p.rows[i][j] = 0;
}

}  // namespace

long enumerate_pp(const BoxDims& dims, PPFilter filter, long budget,
                  const std::function<void(const PlanePartition&)>& sink) {
    if (dims.volume() > budget)
        throw BudgetError("oracle refused: box volume " + std::to_string(dims.volume()) +
                          " exceeds budget " + std::to_string(budget));
    PlanePartition p = PlanePartition::empty_box(dims);
    long count = 0;
    enumerate_rec(p, 0, 0, filter, count, sink);
    return count;
}

long count_pp_oracle(const BoxDims& dims, PPFilter filter, long budget) {
    static const std::function<void(const PlanePartition&)> none;
    return enumerate_pp(dims, filter, budget, none);
}

Laurent q_weight(const PlanePartition& p) {
    return Laurent::monomial(Var::q, BigRat(1), 4 * p.cube_count());
}

Laurent qsum_pp_oracle(const BoxDims& dims, long budget) {
    Laurent total(Var::q);
    enumerate_pp(dims, PPFilter::none, budget,
                 [&](const PlanePartition& p) { total += q_weight(p); });
    return total;
}

namespace {

PlanePartition complement_pp(const PlanePartition& p) {
    return apply_pp_symmetry(p, PPSymmetry::kappa);
}

int find_edge(const WeightedGraph& g, const RankTriple& up, int dir) {
    auto it = g.up_index.find(up);
    require_invariant(it != g.up_index.end(), "bijection produced a triangle outside the hexagon");
    for (int id : g.up_inc[it->second])
        if (g.edges[id].dir == dir) return id;
    throw InvariantError("bijection produced a missing edge direction");
}

// Face-by-face image of the complemented stack; composing with kappa aligns
// the empty partition with the q^{-abc/2} corner of the term grading.
Matching pp_to_matching_raw(const PlanePartition& p, const WeightedGraph& g) {
    const long a = p.dims.a, b = p.dims.b, c = p.dims.c;

    Matching m;
    // top faces: one per column (i,j) of the box, at height h = P_ij
    for (long i = 1; i <= a; ++i)
        for (long j = 1; j <= b; ++j) {
            long h = p.rows[i - 1][j - 1];
            RankTriple up = {static_cast<int>(b + i - j), static_cast<int>(a - i + h),
                             static_cast<int>(c - 1 - h + j)};
            m.push_back(find_edge(g, up, 0));
        }
    // faces seen along the a-axis: depth x = #{i : P_ij >= k}
    for (long j = 1; j <= b; ++j)
        for (long k = 1; k <= c; ++k) {
            long x = 0;
            for (long i = 1; i <= a; ++i)
                if (p.rows[i - 1][j - 1] >= k) ++x;
            RankTriple up = {static_cast<int>(b + x - j), static_cast<int>(a - x + k - 1),
                             static_cast<int>(c + j - k)};
            m.push_back(find_edge(g, up, 2));
        }
    // faces seen along the b-axis: depth y = #{j : P_ij >= k}
    for (long i = 1; i <= a; ++i)
        for (long k = 1; k <= c; ++k) {
            long y = 0;
            for (long j = 1; j <= b; ++j)
                if (p.rows[i - 1][j - 1] >= k) ++y;
            RankTriple up = {static_cast<int>(b + i - 1 - y), static_cast<int>(a - i + k),
                             static_cast<int>(c - k + y)};
            m.push_back(find_edge(g, up, 1));
        }

    require_invariant(static_cast<long>(m.size()) == g.n_up(), "bijection missed a triangle");
    std::vector<char> used_up(g.ups.size(), 0), used_down(g.downs.size(), 0);
    for (int id : m) {
        require_invariant(!used_up[g.edges[id].up_v] && !used_down[g.edges[id].down_v],
                          "bijection produced overlapping lozenges");
        used_up[g.edges[id].up_v] = used_down[g.edges[id].down_v] = 1;
    }
    return m;
}

PlanePartition matching_to_pp_raw(const Matching& m, const WeightedGraph& g) {
    const long a = g.box.a, b = g.box.b, c = g.box.c;

    // invert via the top-face family: each dir-0 edge lies on the diagonal
    // i - j = m0 - b at height offset h - i = n - a
    std::map<long, std::vector<long>> diag;  // delta -> n values
    for (int id : m)
        if (g.edges[id].dir == 0) {
            const RankTriple& r = g.ups[g.edges[id].up_v].r;
            diag[r[0] - b].push_back(r[1]);
        }

    PlanePartition p = PlanePartition::empty_box(g.box);
    long assigned = 0;
    for (auto& [delta, ns] : diag) {
        long i_min = std::max(1L, 1 + delta);
        long i_max = std::min(a, b + delta);
        require_invariant(i_max >= i_min && static_cast<long>(ns.size()) == i_max - i_min + 1,
                          "matching has the wrong diagonal profile");
        std::sort(ns.begin(), ns.end(), std::greater<long>());
        for (long t = 0; t < static_cast<long>(ns.size()); ++t) {
            long i = i_min + t, j = i - delta;
            long h = ns[t] - a + i;
            require_invariant(h >= 0 && h <= c, "matching height out of range");
            p.rows[i - 1][j - 1] = static_cast<int>(h);
            ++assigned;
        }
    }
    require_invariant(assigned == a * b, "matching does not cover every column");
    require_invariant(p.valid(), "matching decodes to a non-monotone matrix");
    return p;
}

}  // namespace

Matching pp_to_matching(const PlanePartition& p, const WeightedGraph& g) {
    require_invariant(g.cls == GraphClass::pp, "bijection targets the full hexagon graph");
    require_invariant(g.box.a == p.dims.a && g.box.b == p.dims.b && g.box.c == p.dims.c,
                      "bijection dims mismatch");
    require_invariant(p.valid(), "not a plane partition");
    return pp_to_matching_raw(complement_pp(p), g);
}

PlanePartition matching_to_pp(const Matching& m, const WeightedGraph& g) {
    require_invariant(g.cls == GraphClass::pp, "bijection targets the full hexagon graph");
    return complement_pp(matching_to_pp_raw(m, g));
}

}  // namespace ppbox
