#include "ppbox/hexgraph.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace ppbox {

std::string class_name(GraphClass c) {
    switch (c) {
        case GraphClass::pp: return "pp";
        case GraphClass::tcpp: return "tcpp";
        case GraphClass::cspp: return "cspp";
        case GraphClass::cstcpp: return "cstcpp";
    }
    return "?";
}

GraphClass class_from_name(const std::string& s) {
    if (s == "pp") return GraphClass::pp;
    if (s == "tcpp") return GraphClass::tcpp;
    if (s == "cspp") return GraphClass::cspp;
    if (s == "cstcpp") return GraphClass::cstcpp;
    throw UsageError("unknown symmetry class '" + s + "' (pp|tcpp|cspp|cstcpp)");
}

std::array<int, 3> WeightedGraph::highest_weights() const {
    return {static_cast<int>(box.chat() - 1), static_cast<int>(box.bhat() - 1),
            static_cast<int>(box.ahat() - 1)};
}

std::array<int, 3> WeightedGraph::weight_tuple_up(int idx) const {
    auto h = highest_weights();
    const RankTriple& r = ups[idx].r;
    return {h[0] - 2 * r[0], h[1] - 2 * r[1], h[2] - 2 * r[2]};
}

std::array<int, 3> WeightedGraph::weight_tuple_down(int idx) const {
    auto h = highest_weights();
    const RankTriple& r = downs[idx].r;
    return {h[0] - 2 * r[0], h[1] - 2 * r[1], h[2] - 2 * r[2]};
}

namespace {

const Laurent kUnit = Laurent::constant(Var::q, BigRat(1));

RankTriple up_at(const BoxDims& box, int x, int y) {
    return {x, y, static_cast<int>(box.d()) - 1 - x - y};
}

// Every subgraph of interest is cut out of the full triangle set by a
// membership predicate on rank triples.
WeightedGraph build_subgraph(GraphClass cls, const BoxDims& box,
                             const std::function<bool(const RankTriple&)>& keep) {
    WeightedGraph g;
    g.cls = cls;
    g.box = box;
    const long d = box.d();

    std::vector<RankTriple> ups, downs;
    for (int x = 0; x < box.chat(); ++x)
        for (int y = 0; y < box.bhat(); ++y) {
            RankTriple u = {x, y, static_cast<int>(d) - 1 - x - y};
            if (u[2] >= 0 && u[2] < box.ahat() && keep(u)) ups.push_back(u);
            RankTriple w = {x, y, static_cast<int>(d) - 2 - x - y};
            if (w[2] >= 0 && w[2] < box.ahat() && keep(w)) downs.push_back(w);
        }
    std::sort(ups.begin(), ups.end(), rank_before);
    std::sort(downs.begin(), downs.end(), rank_before);
    for (const auto& r : ups) {
        g.up_index[r] = g.n_up();
        g.ups.push_back({r});
    }
    for (const auto& r : downs) {
        g.down_index[r] = g.n_down();
        g.downs.push_back({r});
    }

    g.up_inc.resize(g.ups.size());
    g.down_inc.resize(g.downs.size());
    for (int ui = 0; ui < g.n_up(); ++ui) {
        RankTriple r = g.ups[ui].r;
        for (int f = 0; f < 3; ++f) {
            if (r[f] == 0) continue;
            RankTriple t = r;
            --t[f];
            auto it = g.down_index.find(t);
            if (it == g.down_index.end()) continue;
            GraphEdge e;
            e.up_v = ui;
            e.down_v = it->second;
            e.dir = f;
            e.up_rep = r;
            e.weight = kUnit;
            int id = static_cast<int>(g.edges.size());
            g.edges.push_back(e);
            g.up_inc[ui].push_back(id);
            g.down_inc[it->second].push_back(id);
        }
    }

    // Faces sit around interior lattice points (p,q); the fixed 6-cycle below
    // alternates up/down with consecutive triangles sharing an edge.
    for (int p = 1; p <= box.chat() - 1; ++p)
        for (int q = 1; q <= box.bhat() - 1; ++q) {
            if (p + q < box.a + 1 || p + q > d - 1) continue;
            std::array<std::pair<RankTriple, int>, 6> cyc = {{
                {up_at(box, p, q), 1},
                {up_at(box, p, q - 1), 2},
                {up_at(box, p, q - 1), 0},
                {up_at(box, p - 1, q), 1},
                {up_at(box, p - 1, q), 2},
                {up_at(box, p, q), 0},
            }};
            Face face;
            bool ok = true;
            for (const auto& [u, f] : cyc) {
                auto it = g.up_index.find(u);
                if (it == g.up_index.end()) {
                    ok = false;
                    break;
                }
                int found = -1;
                for (int id : g.up_inc[it->second])
                    if (g.edges[id].dir == f) {
                        found = id;
                        break;
                    }
                if (found < 0) {
                    ok = false;
                    break;
                }
                face.edge_ids.push_back(found);
            }
            if (ok) g.faces.push_back(face);
        }
    return g;
}

RankTriple rotate(const RankTriple& r) { return {r[2], r[0], r[1]}; }
RankTriple swap12(const RankTriple& r) { return {r[0], r[2], r[1]}; }

}  // namespace

WeightedGraph build_hexagon(const BoxDims& dims) {
    return build_subgraph(GraphClass::pp, dims, [](const RankTriple&) { return true; });
}

WeightedGraph build_tcpp_graph(long a, long b) {
    if (a < 1 || b < 1) throw UsageError("tcpp graph needs a,b >= 1");
    BoxDims box(a, a, 2 * b);
    return build_subgraph(GraphClass::tcpp, box,
                          [](const RankTriple& r) { return r[1] > r[2]; });
}

WeightedGraph build_cstcpp_graph(long a) {
    if (a < 1) throw UsageError("cstcpp graph needs a >= 1");
    BoxDims box(2 * a, 2 * a, 2 * a);
    return build_subgraph(GraphClass::cstcpp, box,
                          [](const RankTriple& r) { return r[0] > r[1] && r[1] > r[2]; });
}

WeightedGraph build_cspp_graph(long a) {
    if (a < 1) throw UsageError("cspp graph needs a >= 1");
    BoxDims box(a, a, a);
    WeightedGraph full = build_hexagon(box);

    WeightedGraph g;
    g.cls = GraphClass::cspp;
    g.box = box;

    auto orbit_rep = [](RankTriple r) {
        RankTriple best = r;
        for (int j = 0; j < 2; ++j) {
            r = rotate(r);
            if (rank_before(r, best)) best = r;
        }
        return best;
    };

    std::vector<RankTriple> ups, downs;
    for (const auto& v : full.ups)
        if (orbit_rep(v.r) == v.r) ups.push_back(v.r);
    for (const auto& v : full.downs)
        if (orbit_rep(v.r) == v.r) downs.push_back(v.r);
    std::sort(ups.begin(), ups.end(), rank_before);
    std::sort(downs.begin(), downs.end(), rank_before);
    for (const auto& r : ups) {
        g.up_index[r] = g.n_up();
        g.ups.push_back({r});
    }
    for (const auto& r : downs) {
        g.down_index[r] = g.n_down();
        g.downs.push_back({r});
    }
    g.up_inc.resize(g.ups.size());
    g.down_inc.resize(g.downs.size());

    // Edge orbits, anchored at the canonical up representative.  The rotation
    // carries (T, dir) to (rot T, dir+1), so each orbit has exactly one lift
    // at the representative; parallel quotient edges differ in dir.
    std::set<std::pair<RankTriple, int>> seen;
    for (const auto& e : full.edges) {
        RankTriple t = full.ups[e.up_v].r;
        int f = e.dir;
        while (orbit_rep(t) != t) {
            t = rotate(t);
            f = (f + 1) % 3;
        }
        if (!seen.insert({t, f}).second) continue;
        RankTriple down = t;
        --down[f];
        GraphEdge qe;
        qe.up_v = g.up_index.at(t);
        qe.down_v = g.down_index.at(orbit_rep(down));
        qe.dir = f;
        qe.up_rep = t;
        qe.weight = kUnit;
        int id = static_cast<int>(g.edges.size());
        g.edges.push_back(qe);
        g.up_inc[qe.up_v].push_back(id);
        g.down_inc[qe.down_v].push_back(id);
    }

    // Face orbits: the rotation acts on interior points as
    // (p,q) -> (d-p-q, p); the unique fixed point (a,a) yields the 2-gon.
    auto rot_pt = [&](std::pair<int, int> v) {
        return std::pair<int, int>{static_cast<int>(box.d()) - v.first - v.second, v.first};
    };
    auto face_center = [&](const Face& face) {
        // recover (p,q) from the first edge: it is (up(p,q), dir 1)
        const GraphEdge& e0 = full.edges[face.edge_ids[0]];
        RankTriple r = full.ups[e0.up_v].r;
        return std::pair<int, int>{r[0], r[1]};
    };
    auto quotient_edge_id = [&](RankTriple t, int f) {
        while (orbit_rep(t) != t) {
            t = rotate(t);
            f = (f + 1) % 3;
        }
        for (int id : g.up_inc[g.up_index.at(t)])
            if (g.edges[id].dir == f && g.edges[id].up_rep == t) return id;
        throw InvariantError("cspp quotient edge lookup failed");
    };

    std::set<std::pair<int, int>> face_seen;
    for (const auto& face : full.faces) {
        auto v = face_center(face);
        auto rep = v;
        for (auto w = rot_pt(v); w != v; w = rot_pt(w))
            if (w > rep) rep = w;
        if (face_seen.count(rep)) continue;
        face_seen.insert(rep);

        bool central = rot_pt(v) == v;
        Face qf;
        qf.two_gon = central;
        int take = central ? 2 : 6;
        for (int k = 0; k < take; ++k) {
            const GraphEdge& e = full.edges[face.edge_ids[k]];
            qf.edge_ids.push_back(quotient_edge_id(full.ups[e.up_v].r, e.dir));
        }
        if (central)
            require_invariant(qf.edge_ids[0] != qf.edge_ids[1],
                              "cspp central face did not fold to a 2-gon");
        g.faces.push_back(qf);
    }
    return g;
}

SymmetryPerm apply_symmetry(const WeightedGraph& g, Symmetry s) {
    if (g.cls != GraphClass::pp) throw UsageError("symmetries act on the full hexagon graph");
    const BoxDims& box = g.box;
    if (s == Symmetry::rho && !(box.a == box.b && box.b == box.c))
        throw UsageError("rotation symmetry needs a cube");
    if (s == Symmetry::kappa_tau && box.a != box.b)
        throw UsageError("transpose-complement symmetry needs a = b");

    auto act = [&](const RankTriple& r) { return s == Symmetry::rho ? rotate(r) : swap12(r); };
    auto act_dir = [&](int f) {
        if (s == Symmetry::rho) return (f + 1) % 3;
        return f == 0 ? 0 : 3 - f;
    };

    SymmetryPerm perm;
    perm.order = s == Symmetry::rho ? 3 : 2;
    perm.up_map.resize(g.ups.size());
    perm.down_map.resize(g.downs.size());
    perm.edge_map.resize(g.edges.size());
    for (int i = 0; i < g.n_up(); ++i) perm.up_map[i] = g.up_index.at(act(g.ups[i].r));
    for (int i = 0; i < g.n_down(); ++i) perm.down_map[i] = g.down_index.at(act(g.downs[i].r));
    for (size_t i = 0; i < g.edges.size(); ++i) {
        const GraphEdge& e = g.edges[i];
        RankTriple t = act(g.ups[e.up_v].r);
        int f = act_dir(e.dir);
        int target = -1;
        for (int id : g.up_inc[g.up_index.at(t)])
            if (g.edges[id].dir == f) target = id;
        require_invariant(target >= 0, "symmetry does not commute with adjacency");
        perm.edge_map[i] = target;
    }
    return perm;
}

long matching_budget_from_env() {
    if (const char* s = std::getenv("PPBOX_MATCHING_BUDGET")) {
        long v = std::atol(s);
        if (v > 0) return v;
    }
    return 40;
}

namespace {

struct MatchState {
    const WeightedGraph& g;
    std::vector<int> up_match, down_match;
    Matching current;
    long count = 0;
    const std::function<void(const Matching&)>& sink;

    explicit MatchState(const WeightedGraph& gg, const std::function<void(const Matching&)>& s)
        : g(gg), up_match(gg.ups.size(), -1), down_match(gg.downs.size(), -1), sink(s) {}

    int pick_up() const {
        int best = -1, best_deg = 1 << 30;
        for (int u = 0; u < g.n_up(); ++u) {
            if (up_match[u] >= 0) continue;
            int deg = 0;
            for (int id : g.up_inc[u])
                if (down_match[g.edges[id].down_v] < 0) ++deg;
            if (deg < best_deg) {
                best_deg = deg;
                best = u;
                if (deg <= 1) break;
            }
        }
        return best;
    }

    bool run(bool stop_at_first) {
        int u = pick_up();
        if (u < 0) {
            ++count;
            if (sink) sink(current);
            return true;
        }
        for (int id : g.up_inc[u]) {
            int w = g.edges[id].down_v;
            if (down_match[w] >= 0) continue;
            up_match[u] = id;
            down_match[w] = id;
            current.push_back(id);
            bool found = run(stop_at_first);
            current.pop_back();
            up_match[u] = -1;
            down_match[w] = -1;
            if (stop_at_first && found) return true;
        }
        return false;
    }
};

}  // namespace

long enumerate_matchings(const WeightedGraph& g, long max_ups,
                         const std::function<void(const Matching&)>& sink) {
    if (g.n_up() > max_ups)
        throw BudgetError("matching enumeration refused: " + std::to_string(g.n_up()) +
                          " up-triangles exceeds budget " + std::to_string(max_ups));
    if (g.n_up() != g.n_down()) return 0;
    MatchState st(g, sink);
    st.run(false);
    return st.count;
}

long count_matchings(const WeightedGraph& g, long max_ups) {
    static const std::function<void(const Matching&)> none;
    return enumerate_matchings(g, max_ups, none);
}

Matching first_matching(const WeightedGraph& g) {
    require_invariant(g.n_up() == g.n_down(), "unbalanced graph has no perfect matching");
    Matching out;
    std::function<void(const Matching&)> grab = [&](const Matching& m) { out = m; };
    MatchState st(g, grab);
    bool found = st.run(true);
    require_invariant(found, "graph has no perfect matching");
    return out;
}

Laurent matching_weight(const WeightedGraph& g, const Matching& m) {
    Laurent w = Laurent::constant(Var::q, BigRat(1));
    for (int id : m) w *= g.edges[id].weight;
    return w;
}

std::string CurvatureRatio::str() const {
    Laurent q(Var::q);
    if (!den.is_zero() && num.divide_exact(den, q)) return q.str();
    return num.str() + " / " + den.str();
}

bool CurvatureRatio::equals_monomial(long qexp) const {
    return num == den.shifted(qexp);
}

CurvatureRatio kasteleyn_curvature(const WeightedGraph& g, const Face& f) {
    CurvatureRatio r{Laurent::constant(Var::q, BigRat(1)), Laurent::constant(Var::q, BigRat(1))};
    for (size_t i = 0; i < f.edge_ids.size(); ++i) {
        const Laurent& w = g.edges[f.edge_ids[i]].weight;
        require_invariant(!w.is_zero(), "zero weight on a face edge");
        if (i % 2 == 0)
            r.num *= w;
        else
            r.den *= w;
    }
    return r;
}

}  // namespace ppbox
