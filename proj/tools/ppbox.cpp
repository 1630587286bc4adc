// ppbox: exact enumeration of plane partitions in a box and of the three
// determinantal symmetry classes, by independent routes that must agree:
// Kasteleyn-style determinants of weight-graded tensor blocks, closed product
// formulas, and a brute-force oracle.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ppbox/jsonio.hpp"
#include "ppbox/kasteleyn.hpp"
#include "ppbox/render.hpp"

using namespace ppbox;
using nlohmann::json;

namespace {

struct CountOptions {
    std::string cls;
    long a = 0, b = 0, c = 0;
    std::string route = "all";
    bool as_json = false;
};

std::vector<CountResult> run_routes(GraphClass cls, const BoxDims& dims, RepMode mode,
                                    const std::string& route) {
    std::vector<CountResult> out;
    bool all = route == "all";
    if (all || route == "det") out.push_back(count_via_determinant(cls, dims, mode));
    if ((all && cls != GraphClass::cstcpp) || route == "formula")
        out.push_back(count_via_formula(cls, dims, mode));
    if (all || route == "oracle")
        out.push_back(count_via_oracle(cls, dims, mode, oracle_budget_from_env()));
    return out;
}

void report_counts(const std::vector<CountResult>& results, bool as_json) {
    if (as_json) {
        std::cout << routes_to_json(results).dump(2) << "\n";
    } else {
        for (const auto& r : results) std::cout << r.route << ": " << r.value_str() << "\n";
    }
    for (const auto& r : results)
        require_invariant(r.value_str() == results.front().value_str(),
                          "routes disagree for " + class_name(results.front().cls));
    if (!as_json && results.size() > 1) std::cout << "routes agree\n";
}

int cmd_count(const CountOptions& opt, bool quantum) {
    GraphClass cls = quantum ? GraphClass::pp : class_from_name(opt.cls);
    BoxDims dims(opt.a, opt.b, opt.c);
    check_class_dims(cls, dims);
    RepMode mode = quantum ? RepMode::quantum : RepMode::classical;
    report_counts(run_routes(cls, dims, mode, opt.route), opt.as_json);
    return 0;
}

long checked_long(const std::string& s) {
    try {
        size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError("not an integer: '" + s + "'");
    }
}

struct VerifyStats {
    long checks = 0;
    long failures = 0;
    json details = json::array();

    void record(const std::string& what, bool ok, const std::string& extra = "") {
        ++checks;
        if (!ok) ++failures;
        details.push_back({{"check", what}, {"ok", ok}, {"info", extra}});
        std::cout << (ok ? "ok   " : "FAIL ") << what << (extra.empty() ? "" : " " + extra)
                  << "\n";
    }
};

void verify_box(const BoxDims& dims, long qmax, long oracle_budget, long match_budget,
                VerifyStats& stats) {
    std::string tag = std::to_string(dims.a) + "x" + std::to_string(dims.b) + "x" +
                      std::to_string(dims.c);

    // route agreement, classical
    {
        BigInt det = count_via_determinant(GraphClass::pp, dims, RepMode::classical).value;
        BigInt formula = count_pp_formula(dims);
        bool ok = det == formula;
        if (dims.volume() <= oracle_budget)
            ok = ok && det == count_pp_oracle(dims, PPFilter::none, oracle_budget);
        stats.record("pp routes " + tag, ok, det.get_str());
    }

    // flatness, both modes
    {
        WeightedGraph g = weighted_graph(GraphClass::pp, dims, RepMode::classical);
        stats.record("flat classical " + tag, verify_flatness(g, RepMode::classical).all_ok);
        WeightedGraph gq = weighted_graph(GraphClass::pp, dims, RepMode::quantum);
        stats.record("flat quantum " + tag, verify_flatness(gq, RepMode::quantum).all_ok);
        if (g.n_up() <= match_budget) {
            TermReport rep = verify_term_equality(g, match_budget);
            bool ok = rep.all_equal &&
                      abs(rep.common.coeff(0).get_num()) ==
                          normalization(GraphClass::pp, dims, RepMode::classical).as_integer();
            stats.record("terms equal " + tag, ok,
                         std::to_string(rep.matchings) + " matchings");
        }
    }

    // composed-block determinant through the character map
    stats.record("D-map determinant " + tag,
                 determinant_via_dmap(dims) > 0);  // the function cross-checks internally

    // q-routes
    if (dims.a <= qmax && dims.b <= qmax && dims.c <= qmax) {
        Laurent det = count_via_determinant(GraphClass::pp, dims, RepMode::quantum).value_q;
        bool ok = det == count_pp_formula_q(dims);
        if (dims.volume() <= oracle_budget) ok = ok && det == qsum_pp_oracle(dims, oracle_budget);
        stats.record("pp q-routes " + tag, ok);
    }
}

void verify_symmetry_classes(long max, long oracle_budget, const std::string& which,
                             VerifyStats& stats) {
    bool all = which == "all";
    if (all || which == "tcpp")
    for (long a = 1; a <= max; ++a)
        for (long b = 1; 2 * b <= max; ++b) {
            BoxDims box(a, a, 2 * b);
            BigInt det = count_via_determinant(GraphClass::tcpp, box, RepMode::classical).value;
            bool ok = det == count_tcpp_formula(a, b);
            if (box.volume() <= oracle_budget)
                ok = ok && det == count_pp_oracle(box, PPFilter::kappa_tau, oracle_budget);
            stats.record("tcpp routes " + std::to_string(a) + "," + std::to_string(b), ok,
                         det.get_str());
        }
    if (all || which == "cspp")
    for (long a = 1; a <= max; ++a) {
        BoxDims box(a, a, a);
        BigInt det = count_via_determinant(GraphClass::cspp, box, RepMode::classical).value;
        bool ok = det == count_cspp_formula(a);
        if (box.volume() <= oracle_budget)
            ok = ok && det == count_pp_oracle(box, PPFilter::rho, oracle_budget);
        stats.record("cspp routes " + std::to_string(a), ok, det.get_str());
    }
    if (all || which == "cstcpp")
    for (long a = 1; 2 * a <= max; ++a) {
        BoxDims box(2 * a, 2 * a, 2 * a);
        BigInt det = count_via_determinant(GraphClass::cstcpp, box, RepMode::classical).value;
        bool ok = true;
        std::string note = det.get_str();
        if (box.volume() <= oracle_budget)
            ok = det == count_pp_oracle(box, PPFilter::rho_kappa_tau, oracle_budget);
        else
            note += " (oracle skipped)";
        stats.record("cstcpp routes " + std::to_string(a), ok, note);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact plane-partition enumeration in a box: determinant, product-formula, "
        "and brute-force routes that must agree"};
    app.require_subcommand(1);

    CountOptions copt;
    auto* count = app.add_subcommand("count", "count a symmetry class of plane partitions");
    count->add_option("class", copt.cls, "pp | tcpp | cspp | cstcpp")->required();
    count->add_option("a", copt.a)->required();
    count->add_option("b", copt.b)->required();
    count->add_option("c", copt.c)->required();
    count->add_option("--route", copt.route, "det | formula | oracle | all")
        ->check(CLI::IsMember({"det", "formula", "oracle", "all"}));
    count->add_flag("--json", copt.as_json);

    CountOptions qopt;
    auto* qcount = app.add_subcommand("qcount", "q-count plane partitions by cube number");
    qcount->add_option("a", qopt.a)->required();
    qcount->add_option("b", qopt.b)->required();
    qcount->add_option("c", qopt.c)->required();
    qcount->add_option("--route", qopt.route, "det | formula | oracle | all")
        ->check(CLI::IsMember({"det", "formula", "oracle", "all"}));
    qcount->add_flag("--json", qopt.as_json);

    std::string mkind, mmode = "classical", mformat = "json", mfactors;
    long mslice = -1;
    std::string mgen = "X";
    std::vector<std::string> mdims;
    auto* matrix = app.add_subcommand("matrix", "dump a weight-graded matrix block");
    matrix->add_option("kind", mkind, "pp | tcpp | cspp | cstcpp | tensor")->required();
    matrix->add_option("dims", mdims, "a b c (box classes only)")->expected(0, 3);
    matrix->add_option("--mode", mmode)->check(CLI::IsMember({"classical", "quantum"}));
    matrix->add_option("--format", mformat)->check(CLI::IsMember({"json", "csv"}));
    matrix->add_option("--factors", mfactors, "comma list of highest weights (tensor)");
    matrix->add_option("--slice", mslice, "weight slice (tensor; default -1)");
    matrix->add_option("--gen", mgen)->check(CLI::IsMember({"X", "Y"}));

    long vmax = 3, vqmax = 2;
    bool vperturb = false, vjson = false;
    std::string vclass = "all";
    auto* verify = app.add_subcommand("verify", "run the full invariant sweep");
    verify->add_option("--max", vmax, "largest box side");
    verify->add_option("--qmax", vqmax, "largest box side for q-routes");
    verify->add_option("--class", vclass)
        ->check(CLI::IsMember({"all", "pp", "tcpp", "cspp", "cstcpp"}));
    verify->add_flag("--perturb", vperturb, "inject a broken weight (negative control)");
    verify->add_flag("--json", vjson);

    std::string gclass = "pp", gweights = "classical";
    long ga = 1, gb = 1, gc = 1;
    auto* graph = app.add_subcommand("graph", "dump a graph as JSON");
    graph->add_option("class", gclass, "pp | tcpp | cspp | cstcpp")->required();
    graph->add_option("a", ga)->required();
    graph->add_option("b", gb)->required();
    graph->add_option("c", gc)->required();
    graph->add_option("--weights", gweights)
        ->check(CLI::IsMember({"unit", "classical", "quantum"}));

    long ra = 1, rb = 1, rc = 1;
    std::optional<long> rindex, rseed;
    bool rempty = false, rfull = false;
    std::string routfile;
    auto* render = app.add_subcommand("render", "render one lozenge tiling as SVG");
    render->add_option("a", ra)->required();
    render->add_option("b", rb)->required();
    render->add_option("c", rc)->required();
    auto* oidx = render->add_option("--index", rindex, "k-th matching in enumeration order");
    auto* oseed = render->add_option("--seed", rseed, "seeded pick of a matching");
    auto* oempty = render->add_flag("--empty", rempty, "tiling of the empty partition");
    auto* ofull = render->add_flag("--full", rfull, "tiling of the full box");
    oidx->excludes(oseed)->excludes(oempty)->excludes(ofull);
    oseed->excludes(oempty)->excludes(ofull);
    oempty->excludes(ofull);
    render->add_option("-o,--output", routfile, "output file (default stdout)");

    count->callback([&] { cmd_count(copt, false); });
    qcount->callback([&] {
        qopt.cls = "pp";
        cmd_count(qopt, true);
    });

    matrix->callback([&] {
        std::ostringstream out;
        if (mkind == "tensor") {
            if (mfactors.empty()) throw UsageError("matrix tensor needs --factors");
            std::vector<int> factors;
            std::stringstream ss(mfactors);
            std::string tok;
            while (std::getline(ss, tok, ','))
                factors.push_back(static_cast<int>(checked_long(tok)));
            Generator gen = mgen == "X" ? Generator::X : Generator::Y;
            if (mmode == "quantum") {
                auto gens = tensor_generators_quantum(factors);
                auto blk = slice_block(gens, gen, static_cast<int>(mslice),
                                       trivial_action(gens.basis));
                out << (mformat == "csv" ? block_to_csv(blk) : block_to_json(blk).dump(2) + "\n");
            } else {
                auto gens = tensor_generators_classical(factors);
                auto blk = slice_block(gens, gen, static_cast<int>(mslice),
                                       trivial_action(gens.basis));
                out << (mformat == "csv" ? block_to_csv(blk) : block_to_json(blk).dump(2) + "\n");
            }
        } else {
            GraphClass cls = class_from_name(mkind);
            if (mdims.size() != 3) throw UsageError("matrix " + mkind + " needs a b c");
            BoxDims dims(checked_long(mdims[0]), checked_long(mdims[1]), checked_long(mdims[2]));
            check_class_dims(cls, dims);
            if (mmode == "quantum") {
                if (cls != GraphClass::pp) throw UsageError("quantum matrices exist for pp only");
                auto blk = pp_matrix_quantum(dims);
                out << (mformat == "csv" ? block_to_csv(blk) : block_to_json(blk).dump(2) + "\n");
            } else {
                SlicedBlock<BigInt> blk;
                switch (cls) {
                    case GraphClass::pp: blk = pp_matrix_classical(dims); break;
                    case GraphClass::tcpp: blk = tcpp_matrix(dims.a, dims.c / 2); break;
                    case GraphClass::cspp: blk = cspp_matrix(dims.a); break;
                    case GraphClass::cstcpp: blk = cstcpp_matrix(dims.a / 2); break;
                }
                out << (mformat == "csv" ? block_to_csv(blk) : block_to_json(blk).dump(2) + "\n");
            }
        }
        std::cout << out.str();
    });

    verify->callback([&] {
        VerifyStats stats;
        long oracle_budget = oracle_budget_from_env();
        long match_budget = matching_budget_from_env();

        if (vperturb) {
            WeightedGraph g = weighted_graph(GraphClass::pp, BoxDims(2, 2, 3), RepMode::classical);
            g.edges[3].weight = g.edges[3].weight.scaled(BigRat(7));
            FlatnessReport rep = verify_flatness(g, RepMode::classical);
            stats.record("perturbed weight is flagged", !rep.all_ok);
            require_invariant(!rep.all_ok, "perturbation went unnoticed");
            throw InvariantError("perturbed run is red by construction");
        }

        if (vclass == "all" || vclass == "pp")
            for (long a = 1; a <= vmax; ++a)
                for (long b = a; b <= vmax; ++b)
                    for (long c = b; c <= vmax; ++c)
                        verify_box(BoxDims(a, b, c), vqmax, oracle_budget, match_budget, stats);
        verify_symmetry_classes(vmax, oracle_budget, vclass == "pp" ? "none" : vclass, stats);

        if (vjson)
            std::cout << json{{"checks", stats.checks},
                              {"failures", stats.failures},
                              {"details", stats.details}}
                             .dump(2)
                      << "\n";
        else
            std::cout << stats.checks << " checks, " << stats.failures << " failures\n";
        require_invariant(stats.failures == 0, "verification sweep found failures");
    });

    graph->callback([&] {
        GraphClass cls = class_from_name(gclass);
        BoxDims dims(ga, gb, gc);
        check_class_dims(cls, dims);
        WeightedGraph g;
        if (gweights == "unit") {
            switch (cls) {
                case GraphClass::pp: g = build_hexagon(dims); break;
                case GraphClass::tcpp: g = build_tcpp_graph(dims.a, dims.c / 2); break;
                case GraphClass::cspp: g = build_cspp_graph(dims.a); break;
                case GraphClass::cstcpp: g = build_cstcpp_graph(dims.a / 2); break;
            }
        } else {
            g = weighted_graph(cls, dims,
                               gweights == "quantum" ? RepMode::quantum : RepMode::classical);
        }
        std::cout << graph_to_json(g).dump(2) << "\n";
    });

    render->callback([&] {
        BoxDims dims(ra, rb, rc);
        WeightedGraph g = build_hexagon(dims);
        Matching chosen;
        if (rempty || rfull || (!rindex && !rseed)) {
            PlanePartition p = rfull ? PlanePartition::full_box(dims)
                                     : PlanePartition::empty_box(dims);
            chosen = pp_to_matching(p, g);
        } else {
            long budget = matching_budget_from_env();
            long total = count_matchings(g, budget);
            long want = rindex ? *rindex : 0;
            if (rseed) want = ((*rseed % total) + total) % total;
            if (want < 0 || want >= total)
                throw UsageError("index " + std::to_string(want) + " out of range (0.." +
                                 std::to_string(total - 1) + ")");
            long at = 0;
            enumerate_matchings(g, budget, [&](const Matching& m) {
                if (at++ == want) chosen = m;
            });
        }
        std::string svg = render_matching_svg(g, chosen);
        if (routfile.empty()) {
            std::cout << svg;
        } else {
            std::ofstream f(routfile);
            if (!f) throw UsageError("cannot open output file " + routfile);
            f << svg;
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "budget refusal: " << e.what() << "\n";
        return 3;
    } catch (const InvariantError& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
