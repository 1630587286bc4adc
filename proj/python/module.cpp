// Python bindings over the counting engine: exact values cross the boundary
// as canonical decimal / polynomial strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ppbox/jsonio.hpp"
#include "ppbox/kasteleyn.hpp"
#include "ppbox/oracle.hpp"
#include "ppbox/render.hpp"

namespace py = pybind11;
using namespace ppbox;

namespace {

CountResult run_one(const std::string& cls, long a, long b, long c, const std::string& route,
                    bool quantum) {
    GraphClass gc = class_from_name(cls);
    BoxDims dims(a, b, c);
    RepMode mode = quantum ? RepMode::quantum : RepMode::classical;
    if (route == "det") return count_via_determinant(gc, dims, mode);
    if (route == "formula") return count_via_formula(gc, dims, mode);
    if (route == "oracle") return count_via_oracle(gc, dims, mode, oracle_budget_from_env());
    throw UsageError("route must be det | formula | oracle");
}

std::string count_str(const std::string& cls, long a, long b, long c, const std::string& route) {
    return run_one(cls, a, b, c, route, false).value_str();
}

std::string qcount_str(long a, long b, long c, const std::string& route) {
    return run_one("pp", a, b, c, route, true).value_str();
}

std::string matrix_json(const std::string& cls, long a, long b, long c,
                        const std::string& mode) {
    GraphClass gc = class_from_name(cls);
    BoxDims dims(a, b, c);
    check_class_dims(gc, dims);
    if (mode == "quantum") {
        if (gc != GraphClass::pp) throw UsageError("quantum matrices exist for pp only");
        return block_to_json(pp_matrix_quantum(dims)).dump();
    }
    SlicedBlock<BigInt> blk;
    switch (gc) {
        case GraphClass::pp: blk = pp_matrix_classical(dims); break;
        case GraphClass::tcpp: blk = tcpp_matrix(dims.a, dims.c / 2); break;
        case GraphClass::cspp: blk = cspp_matrix(dims.a); break;
        case GraphClass::cstcpp: blk = cstcpp_matrix(dims.a / 2); break;
    }
    return block_to_json(blk).dump();
}

std::string graph_json_str(const std::string& cls, long a, long b, long c) {
    GraphClass gc = class_from_name(cls);
    BoxDims dims(a, b, c);
    return graph_to_json(weighted_graph(gc, dims, RepMode::classical)).dump();
}

std::string render_svg(long a, long b, long c, long index) {
    BoxDims dims(a, b, c);
    WeightedGraph g = build_hexagon(dims);
    long budget = matching_budget_from_env();
    long total = count_matchings(g, budget);
    if (index < 0 || index >= total) throw UsageError("tiling index out of range");
    Matching chosen;
    long at = 0;
    enumerate_matchings(g, budget, [&](const Matching& m) {
        if (at++ == index) chosen = m;
    });
    return render_matching_svg(g, chosen);
}

bool routes_agree(const std::string& cls, long a, long b, long c) {
    GraphClass gc = class_from_name(cls);
    BoxDims dims(a, b, c);
    BigInt det = count_via_determinant(gc, dims, RepMode::classical).value;
    BigInt oracle =
        count_via_oracle(gc, dims, RepMode::classical, oracle_budget_from_env()).value;
    bool ok = det == oracle;
    if (gc != GraphClass::cstcpp)
        ok = ok && det == count_via_formula(gc, dims, RepMode::classical).value;
    return ok;
}

}  // namespace

PYBIND11_MODULE(ppbox, m) {
    m.doc() = "exact plane-partition enumeration in a box (determinant, formula, oracle routes)";

    py::register_exception<UsageError>(m, "PPBoxUsageError", PyExc_ValueError);
    py::register_exception<BudgetError>(m, "PPBoxBudgetError", PyExc_RuntimeError);
    py::register_exception<InvariantError>(m, "PPBoxInvariantError", PyExc_RuntimeError);

    m.def("count", &count_str, py::arg("cls"), py::arg("a"), py::arg("b"), py::arg("c"),
          py::arg("route") = "formula",
          "exact count of a symmetry class (pp|tcpp|cspp|cstcpp) as a decimal string");
    m.def("qcount", &qcount_str, py::arg("a"), py::arg("b"), py::arg("c"),
          py::arg("route") = "formula", "q-count of plane partitions as a polynomial string");
    m.def("matrix_json", &matrix_json, py::arg("cls"), py::arg("a"), py::arg("b"), py::arg("c"),
          py::arg("mode") = "classical", "labeled sparse dump of the sliced matrix");
    m.def("graph_json", &graph_json_str, py::arg("cls"), py::arg("a"), py::arg("b"),
          py::arg("c"), "weighted graph dump");
    m.def("render_svg", &render_svg, py::arg("a"), py::arg("b"), py::arg("c"),
          py::arg("index") = 0, "SVG of the index-th lozenge tiling");
    m.def("routes_agree", &routes_agree, py::arg("cls"), py::arg("a"), py::arg("b"),
          py::arg("c"), "determinant, formula and oracle routes agree");
}
