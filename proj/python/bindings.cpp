#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spdom/block_decomposition.hpp"
#include "spdom/errors.hpp"
#include "spdom/exact.hpp"
#include "spdom/reductions.hpp"
#include "spdom/semipaired.hpp"

namespace py = pybind11;
using namespace spdom;

namespace {

py::dict solution_dict(const SemipairedSolution& s) {
    py::dict d;
    d["vertices"] = std::vector<Vertex>(s.vertices.begin(), s.vertices.end());
    d["pairs"] = s.pairs;
    return d;
}

SemipairedSolution to_solution(const Graph& g, std::vector<Edge> pairs) {
    return SemipairedSolution::from_pairs(g.num_vertices(), std::move(pairs));
}

GadgetGraph make_gadget(const std::string& kind, const Graph& g) {
    if (kind == "gp4") return gp4(g);
    if (kind == "gp5") return gp5(g);
    if (kind == "split") return split_reduction(g);
    if (kind == "apx4") return apx_reduction(g);
    if (kind == "degsplit") return degree_split(g);
    throw py::value_error("unknown gadget kind " + kind);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Semipaired domination: block-graph solver, exact oracles, reduction gadgets";

    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](Vertex n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::num_vertices)
        .def_property_readonly("m", &Graph::num_edges)
        .def("edges", &Graph::edges)
        .def("neighbors", [](const Graph& g, Vertex v) {
            if (!g.contains(v)) throw py::index_error("vertex out of range");
            auto nb = g.neighbors(v);
            return std::vector<Vertex>(nb.begin(), nb.end());
        })
        .def("degree", [](const Graph& g, Vertex v) {
            if (!g.contains(v)) throw py::index_error("vertex out of range");
            return g.degree(v);
        })
        .def("has_edge", &Graph::has_edge)
        .def("to_edge_list", &emit_edge_list)
        .def_static("from_edge_list", &parse_edge_list, py::arg("text"))
        .def(py::self == py::self)
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.num_vertices()) + " m=" + std::to_string(g.num_edges()) + ">";
        });

    m.def("is_connected", &is_connected);
    m.def("is_block_graph", py::overload_cast<const Graph&>(&is_block_graph));
    m.def("is_split_graph", &is_split_graph);
    m.def("is_bipartite", &is_bipartite);

    m.def(
        "solve", [](const Graph& g) { return solution_dict(solve_block_graph(g)); },
        "Minimum semipaired dominating set of a connected block graph.");
    m.def(
        "trace", [](const Graph& g) { return format_trace(trace_block_graph(g)); },
        "Per-vertex trace of the block-graph sweep.");
    m.def(
        "verify",
        [](const Graph& g, std::vector<Edge> pairs, bool paired) {
            const auto s = to_solution(g, std::move(pairs));
            const auto v = paired ? verify_paired_solution(g, s) : verify_solution(g, s);
            return py::make_tuple(v.ok, v.diagnostic);
        },
        py::arg("g"), py::arg("pairs"), py::arg("paired") = false);

    m.def(
        "exact",
        [](const Graph& g, const std::string& problem, Vertex max_n, double time_limit) {
            const auto p = parse_problem(problem);
            if (!p) throw py::value_error("problem must be one of dom, pd, spd, vc");
            OracleBudget b;
            b.max_n = max_n;
            b.time_limit = std::chrono::milliseconds(static_cast<std::int64_t>(time_limit * 1000));
            const auto c = solve_exact(g, *p, b);
            py::dict d;
            d["vertices"] = std::vector<Vertex>(c.vertices.begin(), c.vertices.end());
            d["pairs"] = c.pairs;
            return d;
        },
        py::arg("g"), py::arg("problem"), py::arg("max_n") = OracleBudget{}.max_n, py::arg("time_limit") = 60.0,
        "Exhaustive minimum for dom, pd, spd or vc.");

    m.def(
        "gadget",
        [](const std::string& kind, const Graph& g) {
            const auto gg = make_gadget(kind, g);
            py::dict roles;
            for (const auto& r : gg.roles) roles[py::make_tuple(r.name, r.index)] = r.vertex;
            return py::make_tuple(gg.graph, roles);
        },
        py::arg("kind"), py::arg("g"), "Reduction graph and its role map {(name, index): vertex}.");

    m.def("random_block_graph", &random_block_graph, py::arg("seed"), py::arg("n"), py::arg("max_clique") = 4);
    m.def("random_bounded_degree_graph", &random_bounded_degree_graph, py::arg("seed"), py::arg("n"),
          py::arg("max_deg"));
}
