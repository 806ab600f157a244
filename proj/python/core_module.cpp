#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "strongclique/cliques.hpp"
#include "strongclique/errors.hpp"
#include "strongclique/generators.hpp"
#include "strongclique/graph.hpp"
#include "strongclique/graph_id.hpp"
#include "strongclique/graph_io.hpp"
#include "strongclique/perm_group.hpp"
#include "strongclique/strong.hpp"
#include "strongclique/verify.hpp"

namespace py = pybind11;
using namespace strongclique;

namespace {

std::vector<int> to_list(const VertexSet& s) { return {s.begin(), s.end()}; }

std::vector<std::vector<int>> to_lists(const std::vector<VertexSet>& sets) {
  std::vector<std::vector<int>> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(to_list(s));
  return out;
}

Symmetry hint_for(bool vertex_transitive) {
  return vertex_transitive ? Symmetry::vertex_transitive : Symmetry::unknown;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Strong cliques in vertex-transitive graphs";

  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<CapacityExceeded>(m, "CapacityExceeded", PyExc_OverflowError);
  py::register_exception<PreconditionFailed>(m, "PreconditionFailed", PyExc_ValueError);
  py::register_exception<MethodMismatch>(m, "MethodMismatch", PyExc_AssertionError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }),
           py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("neighbors", [](const Graph& g, Vertex v) {
        require_vertex(g, v);
        const auto span = g.neighbors(v);
        return std::vector<Vertex>(span.begin(), span.end());
      })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "<Graph " + to_graph6(g) + ">"; });

  m.def("build_graph", &build_graph, py::arg("id"));
  m.def("from_graph6", &from_graph6);
  m.def("to_graph6", &to_graph6);
  m.def("from_dimacs", &from_dimacs);
  m.def("to_dimacs", &to_dimacs);

  m.def("complement", &complement);
  m.def("line_graph", &line_graph);
  m.def("cartesian_product", &cartesian_product);
  m.def("lexicographic_product", &lexicographic_product);
  m.def("local_graph", &local_graph);
  m.def("valency", &valency);
  m.def("is_connected", &is_connected);

  m.def("is_vertex_transitive", &is_vertex_transitive);
  m.def("automorphism_group_order", [](const Graph& g) { return automorphisms(g).order(); });
  m.def("are_isomorphic", [](const Graph& a, const Graph& b) { return are_isomorphic(a, b); });

  m.def("maximal_cliques", [](const Graph& g) { return to_lists(maximal_cliques(g)); });
  m.def("maximal_independent_sets", [](const Graph& g) { return to_lists(maximal_independent_sets(g)); });
  m.def("clique_number", &clique_number);
  m.def("independence_number", &independence_number);
  m.def("chromatic_number", &chromatic_number);
  m.def("clique_cover_number", &clique_cover_number);

  m.def(
      "is_strong_clique",
      [](const Graph& g, const std::vector<Vertex>& c) {
        const StrongVerdict v = is_strong_clique(g, VertexSet(c));
        std::optional<std::vector<int>> witness;
        if (v.witness) witness = to_list(*v.witness);
        return py::make_tuple(v.is_strong, witness);
      },
      "Returns (is_strong, witness); the witness is a maximal independent set missing the clique.");
  m.def(
      "has_strong_clique",
      [](const Graph& g, bool vt) -> std::optional<std::vector<int>> {
        auto c = has_strong_clique(g, hint_for(vt));
        if (!c) return std::nullopt;
        return to_list(*c);
      },
      py::arg("g"), py::arg("vertex_transitive") = false);
  m.def("is_well_covered", &is_well_covered);
  m.def(
      "is_cis", [](const Graph& g, bool vt) { return is_cis(g, hint_for(vt)); }, py::arg("g"),
      py::arg("vertex_transitive") = false);
  m.def(
      "is_localizable",
      [](const Graph& g, bool vt) -> std::optional<std::vector<std::vector<int>>> {
        auto p = is_localizable(g, hint_for(vt));
        if (!p) return std::nullopt;
        return to_lists(*p);
      },
      py::arg("g"), py::arg("vertex_transitive") = false);

  m.def("analyze_json", [](const std::string& id, const Graph& g) { return to_json_line(analyze(id, g)); },
        py::arg("id"), py::arg("g"), py::call_guard<py::gil_scoped_release>());
  m.def("suite_ids", &suite_ids);
  m.def(
      "verify",
      [](const std::string& suite, std::optional<int> corpus_max) {
        SuiteResult r;
        {
          py::gil_scoped_release release;
          r = verify_theorem(suite, corpus_max);
        }
        std::ostringstream reports;
        report_emit(r.reports, reports);
        py::dict out;
        out["suite"] = r.suite;
        out["passed"] = r.passed;
        out["failures"] = r.failures;
        out["notes"] = r.notes;
        out["reports"] = reports.str();
        return out;
      },
      py::arg("suite"), py::arg("corpus_max") = std::nullopt);
}
