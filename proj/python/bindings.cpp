#include "irreg/canonical.hpp"
#include "irreg/enumeration.hpp"
#include "irreg/errors.hpp"
#include "irreg/generators.hpp"
#include "irreg/graph_io.hpp"
#include "irreg/measures.hpp"
#include "irreg/serialize.hpp"
#include "irreg/spectral.hpp"
#include "irreg/verifier.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace irreg;

namespace {

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(r));
}

// Report-style results go through the JSON serializer so both surfaces agree.
py::object from_json(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

PopulationKind parse_kind(const std::string& name) {
  if (name == "all") return PopulationKind::all;
  if (name == "trees") return PopulationKind::trees;
  if (name == "unicyclic") return PopulationKind::unicyclic;
  throw InputError("unknown population '" + name + "'");
}

py::dict measures_dict(const MeasureSet& ms) {
  py::dict d;
  d["m1"] = fraction(ms.m1);
  d["s"] = fraction(ms.s);
  d["var"] = fraction(ms.var);
  d["ird"] = fraction(ms.ird);
  d["irr"] = fraction(ms.irr);
  d["omega"] = ms.omega ? fraction(*ms.omega) : py::none();
  return d;
}

py::dict record_dict(const BoundRecord& r) {
  py::dict d;
  d["bound_id"] = r.bound_id;
  d["relation"] = to_string(r.relation);
  d["lhs"] = fraction(r.lhs);
  d["rhs"] = fraction(r.rhs);
  d["applicable"] = r.applicable;
  d["holds"] = r.holds;
  d["is_equality"] = r.is_equality;
  d["predicted_equality"] = r.predicted_equality;
  d["claim_ambiguous"] = r.claim_ambiguous;
  d["agreement"] = to_string(r.agreement);
  return d;
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> list;
  for (const auto& [u, v] : edges) list.push_back({u, v});
  return from_edge_list(n, list);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact degree-irregularity measures of simple graphs";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<CapabilityError>(m, "CapabilityError", PyExc_RuntimeError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
      .def_static("from_graph6", [](const std::string& s) { return from_graph6(s); })
      .def_static("from_edge_list_text", [](const std::string& s) { return parse_edge_list(s); })
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("degrees", &Graph::degrees)
      .def("neighbors", &Graph::neighbors)
      .def("adjacent", &Graph::adjacent)
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<int, int>> out;
             for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
             return out;
           })
      .def("to_graph6", [](const Graph& g) { return to_graph6(g); })
      .def("to_edge_list", [](const Graph& g) { return to_edge_list(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
      });

  m.def("path", &path);
  m.def("cycle", &cycle);
  m.def("star", &star);
  m.def("complete", &complete);
  m.def("empty_graph", &empty_graph);
  m.def("wheel", &wheel);
  m.def("complete_split", &complete_split, py::arg("n"), py::arg("k"));
  m.def("complete_multipartite", [](const std::vector<int>& parts) { return complete_multipartite(parts); });
  m.def("friendship", &friendship);
  m.def("named", [](const std::string& name) { return named(name); });
  m.def("named_graphs", &named_graphs);
  m.def("complement", &complement);
  m.def("subdivide_edges", [](const Graph& g, const std::vector<std::pair<int, int>>& edges) {
    std::vector<Edge> list;
    for (const auto& [u, v] : edges) list.push_back({u, v});
    return subdivide_edges(g, list);
  });
  m.def("degree2_inflate", &degree2_inflate, py::arg("graph"), py::arg("count"));

  m.def("canonical_code", [](const Graph& g) { return canonical_code(g).bytes; });
  m.def("is_connected", &is_connected);
  m.def("measure_set", [](const Graph& g) { return measures_dict(measure_set(g)); });
  m.def("degree_stats", [](const Graph& g) { return from_json(to_json(degree_stats(g))); });
  m.def("classify", [](const Graph& g) { return from_json(to_json(classify(g))); });
  m.def("bound_report", [](const Graph& g) {
    py::list out;
    for (const auto& r : bound_report(g)) out.append(record_dict(r));
    return out;
  });

  m.def("two_walk_params", [](const Graph& g) -> py::object {
    const auto p = two_walk_params(g);
    if (!p) return py::none();
    return py::make_tuple(p->a, p->b);
  });
  m.def("main_eigenvalues", [](long long a, long long b) { return main_eigenvalues({a, b}); });
  m.def("variance_spectral_identity", [](const Graph& g) {
    const auto id = variance_spectral_identity(g);
    return py::make_tuple(fraction(id.var_via_params), id.matches);
  });
  m.def("spectral_radius", [](const Graph& g) { return spectral_radius_estimate(g); });

  m.def(
      "enumerate",
      [](int n, std::optional<int> edges, bool connected, bool irregular, const std::string& population, int workers) {
        EnumerationSpec spec;
        spec.n = n;
        spec.m = edges;
        spec.connected_only = connected;
        spec.irregular_only = irregular;
        spec.population = parse_kind(population);
        std::vector<Graph> out;
        py::gil_scoped_release release;
        for (auto& rep : enumerate(spec, workers)) out.push_back(std::move(rep.graph));
        return out;
      },
      py::arg("n"), py::arg("m") = py::none(), py::arg("connected") = false, py::arg("irregular") = false,
      py::arg("population") = "all", py::arg("workers") = 1);

  m.def("suite_ids", &suite_ids);
  m.def(
      "run_suite",
      [](const std::string& suite, int min_n, int max_n, std::optional<int> edges, bool connected, bool irregular,
         const std::string& population, int workers) {
        PopulationSpec spec;
        spec.min_n = min_n;
        spec.max_n = max_n;
        spec.m = edges;
        spec.connected_only = connected;
        spec.irregular_only = irregular;
        spec.kind = parse_kind(population);
        VerificationReport report;
        {
          py::gil_scoped_release release;
          report = run_suite(spec, suite, workers);
        }
        return from_json(to_json(report));
      },
      py::arg("suite") = "all", py::arg("min_n") = 1, py::arg("max_n") = 6, py::arg("m") = py::none(),
      py::arg("connected") = false, py::arg("irregular") = false, py::arg("population") = "all",
      py::arg("workers") = 1);
  m.def(
      "check_conjectures",
      [](int min_n, int max_n, bool include_disconnected) {
        PopulationSpec spec;
        spec.min_n = min_n;
        spec.max_n = max_n;
        spec.connected_only = !include_disconnected;
        const auto graphs = materialize(spec);
        py::list out;
        out.append(from_json(to_json(check_conjecture1(graphs, spec.describe()))));
        out.append(from_json(to_json(check_conjecture2(graphs, spec.describe()))));
        return out;
      },
      py::arg("min_n") = 1, py::arg("max_n") = 6, py::arg("include_disconnected") = false);
  m.def("extremal_search", [](int n, int edges) { return from_json(to_json(extremal_search(n, edges))); },
        py::arg("n"), py::arg("m"));
  m.def("universal_census", [](int n, int edges) { return from_json(to_json(universal_census(n, edges))); },
        py::arg("n"), py::arg("m"));
  m.def("describe_graph", &describe_graph);
  m.def("split_k_rule", &split_k_rule);
  m.def("max_deviation_split_k", &max_deviation_split_k);
  m.def("split_k_argmax", &split_k_argmax);
}
