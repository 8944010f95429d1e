#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <chrono>

#include "symbreak/census.hpp"
#include "symbreak/checks.hpp"
#include "symbreak/distinguishing.hpp"
#include "symbreak/error.hpp"
#include "symbreak/graph.hpp"
#include "symbreak/graph6.hpp"
#include "symbreak/products.hpp"
#include "symbreak/symmetry.hpp"

namespace py = pybind11;
using namespace symbreak;

namespace {

Budget make_budget(std::uint64_t node_limit, int retries, double timeout) {
  Budget b;
  b.node_limit = node_limit;
  b.retries = retries;
  if (timeout > 0)
    b.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(timeout));
  return b;
}

SolveMode parse_mode(const std::string& mode) {
  if (mode == "exact") return SolveMode::exact;
  if (mode == "certificate") return SolveMode::certificate;
  throw InvalidArgument("mode must be 'exact' or 'certificate'");
}

py::dict result_dict(const DistinguishingResult& r) {
  py::dict d;
  d["value"] = r.value;
  d["mode"] = to_string(r.mode);
  d["exact"] = r.exact;
  d["witness"] = r.witness;
  d["lower_bound_basis"] = to_string(r.lower_bound_basis);
  return d;
}

std::vector<std::vector<int>> images(const std::vector<Permutation>& perms) {
  std::vector<std::vector<int>> out;
  for (const Permutation& p : perms) out.push_back(p.image());
  return out;
}

// Keyword arguments shared by every search entry point.
#define SYMBREAK_BUDGET_ARGS                                                    \
  py::arg("node_limit") = Budget{}.node_limit, py::arg("retries") = Budget{}.retries, \
      py::arg("timeout") = 0.0

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Automorphisms, distinguishing numbers and indices of graph products.";

  static py::exception<Error> base(m, "Error");
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<UndefinedQuantity>(m, "UndefinedQuantity", base.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init<>())
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             std::vector<Edge> es;
             for (auto [u, v] : edges) es.push_back({u, v});
             return Graph(n, es);
           }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::pair<int, int>> out;
                               for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
                               return out;
                             })
      .def("adjacent", &Graph::adjacent)
      .def("neighbors", &Graph::neighbors)
      .def("degree", &Graph::degree)
      .def("graph6", [](const Graph& g) { return to_graph6(g); })
      .def("edge_list", [](const Graph& g) { return to_edge_list(g); })
      .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
      .def_static("from_edge_list", [](const std::string& s) { return parse_edge_list(s); })
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        return "Graph(order=" + std::to_string(g.order()) + ", size=" + std::to_string(g.size()) +
               ")";
      });

  m.def("path", [](int n) { return make_family(Family::path, n); });
  m.def("cycle", [](int n) { return make_family(Family::cycle, n); });
  m.def("complete", [](int n) { return make_family(Family::complete, n); });
  m.def("complete_bipartite", &make_complete_bipartite);
  m.def("complement", &complement);
  m.def("is_connected", &is_connected);
  m.def("has_false_twins", &has_false_twins);
  m.def("dominating_vertices", &dominating_vertices);
  m.def("enumerate_graphs", [](int n, bool connected, bool up_to_iso) {
    return enumerate_small_graphs(n, connected, up_to_iso);
  }, py::arg("n"), py::arg("connected") = false, py::arg("up_to_iso") = false);

  m.def("conormal", &conormal);
  m.def("cartesian", &cartesian);
  m.def("conormal_power", &conormal_power);

  m.def(
      "automorphisms",
      [](const Graph& g, std::size_t element_limit) {
        Budget b;
        b.element_limit = element_limit;
        return images(automorphisms(g, b).elements);
      },
      py::arg("g"), py::arg("element_limit") = Budget{}.element_limit);
  m.def(
      "group_order",
      [](const Graph& g, std::uint64_t node_limit) {
        Budget b;
        b.node_limit = node_limit;
        return automorphism_summary(g, {}, b).order;
      },
      py::arg("g"), py::arg("node_limit") = Budget{}.node_limit);
  m.def("is_rigid", [](const Graph& g) { return is_rigid(g); });
  m.def("are_isomorphic", [](const Graph& g, const Graph& h) { return are_isomorphic(g, h); });

  m.def(
      "distinguishing_number",
      [](const Graph& g, const std::string& mode, std::uint64_t seed, std::uint64_t node_limit,
         int retries, double timeout) {
        DistinguishingResult r;
        {
          py::gil_scoped_release release;
          r = distinguishing_number(g, parse_mode(mode), seed,
                                    make_budget(node_limit, retries, timeout));
        }
        return result_dict(r);
      },
      py::arg("g"), py::arg("mode") = "exact", py::arg("seed") = 0, SYMBREAK_BUDGET_ARGS);
  m.def(
      "distinguishing_index",
      [](const Graph& g, const std::string& mode, std::uint64_t seed, std::uint64_t node_limit,
         int retries, double timeout) {
        DistinguishingResult r;
        {
          py::gil_scoped_release release;
          r = distinguishing_index(g, parse_mode(mode), seed,
                                   make_budget(node_limit, retries, timeout));
        }
        return result_dict(r);
      },
      py::arg("g"), py::arg("mode") = "exact", py::arg("seed") = 0, SYMBREAK_BUDGET_ARGS);
  m.def(
      "is_distinguishing",
      [](const Graph& g, const std::vector<int>& labels, bool edges) {
        const int count = labels.empty() ? 1 : *std::max_element(labels.begin(), labels.end());
        if (edges) return is_distinguishing(g, EdgeLabeling{labels, count});
        return is_distinguishing(g, VertexLabeling{labels, count});
      },
      py::arg("g"), py::arg("labels"), py::arg("edges") = false);
  m.def("is_traceable", [](const Graph& g) { return is_traceable(g); });

  m.def("claims", [] {
    std::vector<std::tuple<std::string, int, std::string>> out;
    for (const ClaimInfo& c : claim_registry()) out.emplace_back(c.id, c.arity, c.statement);
    return out;
  });
  m.def(
      "_check_json",
      [](const std::string& claim, const std::vector<Graph>& graphs, const std::string& mode,
         std::uint64_t seed, int power, std::uint64_t node_limit, int retries, double timeout) {
        CheckConfig cfg;
        cfg.mode = parse_mode(mode);
        cfg.seed = seed;
        cfg.power = power;
        cfg.budget = make_budget(node_limit, retries, timeout);
        std::string out;
        {
          py::gil_scoped_release release;
          out = to_json(run_claim(claim, graphs, cfg)).dump();
        }
        return out;
      },
      py::arg("claim"), py::arg("graphs"), py::arg("mode") = "exact", py::arg("seed") = 0,
      py::arg("power") = 3, SYMBREAK_BUDGET_ARGS);
}
