#include "gengraph/domination.hpp"
#include "gengraph/errors.hpp"
#include "gengraph/generating_graph.hpp"
#include "gengraph/spec.hpp"
#include "gengraph/structure.hpp"
#include "gengraph/verifier.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace gengraph;

namespace {

py::dict structure_dict(const NilpotentStructure& ns) {
  py::dict d;
  d["cyclic_sylow"] = ns.cyclicSylow;
  d["noncyclic_sylow"] = ns.noncyclicSylow;
  d["r"] = ns.r();
  d["s"] = ns.s();
  d["two_generated"] = ns.twoGenerated;
  d["frattini_order"] = ns.frattini_order();
  return d;
}

py::dict domination_dict(const DominationResult& r) {
  py::dict d;
  switch (r.status) {
    case DominationResult::Status::Solved: d["status"] = "solved"; break;
    case DominationResult::Status::Undefined: d["status"] = "undefined"; break;
    case DominationResult::Status::BudgetExceeded: d["status"] = "budget_exceeded"; break;
  }
  d["gamma_t"] = r.status == DominationResult::Status::Solved ? py::cast(r.gammaT) : py::none();
  d["set"] = r.set.vertices;
  d["nodes"] = r.nodes;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Generating graphs of finite groups";
  m.attr("version") = kToolVersion;

  py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);
  py::register_exception<GroupError>(m, "GroupError", PyExc_ValueError);
  py::register_exception<NotTwoGenerated>(m, "NotTwoGenerated", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  py::class_<Group>(m, "Group")
      .def_property_readonly("order", &Group::order)
      .def_property_readonly("labels", &Group::labels)
      .def("mul", &Group::mul)
      .def("inverse", &Group::inverse)
      .def("element_order", &Group::element_order)
      .def("is_abelian", &Group::is_abelian)
      .def("is_cyclic", &Group::is_cyclic)
      .def("is_nilpotent", [](const Group& g) { return is_nilpotent(g); })
      .def("is_two_generated", [](const Group& g) { return is_two_generated(g); })
      .def("__len__", &Group::order)
      .def("__repr__", [](const Group& g) { return "<Group of order " + std::to_string(g.order()) + ">"; });

  m.def("canonical_spec", [](const std::string& s) { return to_string(parse_spec(s)); }, py::arg("spec"));

  m.def(
      "build_group",
      [](const std::string& s, std::size_t maxOrder) { return build_group(parse_spec(s), BuildOptions{maxOrder}); },
      py::arg("spec"), py::arg("max_order") = kDefaultMaxOrder);

  m.def("nilpotent_structure", [](const Group& g) { return structure_dict(nilpotent_structure(g)); });

  m.def(
      "generating_graph",
      [](const Group& g, bool delta) {
        auto gm = generating_graph(g);
        if (delta) gm = delta_graph(gm);
        py::dict d;
        d["labels"] = gm.labels;
        d["elements"] = gm.vertexElements;
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (const auto& [u, v] : gm.graph.edges()) edges.emplace_back(u, v);
        d["edges"] = edges;
        std::vector<Vertex> marks;
        for (Vertex v = 0; v < gm.graph.vertex_count(); ++v)
          if (gm.graph.self_dominating(v)) marks.push_back(v);
        d["self_dominating"] = marks;
        return d;
      },
      py::arg("group"), py::arg("delta") = true);

  m.def("td_bounds", [](std::vector<std::size_t> parts) {
    std::sort(parts.begin(), parts.end());
    const auto b = td_bounds(parts);
    return py::make_tuple(b.lower, b.upper, b.t);
  });

  m.def(
      "complete_product_td",
      [](std::vector<std::size_t> parts, std::uint64_t budget) {
        std::sort(parts.begin(), parts.end());
        DominationResult r;
        {
          py::gil_scoped_release release;
          r = complete_product_td(parts, SearchBudget{budget});
        }
        return domination_dict(r);
      },
      py::arg("parts"), py::arg("budget") = 10'000'000);

  m.def(
      "verify_json",
      [](const std::vector<std::string>& groups, std::vector<std::string> checks, std::size_t jobs,
         std::uint64_t budget, std::size_t maxOrder) {
        std::vector<CatalogEntry> entries;
        for (const auto& g : groups) entries.push_back({g});
        if (entries.empty()) entries = default_catalog();
        if (checks.empty()) checks = all_checks();
        for (const auto& c : checks)
          if (!is_known_check(c)) throw PreconditionError("unknown check " + c);
        VerifyOptions o;
        o.budget.maxNodes = budget;
        o.maxOrder = maxOrder;
        Report rep;
        {
          py::gil_scoped_release release;
          rep = run_catalog(entries, checks, jobs, o);
        }
        return report_to_json(rep).dump();
      },
      py::arg("groups"), py::arg("checks"), py::arg("jobs") = 1, py::arg("budget") = 10'000'000,
      py::arg("max_order") = kDefaultMaxOrder);
}
