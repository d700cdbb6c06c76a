#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pautkit/characterize.hpp"
#include "pautkit/io.hpp"
#include "pautkit/recon.hpp"

namespace py = pybind11;
using namespace pautkit;

namespace {

Graph graph_of(const std::string& text) {
  auto in = load_input(text);
  if (!in.graph) throw std::invalid_argument("expected a graph in graph6 or edge-list form");
  return *in.graph;
}

InverseSubmonoid monoid_of(const std::string& text) {
  auto in = load_input(text);
  if (in.document) return monoid_from_json(*in.document);
  return enumerate_paut(*in.digraph);
}

}  // namespace

PYBIND11_MODULE(_pautkit, m) {
  m.doc() = "Partial automorphism monoids of graphs";

  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<NotationError>(m, "NotationError", PyExc_ValueError);
  py::register_exception<LimitExceeded>(m, "LimitExceeded", PyExc_RuntimeError);
  py::register_exception<ConditionsFailed>(m, "ConditionsFailed", PyExc_RuntimeError);

  m.def("compose", [](const std::string& g, const std::string& f, int n) {
    return format_cpn(compose(parse_cpn(g, n), parse_cpn(f, n)));
  }, py::arg("g"), py::arg("f"), py::arg("n"), "g f in cycle-path notation (f applied first).");
  m.def("invert", [](const std::string& f, int n) { return format_cpn(invert(parse_cpn(f, n))); }, py::arg("f"),
        py::arg("n"));

  m.def("enumerate_paut", [](const std::string& graph, int jobs) {
    auto in = load_input(graph);
    if (!in.digraph) throw std::invalid_argument("expected a graph or digraph");
    return monoid_to_json(enumerate_paut(*in.digraph, {.jobs = jobs})).dump();
  }, py::arg("graph"), py::arg("jobs") = 1);

  m.def("green", [](const std::string& input) {
    const auto s = monoid_of(input);
    return eggbox_to_json(s, green_structure(s)).dump();
  }, py::arg("input"));

  m.def("check", [](const std::string& input, bool digraph, int jobs) {
    const auto s = monoid_of(input);
    const auto r = digraph ? check_digraph_conditions(s, jobs) : check_graph_conditions(s, jobs);
    return report_to_json(r, std::nullopt, r.passed() ? (digraph ? "digraph" : "graph") : "none").dump();
  }, py::arg("input"), py::arg("digraph") = false, py::arg("jobs") = 1);

  m.def("build_graph", [](const std::string& input, bool validate) {
    return format_graph6(build_graph(monoid_of(input), validate));
  }, py::arg("input"), py::arg("validate") = false);

  m.def("realize", [](const std::string& table_json, bool validate) {
    const auto t = InverseMonoid(table_from_json(json::parse(table_json)));
    const auto r = realize_abstract(t, validate);
    std::optional<std::string> construction;
    if (r.graph) construction = format_graph6(*r.graph);
    if (r.digraph) construction = format_edgelist(*r.digraph);
    return report_to_json(r.report, construction, r.theorem).dump();
  }, py::arg("table_json"), py::arg("validate") = false);

  m.def("table", [](const std::string& input) { return table_to_json(to_table(monoid_of(input))).dump(); },
        py::arg("input"));

  m.def("paut_isomorphic", [](const std::string& a, const std::string& b) {
    return paut_isomorphic(graph_of(a), graph_of(b));
  }, py::arg("a"), py::arg("b"));

  m.def("deck", [](const std::string& g) { return deck(graph_of(g)).keys(); }, py::arg("graph"));

  m.def("pseudo_similar_pairs", [](const std::string& g) { return pseudo_similar_pairs(graph_of(g)); },
        py::arg("graph"));

  m.def("find_deck_counterexamples", [](int n, int jobs) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [a, b] : find_deck_counterexamples(n, jobs)) out.emplace_back(format_graph6(a), format_graph6(b));
    return out;
  }, py::arg("n"), py::arg("jobs") = 1);
}
