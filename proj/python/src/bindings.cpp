#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fdsrank/bounds.hpp"
#include "fdsrank/canonical.hpp"
#include "fdsrank/constructions.hpp"
#include "fdsrank/enumeration.hpp"
#include "fdsrank/graph_invariants.hpp"
#include "fdsrank/report.hpp"
#include "fdsrank/text_format.hpp"
#include "fdsrank/verify.hpp"

namespace py = pybind11;
using namespace fdsrank;

namespace {

Digraph make_digraph(int n, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<Arc> list;
  for (auto [u, v] : arcs) list.push_back({u, v});
  return Digraph(n, std::move(list));
}

std::vector<std::pair<int, int>> arc_pairs(const Digraph& d) {
  std::vector<std::pair<int, int>> out;
  for (const Arc& a : d.arcs()) out.emplace_back(a.from, a.to);
  return out;
}

// Reports cross the boundary as JSON text; the Python side decodes them.
std::string dump(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rank, periodic rank and fixed points of finite dynamical systems";

  // Translators run most-recent first, so the base class goes in first.
  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<SizeLimitExceeded>(m, "SizeLimitExceeded", base);

  py::class_<Limits>(m, "Limits")
      .def(py::init<>())
      .def_static("from_env", &Limits::from_env)
      .def_readwrite("max_states", &Limits::max_states)
      .def_readwrite("max_functions", &Limits::max_functions)
      .def_readwrite("max_exact_n", &Limits::max_exact_n)
      .def_readwrite("max_cycles", &Limits::max_cycles)
      .def_readwrite("max_code_space", &Limits::max_code_space)
      .def_readwrite("exact_lp_columns", &Limits::exact_lp_columns)
      .def_readwrite("max_entropy_n", &Limits::max_entropy_n)
      .def_readwrite("exact_entropy_n", &Limits::exact_entropy_n);

  py::class_<Digraph>(m, "Digraph")
      .def(py::init(&make_digraph), py::arg("n"), py::arg("arcs"))
      .def_property_readonly("n", &Digraph::size)
      .def_property_readonly("arcs", &arc_pairs)
      .def("has_arc", &Digraph::has_arc)
      .def("is_acyclic", &Digraph::is_acyclic)
      .def("with_all_loops", &Digraph::with_all_loops)
      .def("fingerprint", &Digraph::fingerprint)
      .def("__eq__", [](const Digraph& a, const Digraph& b) { return a == b; })
      .def("__repr__", [](const Digraph& d) { return "Digraph(" + d.fingerprint() + ")"; });

  py::class_<Fds>(m, "Fds")
      .def(py::init<int, int, std::vector<std::vector<Vertex>>, std::vector<std::vector<Value>>>(), py::arg("n"),
           py::arg("q"), py::arg("inputs"), py::arg("tables"))
      .def_property_readonly("n", &Fds::size)
      .def_property_readonly("q", &Fds::alphabet)
      .def("apply", &Fds::apply)
      .def("decode", &Fds::decode)
      .def("__repr__", [](const Fds& f) { return format_fds(f); });

  auto fx = m.def_submodule("fixtures", "Named example digraphs");
  fx.def("E3", &fixtures::E3);
  fx.def("L1", &fixtures::L1);
  fx.def("P1", &fixtures::P1);
  fx.def("C3", &fixtures::C3);
  fx.def("C3_looped", &fixtures::C3_looped);
  fx.def("K3", &fixtures::K3);
  fx.def("C5sym", &fixtures::C5sym);
  fx.def("STAR3", &fixtures::STAR3);
  fx.def("FIG1", &fixtures::FIG1);
  fx.def("cycle", &fixtures::cycle);
  fx.def("complete", &fixtures::complete);
  fx.def("star", &fixtures::star);

  m.def("parse_graph", [](const std::string& text) { return parse_graph(text); });
  m.def("format_graph", &format_graph);
  m.def("parse_fds", [](const std::string& text) { return parse_fds(text); });
  m.def("format_fds", &format_fds);

  m.def("interaction_graph", &interaction_graph);
  m.def("rank", &rank, py::arg("f"), py::arg("limits") = Limits{});
  m.def("periodic_rank", &periodic_rank, py::arg("f"), py::arg("limits") = Limits{});
  m.def("fixed_points", &fixed_points, py::arg("f"), py::arg("limits") = Limits{});

  m.def("max_independent_arcs", &max_independent_arcs);
  m.def("max_cycle_cover", &max_cycle_cover);
  m.def("cycle_packing_number", &cycle_packing_number, py::arg("d"), py::arg("limits") = Limits{});
  m.def("transversal_number", &transversal_number, py::arg("d"), py::arg("limits") = Limits{});
  m.def("blowup", &blowup);

  m.def("conjunctive", &conjunctive);
  m.def("conjunctive_rank", &conjunctive_rank, py::arg("d"), py::arg("limits") = Limits{});
  m.def("star_witness", &star_witness);
  m.def("nilpotent_class_two", &nilpotent_class_two);
  m.def("maxper_witness", &maxper_witness);
  m.def("maxrank_witness", &maxrank_witness);
  m.def("modular_complete", &modular_complete);

  m.def(
      "canonical_json", [](const Digraph& d, const Limits& l) { return dump(canonical_summary(d, l)); },
      py::arg("d"), py::arg("limits") = Limits{});
  m.def("minrank_classify", [](const Digraph& d) { return to_string(minrank_classify(d)); });
  m.def("minrank_exact", &minrank_exact, py::arg("d"), py::arg("q"), py::arg("limits") = Limits{});
  m.def(
      "analyze_json",
      [](const Digraph& d, int q, bool strict, const Limits& l) {
        py::gil_scoped_release release;
        return dump(analyze(d, q, strict, l));
      },
      py::arg("d"), py::arg("q"), py::arg("strict") = false, py::arg("limits") = Limits{});
  m.def(
      "enumerate_json",
      [](const Digraph& d, int q, bool strict, const Limits& l, unsigned threads) {
        py::gil_scoped_release release;
        return dump(to_json(enumerate_stats(d, q, strict, l, threads)));
      },
      py::arg("d"), py::arg("q"), py::arg("strict") = false, py::arg("limits") = Limits{}, py::arg("threads") = 0);
  m.def(
      "bounds_json",
      [](const Digraph& d, int q, bool strict, const Limits& l) {
        return dump(to_json(fix_bounds_report(d, q, strict, l)));
      },
      py::arg("d"), py::arg("q"), py::arg("strict") = false, py::arg("limits") = Limits{});
  m.def(
      "entropy",
      [](const Digraph& d, const Limits& l) {
        const EntropyValue h = entropy_H(d, l);
        return py::make_tuple(h.to_string(), h.exact ? h.value.get_d() : h.approx);
      },
      py::arg("d"), py::arg("limits") = Limits{});

  m.def(
      "run_acceptance",
      [](bool quick) {
        VerifyOptions options;
        options.quick = quick;
        options.limits = Limits::from_env();
        std::vector<py::tuple> out;
        std::vector<CheckResult> results;
        {
          py::gil_scoped_release release;
          results = run_acceptance(options);
        }
        for (const auto& r : results) out.push_back(py::make_tuple(r.id, r.name, r.pass, r.expected, r.actual));
        return out;
      },
      py::arg("quick") = true);
}
