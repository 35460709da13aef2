#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hyperramsey/arrows.hpp"
#include "hyperramsey/cliques.hpp"
#include "hyperramsey/construct.hpp"
#include "hyperramsey/covers.hpp"
#include "hyperramsey/density.hpp"
#include "hyperramsey/errors.hpp"
#include "hyperramsey/io.hpp"
#include "hyperramsey/report.hpp"
#include "hyperramsey/sample.hpp"

namespace py = pybind11;
using namespace hyperramsey;

namespace {

py::object fraction(const Rational& q) {
  return py::module_::import("fractions").attr("Fraction")(q.to_string());
}

py::object json_object(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

using Host = std::shared_ptr<const UniformHypergraph>;

Host share(const UniformHypergraph& h) { return std::make_shared<const UniformHypergraph>(h); }

CoverFamily family_of(const VertexSet& target, std::uint32_t r, std::vector<VertexSet> members) {
  return CoverFamily{target, r, std::move(members)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Uniform hypergraph Ramsey toolkit";

  static py::exception<BudgetExceeded> budget_exceeded(m, "BudgetExceeded", PyExc_RuntimeError);
  static py::exception<NoneExists> none_exists(m, "NoneExists", PyExc_LookupError);
  static py::exception<NotFound> not_found(m, "NotFound", PyExc_LookupError);
  static py::exception<InternalContradiction> contradiction(m, "InternalContradiction",
                                                            PyExc_AssertionError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const BudgetExceeded& e) {
      budget_exceeded(e.what());
    } catch (const NoneExists& e) {
      none_exists(e.what());
    } catch (const NotFound& e) {
      not_found(e.what());
    } catch (const InternalContradiction& e) {
      contradiction(e.what());
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<UniformHypergraph, std::shared_ptr<UniformHypergraph>>(m, "Hypergraph")
      .def(py::init<std::uint32_t, std::uint32_t, std::vector<VertexSet>>(), py::arg("n"),
           py::arg("k"), py::arg("edges") = std::vector<VertexSet>{})
      .def_static("complete", &UniformHypergraph::complete, py::arg("n"), py::arg("k"))
      .def_static("parse", [](const std::string& text) {
        std::istringstream in(text);
        return parse_hypergraph(in);
      })
      .def_property_readonly("n", &UniformHypergraph::n)
      .def_property_readonly("k", &UniformHypergraph::k)
      .def_property_readonly("edges", &UniformHypergraph::edges)
      .def("has_edge", &UniformHypergraph::has_edge)
      .def("to_uhg", &to_uhg_string)
      .def("__len__", &UniformHypergraph::num_edges)
      .def("__eq__", [](const UniformHypergraph& a, const UniformHypergraph& b) { return a == b; })
      .def("__repr__", [](const UniformHypergraph& h) {
        return "Hypergraph(n=" + std::to_string(h.n()) + ", k=" + std::to_string(h.k()) +
               ", edges=" + std::to_string(h.num_edges()) + ")";
      });

  py::class_<EdgeColoring>(m, "Coloring")
      .def(py::init([](const UniformHypergraph& host, Color colors, std::vector<Color> assignment) {
             return EdgeColoring(share(host), colors, std::move(assignment));
           }),
           py::arg("host"), py::arg("num_colors"), py::arg("assignment"))
      .def_property_readonly("host", [](const EdgeColoring& c) { return c.host(); })
      .def_property_readonly("num_colors", &EdgeColoring::num_colors)
      .def_property_readonly("assignment", &EdgeColoring::assignment)
      .def("color_of", &EdgeColoring::color_of)
      .def("color_class", &EdgeColoring::color_class)
      .def("to_col", &to_col_string)
      .def("__eq__", [](const EdgeColoring& a, const EdgeColoring& b) { return a == b; });

  m.def("primal_r_graph", &primal_r_graph, py::arg("h"), py::arg("r"));
  m.def(
      "max_r_density",
      [](const UniformHypergraph& f, std::uint32_t cap) {
        const auto result = max_r_density(f, cap);
        return py::make_tuple(fraction(result.value), result.witness);
      },
      py::arg("f"), py::arg("cap") = kDefaultDensityVertexCap);
  m.def("clique_density", [](std::uint32_t t, std::uint32_t r) { return fraction(clique_density(t, r)); },
        py::arg("t"), py::arg("r"));
  m.def("enumerate_cliques", &enumerate_cliques, py::arg("g"), py::arg("t"));

  m.def(
      "minimal_covers",
      [](const VertexSet& target, const std::vector<VertexSet>& candidates, std::uint32_t r) {
        std::vector<std::vector<VertexSet>> out;
        for (auto& f : enumerate_minimal_nontrivial_covers(target, candidates, r))
          out.push_back(std::move(f.members));
        return out;
      },
      py::arg("target"), py::arg("candidates"), py::arg("r"));
  m.def(
      "phi",
      [](const VertexSet& target, std::uint32_t r, std::vector<VertexSet> members, std::uint32_t t) {
        return fraction(phi(family_of(target, r, std::move(members)), t));
      },
      py::arg("target"), py::arg("r"), py::arg("members"), py::arg("t"));
  m.def(
      "check_cover_inequality",
      [](const VertexSet& target, std::uint32_t r, std::vector<VertexSet> members, std::uint32_t t) {
        const auto family = family_of(target, r, std::move(members));
        return py::make_tuple(check_cover_inequality(family, t),
                              fraction(cover_inequality_lhs(family, t)));
      },
      py::arg("target"), py::arg("r"), py::arg("members"), py::arg("t"));
  m.def(
      "reduction_sequence",
      [](const VertexSet& target, std::uint32_t r, std::vector<VertexSet> members, std::uint32_t t) {
        py::list out;
        for (const auto& step : reduction_sequence(family_of(target, r, std::move(members)), t))
          out.append(py::make_tuple(step.family.members, fraction(step.phi)));
        return out;
      },
      py::arg("target"), py::arg("r"), py::arg("members"), py::arg("t"));
  m.def(
      "expected_cover_bound",
      [](std::uint64_t n, std::uint32_t s, std::uint32_t r, std::uint32_t t, const std::string& p) {
        return json_object(to_json(expected_cover_bound(n, s, r, t, Probability::parse(p))));
      },
      py::arg("n"), py::arg("s"), py::arg("r"), py::arg("t"), py::arg("p"));

  m.def(
      "sample",
      [](std::uint32_t n, std::uint32_t s, const std::string& p, std::uint64_t seed) {
        return sample_hypergraph(n, s, Probability::parse(p), seed);
      },
      py::arg("n"), py::arg("s"), py::arg("p"), py::arg("seed"));
  m.def("linearity_violations", &linearity_violations, py::arg("h"), py::arg("r"));
  m.def("is_r_linear", &is_r_linear, py::arg("h"), py::arg("r"));
  m.def("is_conformal", &is_conformal, py::arg("h"), py::arg("r"), py::arg("t"));
  m.def(
      "clean",
      [](const UniformHypergraph& h, std::uint32_t r, std::uint32_t t) {
        const auto report = clean(h, r, t);
        return py::make_tuple(report.result, json_object(to_json(report)));
      },
      py::arg("h"), py::arg("r"), py::arg("t"));
  m.def("lift_coloring", &lift_coloring, py::arg("h0"), py::arg("r"), py::arg("base"));
  m.def(
      "run_trials",
      [](std::uint32_t n, std::uint32_t s, std::uint32_t r, std::uint32_t t, const std::string& p,
         std::uint32_t trials, std::uint64_t seed, unsigned threads) {
        TrialParameters params{.n = n, .s = s, .r = r, .t = t, .p = Probability::parse(p),
                               .trials = trials, .master_seed = seed};
        TrialStats stats;
        {
          py::gil_scoped_release release;
          stats = run_trials(params, threads);
        }
        return py::make_tuple(json_object(to_json(stats)), to_csv(stats));
      },
      py::arg("n"), py::arg("s"), py::arg("r"), py::arg("t"), py::arg("p"), py::arg("trials"),
      py::arg("seed"), py::arg("threads") = 1);

  m.def(
      "is_good_coloring",
      [](const EdgeColoring& c, std::uint32_t r, const std::vector<std::uint32_t>& sizes) {
        return verify_good_coloring(c.host(), c, TargetList(r, sizes)).good;
      },
      py::arg("coloring"), py::arg("r"), py::arg("targets"));
  m.def(
      "arrows",
      [](const UniformHypergraph& g, const std::vector<std::uint32_t>& sizes, std::uint64_t max_nodes,
         double max_seconds) {
        const auto result = arrows_decision(g, TargetList(g.k(), sizes),
                                            {.max_nodes = max_nodes, .max_seconds = max_seconds});
        return py::make_tuple(result.verdict == Verdict::arrows, result.witness);
      },
      py::arg("g"), py::arg("targets"), py::arg("max_nodes") = 0, py::arg("max_seconds") = 0.0);
  m.def(
      "export_cnf",
      [](const UniformHypergraph& g, const std::vector<std::uint32_t>& sizes) {
        return export_cnf(g, TargetList(g.k(), sizes));
      },
      py::arg("g"), py::arg("targets"));
  m.def(
      "ramsey_number",
      [](const std::vector<std::uint32_t>& sizes, std::uint32_t r, std::uint32_t n_max) {
        return ramsey_number(TargetList(r, sizes), n_max);
      },
      py::arg("targets"), py::arg("r"), py::arg("n_max"));
  m.def(
      "base_coloring",
      [](std::uint32_t s, const std::vector<std::uint32_t>& sizes, std::uint32_t r) {
        return base_coloring_search(s, TargetList(r, sizes));
      },
      py::arg("s"), py::arg("targets"), py::arg("r"));
}
