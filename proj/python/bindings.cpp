#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "diagrw/hypergraph.hpp"
#include "diagrw/isomorphism.hpp"
#include "diagrw/parser.hpp"
#include "diagrw/rewrite.hpp"
#include "diagrw/term.hpp"
#include "diagrw/term_semantics.hpp"
#include "diagrw/theory.hpp"
#include "diagrw/zx.hpp"

namespace py = pybind11;
using namespace diagrw;

namespace {

const char* kind_name(Term::Kind k) {
  switch (k) {
    case Term::Kind::Id:
      return "id";
    case Term::Kind::Swap:
      return "swap";
    case Term::Kind::Cup:
      return "cup";
    case Term::Kind::Cap:
      return "cap";
    case Term::Kind::Compose:
      return "compose";
    case Term::Kind::Stack:
      return "stack";
    case Term::Kind::Generator:
      return "generator";
  }
  return "?";
}

std::vector<std::uint32_t> raw(const std::vector<VertexId>& vs) {
  std::vector<std::uint32_t> out;
  for (VertexId v : vs) out.push_back(v.value);
  return out;
}

py::dict iso_dict(const Isomorphism& iso) {
  py::dict vertices, edges, out;
  for (const auto& [a, b] : iso.vertex_map) vertices[py::int_(a.value)] = b.value;
  for (const auto& [a, b] : iso.edge_map) edges[py::int_(a.value)] = b.value;
  out["vertices"] = vertices;
  out["edges"] = edges;
  return out;
}

template <class T>
std::vector<std::vector<T>> rows(const Tensor<ComplexField>& t) {
  std::vector<std::vector<T>> out(t.rows(), std::vector<T>(t.cols()));
  for (std::size_t r = 0; r < t.rows(); ++r) {
    for (std::size_t c = 0; c < t.cols(); ++c) out[r][c] = t.at_flat(r, c);
  }
  return out;
}

std::string join_diagnostics(const std::vector<Diagnostic>& diags) {
  std::ostringstream os;
  for (const auto& d : diags) os << to_string(d) << '\n';
  return os.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hypergraph rewriting for symmetric monoidal terms";

  py::class_<Term>(m, "Term")
      .def_static("id", &Term::id, py::arg("n"))
      .def_static("swap", &Term::swap, py::arg("n"), py::arg("m"))
      .def_static("cup", &Term::cup, py::arg("n"))
      .def_static("cap", &Term::cap, py::arg("n"))
      .def_static("compose", &Term::compose, py::arg("first"), py::arg("second"))
      .def_static("stack", &Term::stack, py::arg("top"), py::arg("bottom"))
      .def_static(
          "generator", [](const std::string& name, std::size_t n, std::size_t m) { return Term::generator(name, n, m); },
          py::arg("name"), py::arg("inputs"), py::arg("outputs"))
      .def_property_readonly("dom", &Term::dom)
      .def_property_readonly("cod", &Term::cod)
      .def_property_readonly("kind", [](const Term& t) { return kind_name(t.kind()); })
      .def("node_count", &Term::node_count)
      .def("generator_count", &Term::generator_count)
      .def(
          "__rshift__", [](const Term& a, const Term& b) { return Term::compose(a, b); }, py::is_operator())
      .def(
          "__mul__", [](const Term& a, const Term& b) { return Term::stack(a, b); }, py::is_operator())
      .def(py::self == py::self)
      .def("__str__", [](const Term& t) { return to_string(t); })
      .def("__repr__", [](const Term& t) { return "Term('" + to_string(t) + "')"; });

  py::class_<InterfacedGraph>(m, "Graph")
      .def_property_readonly("inputs", [](const InterfacedGraph& g) { return raw(g.inputs); })
      .def_property_readonly("outputs", [](const InterfacedGraph& g) { return raw(g.outputs); })
      .def_property_readonly("num_edges", &InterfacedGraph::num_edges)
      .def_property_readonly("num_vertices", [](const InterfacedGraph& g) { return vertices(g).size(); })
      .def("to_json", [](const InterfacedGraph& g) { return to_json(g).dump(); })
      .def("to_dot", [](const InterfacedGraph& g, const std::string& name) { return to_dot(g, name); },
           py::arg("name") = "G")
      .def("is_monogamous", &is_monogamous)
      .def("is_acyclic", &is_acyclic)
      .def(py::self == py::self)
      .def("__repr__", [](const InterfacedGraph& g) {
        return "Graph(" + std::to_string(g.inputs.size()) + " -> " + std::to_string(g.outputs.size()) + ", " +
               std::to_string(g.num_edges()) + " edges)";
      });

  m.def("graph_from_json", [](const std::string& text) { return graph_from_json(nlohmann::json::parse(text)); });
  m.def("term_to_graph", &term_to_graph);
  m.def("graph_to_term", &graph_to_term);
  m.def("compose", py::overload_cast<const InterfacedGraph&, const InterfacedGraph&>(&compose));
  m.def("stack", py::overload_cast<const InterfacedGraph&, const InterfacedGraph&>(&stack));
  m.def("id_graph", &id_graph);
  m.def("swap_graph", &swap_graph);
  m.def("cup_graph", &cup_graph);
  m.def("cap_graph", &cap_graph);
  m.def("clean", &clean);

  m.def(
      "find_isomorphism",
      [](const InterfacedGraph& g, const InterfacedGraph& h) -> py::object {
        auto iso = find_isomorphism(g, h);
        if (!iso) return py::none();
        return iso_dict(*iso);
      },
      "Witness mapping g onto h, or None");
  m.def("isomorphic", [](const InterfacedGraph& g, const InterfacedGraph& h) { return find_isomorphism(g, h).has_value(); });
  m.def("terms_iso", [](const Term& a, const Term& b) { return terms_iso(a, b).has_value(); });

  m.def(
      "parse_term",
      [](const std::string& text, const std::map<std::string, std::pair<std::size_t, std::size_t>>& generators) {
        GeneratorArities arities(generators.begin(), generators.end());
        auto r = parse_term(text, arities);
        if (!r.term) throw py::value_error(join_diagnostics(r.diagnostics));
        return *r.term;
      },
      py::arg("text"), py::arg("generators") = std::map<std::string, std::pair<std::size_t, std::size_t>>{});

  m.def(
      "find_matches",
      [](const InterfacedGraph& pattern, const InterfacedGraph& host) {
        py::list out;
        for (const Match& mt : find_matches(pattern, host)) {
          py::dict d = iso_dict(Isomorphism{mt.vertex_map, mt.edge_map});
          d["occurrence"] = mt.occurrence;
          out.append(d);
        }
        return out;
      },
      py::arg("pattern"), py::arg("host"));
  m.def(
      "rewrite",
      [](const InterfacedGraph& host, const Term& lhs, const Term& rhs, std::size_t occurrence) -> py::object {
        auto r = rewrite_once(host, Rule{"rule", lhs, rhs}, Direction::Forward, occurrence);
        if (!r) return py::none();
        return py::cast(r->graph);
      },
      py::arg("host"), py::arg("lhs"), py::arg("rhs"), py::arg("occurrence") = 1,
      "Replace the occurrence-th convex match of lhs by rhs, or None");

  m.def(
      "check_theory",
      [](const std::string& source) {
        auto loaded = load_theory(source);
        if (!loaded.theory) throw py::value_error(join_diagnostics(loaded.diagnostics));
        py::list out;
        for (const LemmaReport& l : check_theory(*loaded.theory).lemmas) {
          py::dict d;
          d["name"] = l.name;
          d["status"] = l.status == LemmaStatus::Ok ? "ok" : "failed";
          d["failed_step"] = l.failed_step ? py::cast(*l.failed_step) : py::none();
          d["reason"] = l.reason;
          d["millis"] = l.millis;
          out.append(d);
        }
        return out;
      },
      py::arg("source"), "Check every lemma of a theory given as source text");

  m.def(
      "oracle_check",
      [](const Term& lhs, const Term& rhs, std::size_t trials, std::uint64_t seed) {
        auto r = oracle_check(lhs, rhs, trials, seed);
        return py::make_tuple(to_string(r.verdict), r.seed ? py::cast(*r.seed) : py::none());
      },
      py::arg("lhs"), py::arg("rhs"), py::arg("trials") = 10, py::arg("seed") = 1);
  m.def(
      "random_semantics",
      [](const Term& t, std::uint64_t seed) {
        auto tensor = term_semantics<ModPrimeField>(t, random_interpretation(seed));
        std::vector<std::vector<std::uint64_t>> out(tensor.rows(), std::vector<std::uint64_t>(tensor.cols()));
        for (std::size_t r = 0; r < tensor.rows(); ++r) {
          for (std::size_t c = 0; c < tensor.cols(); ++c) out[r][c] = tensor.at_flat(r, c);
        }
        return out;
      },
      py::arg("term"), py::arg("seed") = 1, "Tensor of a term under a seeded random interpretation over Z_p");

  auto zx = m.def_submodule("zx", "ZX-calculus semantics");
  auto color = [](const std::string& c) {
    if (c == "Z" || c == "z") return zx::Color::Z;
    if (c == "X" || c == "x") return zx::Color::X;
    throw py::value_error("spider color must be 'Z' or 'X'");
  };
  zx.def(
      "spider",
      [color](const std::string& c, std::size_t n, std::size_t m, double phase) { return zx::spider(color(c), n, m, phase); },
      py::arg("color"), py::arg("inputs"), py::arg("outputs"), py::arg("phase") = 0.0);
  zx.def("hadamard", &zx::hadamard);
  zx.def("constant", &zx::constant);
  zx.def("cnot", &zx::cnot);
  zx.def("notc", &zx::notc);
  zx.def("n_wire", &zx::n_wire);
  zx.def("theory_source", [] { return std::string(zx::theory_source()); });
  zx.def(
      "semantics",
      [](const Term& t) { return rows<std::complex<double>>(term_semantics<ComplexField>(t, zx::interp())); },
      "Matrix of a ZX term: rows indexed by inputs, columns by outputs");
}
