#include "hedgehog/cli.hpp"
#include "hedgehog/constructions.hpp"
#include "hedgehog/extractors.hpp"
#include "hedgehog/finder.hpp"
#include "hedgehog/verifiers.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace hedgehog;
namespace cons = hedgehog::constructions;
namespace ext = hedgehog::extractors;
namespace ver = hedgehog::verifiers;

namespace {

Hypergraph hypergraph_from(Vertex n, const std::vector<std::vector<Vertex>> &edges) {
  Hypergraph h(n, 3);
  for (const auto &e : edges)
    h.add_edge(e);
  return h;
}

} // namespace

PYBIND11_MODULE(_hedgehog, m) {
  m.doc() = "Monochromatic hedgehogs in coloured complete hypergraphs";

  static py::exception<Error> error(m, "HedgehogError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p)
        std::rethrow_exception(p);
    } catch (const Error &e) {
      py::set_error(error, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  py::class_<CompleteColouring>(m, "CompleteColouring")
      .def(py::init<Vertex, unsigned, unsigned, Colour>(), py::arg("n"), py::arg("k"), py::arg("q"),
           py::arg("fill") = 0)
      .def(py::init<Vertex, unsigned, unsigned, std::vector<Colour>>(), py::arg("n"), py::arg("k"), py::arg("q"),
           py::arg("colours"))
      .def_property_readonly("n", &CompleteColouring::n)
      .def_property_readonly("k", &CompleteColouring::k)
      .def_property_readonly("q", &CompleteColouring::q)
      .def("__len__", &CompleteColouring::size)
      .def("colours", [](const CompleteColouring &c) {
        return std::vector<Colour>(c.colours().begin(), c.colours().end());
      })
      .def("of", [](const CompleteColouring &c, std::vector<Vertex> s) { return c.of(s); })
      .def("set", &CompleteColouring::set)
      .def("to_hcol", [](const CompleteColouring &c) { return to_hcol(c); })
      .def_static("from_hcol", &from_hcol)
      .def(py::self == py::self);

  py::class_<Spine>(m, "Spine").def_readonly("base", &Spine::base).def_readonly("apex", &Spine::apex);
  py::class_<HedgehogEmbedding>(m, "HedgehogEmbedding")
      .def_readonly("colour", &HedgehogEmbedding::colour)
      .def_readonly("body", &HedgehogEmbedding::body)
      .def_readonly("spines", &HedgehogEmbedding::spines);
  py::class_<CliqueWitness>(m, "CliqueWitness")
      .def_readonly("vertices", &CliqueWitness::vertices)
      .def_readonly("colour_mask", &CliqueWitness::colour_mask);

  m.def("random_colouring", &cons::random_colouring, py::arg("n"), py::arg("k"), py::arg("q"), py::arg("seed"));
  m.def(
      "find_scattered_colouring",
      [](Vertex n, unsigned t, unsigned q, std::uint64_t seed, std::uint64_t max_tries, std::uint64_t max_steps) {
        cons::ScatteredColouringSpec spec{
            .n = n, .t = t, .q = q, .seed = seed, .max_tries = max_tries, .max_steps = max_steps};
        return cons::find_scattered_colouring(spec).colouring;
      },
      py::arg("n"), py::arg("t"), py::arg("q") = 4, py::arg("seed") = 0, py::arg("max_tries") = 100,
      py::arg("max_steps") = 20000);
  m.def(
      "complement_lift",
      [](const CompleteColouring &g, std::vector<Colour> palette) { return cons::complement_lift(g, palette); },
      py::arg("graph"), py::arg("palette"));
  m.def("lex_product", &cons::lex_product);

  m.def(
      "find_monochromatic_hedgehog",
      [](const CompleteColouring &c, unsigned t) { return finder::find_monochromatic_hedgehog(c, t); },
      py::arg("colouring"), py::arg("t"));
  m.def(
      "verify_embedding",
      [](const HedgehogEmbedding &emb, const CompleteColouring &host) -> std::optional<std::string> {
        if (auto v = ver::verify_embedding(emb, host))
          return std::string(ver::to_string(v->kind)) + ": " + v->detail;
        return std::nullopt;
      },
      py::arg("embedding"), py::arg("host"));
  m.def("has_monochromatic_hedgehog", &ver::has_monochromatic_hedgehog, py::arg("host"), py::arg("t"),
        py::arg("colour"));
  m.def(
      "exhaustive_ramsey_check",
      [](unsigned t, unsigned q, Vertex n) {
        const auto v = ver::exhaustive_ramsey_check(t, q, n);
        return py::make_tuple(ver::to_string(v.outcome), v.counterexample, v.colourings_checked);
      },
      py::arg("t"), py::arg("q"), py::arg("n"));

  m.def("spencer_guarantee", &ext::spencer_guarantee);
  m.def(
      "spencer_independent_set",
      [](Vertex n, const std::vector<std::vector<Vertex>> &edges, std::uint64_t seed) {
        return ext::spencer_independent_set(hypergraph_from(n, edges), seed).vertices;
      },
      py::arg("n"), py::arg("edges"), py::arg("seed") = 0);
  m.def(
      "gallai_two_coloured_clique",
      [](const CompleteColouring &c) { return ext::gallai_two_coloured_clique(ext::GallaiColouring::verify(c)); },
      py::arg("colouring"));
  m.def(
      "f_oracle",
      [](unsigned t, Vertex cap, std::uint64_t seed) {
        ext::FOracleOptions o;
        o.seed = seed;
        const auto r = ext::f_oracle(t, cap, o);
        return py::make_tuple(r.value, r.lower_bound, r.modes_agree);
      },
      py::arg("t"), py::arg("cap"), py::arg("seed") = 1);

  m.def(
      "cli",
      [](const std::vector<std::string> &args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
