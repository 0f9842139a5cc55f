#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wucalc/catalog.hpp"
#include "wucalc/cli.hpp"
#include "wucalc/cohomology.hpp"
#include "wucalc/connection.hpp"
#include "wucalc/lefschetz.hpp"
#include "wucalc/spectral.hpp"
#include "wucalc/strong_ring.hpp"

namespace py = pybind11;
using namespace wucalc;

namespace {

py::object fraction(const Rational& q) {
  return py::module_::import("fractions").attr("Fraction")(to_string(q));
}

py::int_ big(const BigInt& z) { return py::int_(py::str(to_string(z))); }

std::vector<std::vector<Vertex>> simplex_lists(const Complex& c) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& s : c.simplices()) out.emplace_back(s.vertices().begin(), s.vertices().end());
  return out;
}

std::vector<CellComplexPtr> sources_of(const std::vector<Complex>& cs) { return make_sources(cs); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Wu characteristics and interaction cohomology of finite simplicial complexes";

  py::register_exception<Error>(m, "WucalcError", PyExc_ValueError);

  py::enum_<IntersectionRule>(m, "IntersectionRule")
      .value("pairwise", IntersectionRule::pairwise)
      .value("common", IntersectionRule::common);

  py::class_<Complex>(m, "Complex")
      .def(py::init([](const std::vector<std::vector<Vertex>>& facets) { return generate_complex(facets); }),
           py::arg("facets"))
      .def_static("whitney", [](const std::vector<std::pair<Vertex, Vertex>>& edges, const std::vector<Vertex>& extra) {
        Graph g;
        for (Vertex v : extra) g.add_vertex(v);
        for (auto [a, b] : edges) g.add_edge(a, b);
        return whitney_complex(g);
      }, py::arg("edges"), py::arg("isolated") = std::vector<Vertex>{})
      .def_static("catalog", &catalog_complex, py::arg("name"))
      .def_property_readonly("simplices", &simplex_lists)
      .def_property_readonly("vertices", &Complex::vertices)
      .def_property_readonly("dim", &Complex::dim)
      .def("__len__", &Complex::size)
      .def("f_vector", [](const Complex& c) { return f_vector(c); })
      .def("euler_characteristic", [](const Complex& c) { return euler_characteristic(c); })
      .def("inductive_dimension", [](const Complex& c) { return fraction(inductive_dimension(one_skeleton(c))); })
      .def("barycentric_refinement", [](const Complex& c) { return barycentric_refinement(c); })
      .def("__eq__", [](const Complex& a, const Complex& b) { return a == b; })
      .def("__repr__", [](const Complex& c) {
        std::ostringstream o;
        o << "Complex(" << c.size() << " simplices, dim " << c.dim() << ")";
        return o.str();
      });

  m.def("catalog_names", &catalog_names);

  m.def("wu_characteristic",
        [](const Complex& c, int k, IntersectionRule rule) { return wu_characteristic(c, k, rule); },
        py::arg("complex"), py::arg("k") = 2, py::arg("rule") = IntersectionRule::pairwise);
  m.def("wu_characteristic",
        [](const std::vector<Complex>& cs, IntersectionRule rule) { return wu_characteristic(sources_of(cs), rule); },
        py::arg("complexes"), py::arg("rule") = IntersectionRule::pairwise);
  m.def("betti_vector",
        [](const Complex& c, int k, IntersectionRule rule) { return betti_vector(c, k, rule).values; },
        py::arg("complex"), py::arg("k") = 2, py::arg("rule") = IntersectionRule::pairwise);
  m.def("betti_vector",
        [](const std::vector<Complex>& cs, IntersectionRule rule) { return betti_vector(sources_of(cs), rule).values; },
        py::arg("complexes"), py::arg("rule") = IntersectionRule::pairwise);
  m.def("grade_sizes", [](const Complex& c, int k) { return build_basis(c, k).grade_sizes(); },
        py::arg("complex"), py::arg("k") = 2);

  m.def("laplacian_blocks", [](const Complex& c, int k) {
    DiracLaplacian dl = dirac_and_laplacian(interaction_derivative(build_basis(c, k)));
    std::vector<std::vector<std::vector<long long>>> out;
    for (const auto& b : dl.laplacian_blocks) out.push_back(b.to_dense());
    return out;
  }, py::arg("complex"), py::arg("k") = 2, "Dense Laplacian blocks, one per grade.");

  m.def("laplacian_spectra", [](const Complex& c, int k) {
    DiracLaplacian dl = dirac_and_laplacian(interaction_derivative(build_basis(c, k)));
    return spectrum(dl.laplacian_blocks).eigenvalues;
  }, py::arg("complex"), py::arg("k") = 2);

  m.def("euler_polynomial", [](const Complex& c) { return euler_polynomial(c).coefficients(); },
        "Coefficients by ascending degree.");
  m.def("multivariate_euler_polynomial", [](const Complex& c, int k) {
    return multivariate_euler_polynomial(c, k).to_string();
  }, py::arg("complex"), py::arg("k") = 2);

  m.def("product_f_vector", [](const Complex& a, const Complex& b) {
    return ring_f_vector(RingElement(a) * RingElement(b));
  });
  m.def("product_betti_vector", [](const Complex& a, const Complex& b, int k) {
    return ring_betti(RingElement(a) * RingElement(b), k).values;
  }, py::arg("a"), py::arg("b"), py::arg("k") = 1);

  m.def("automorphisms", [](const Complex& c, std::size_t bound) {
    std::vector<std::string> out;
    for (const auto& t : automorphism_group(c, bound)) out.push_back(t.cycle_notation());
    return out;
  }, py::arg("complex"), py::arg("bound") = 12, "Cycle notation of every automorphism, identity first.");
  m.def("lefschetz_numbers", [](const Complex& c, int k, std::size_t bound) {
    LefschetzEngine e(c, k);
    py::list out;
    for (const auto& t : automorphism_group(c, bound)) {
      LefschetzReport r = e.check({t});
      out.append(py::make_tuple(t.cycle_notation(), fraction(r.lefschetz_number), r.index_sum, r.ok));
    }
    return out;
  }, py::arg("complex"), py::arg("k") = 1, py::arg("bound") = 12,
        "(cycles, Lefschetz number, sum of fixed tuple indices, identity holds) per automorphism.");

  m.def("fredholm_characteristic", [](const Complex& c) { return big(fredholm_characteristic(c)); });
  m.def("fermi_characteristic", &fermi_characteristic);
  m.def("connection_f_vector", [](const Complex& c) { return f_vector(whitney_complex(connection_graph(c))); });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs a wucalc subcommand; returns (exit code, stdout, stderr).");
}
