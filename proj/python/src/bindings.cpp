#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>
#include <set>
#include <stdexcept>

#include "uqa/cominuscule.hpp"
#include "uqa/hopf.hpp"
#include "uqa/parse.hpp"
#include "uqa/poset.hpp"
#include "uqa/report.hpp"
#include "uqa/selfcheck.hpp"

namespace py = pybind11;
using namespace uqa;

namespace {

// Node lists and x arrive 1-based, as on the command line.
LeviSpec make_levi(const UqAlgebra& alg, const std::optional<std::vector<int>>& levi, std::optional<int> x) {
  if (levi && x) throw std::invalid_argument("give either levi or x, not both");
  if (x) return LeviSpec::complement_of(alg.datum(), *x - 1);
  if (!levi) throw std::invalid_argument("one of levi or x is required");
  std::set<int> nodes;
  for (int i : *levi) nodes.insert(i - 1);
  return LeviSpec::from_subset(alg.datum(), nodes);
}

std::string closure(const UqAlgebra& alg, const std::string& elem, std::optional<std::vector<int>> levi,
                    std::optional<int> x, std::size_t cap) {
  const auto spec = make_levi(alg, levi, x);
  const auto v = parse_element(elem, alg);
  py::gil_scoped_release unlock;
  return dump(closure_json(alg, cyclic_closure(alg, v, spec, cap), cap));
}

std::string decompose(const UqAlgebra& alg, const std::string& elem, std::optional<std::vector<int>> levi,
                      std::optional<int> x, std::size_t cap) {
  const auto spec = make_levi(alg, levi, x);
  const auto v = parse_element(elem, alg);
  py::gil_scoped_release unlock;
  return dump(decomposition_json(decompose_by_hwv(alg, v, spec, cap)));
}

std::string poset(const UqAlgebra& alg, const std::string& elem, std::optional<std::vector<int>> levi,
                  std::optional<int> x, std::size_t probes, std::uint64_t seed, std::size_t cap) {
  const auto spec = make_levi(alg, levi, x);
  const auto v = parse_element(elem, alg);
  py::gil_scoped_release unlock;
  const auto p = interval(alg, v, spec, probes, seed, cap);
  Json j = interval_json(p);
  j["lattice"] = lattice_json(lattice_probe(alg, p.nodes, probes, seed, cap));
  return dump(j);
}

std::string lattice(const UqAlgebra& alg, const std::vector<std::string>& elems,
                    std::optional<std::vector<int>> levi, std::optional<int> x, std::size_t probes,
                    std::uint64_t seed, std::size_t cap) {
  const auto spec = make_levi(alg, levi, x);
  std::vector<AlgebraElement> vs;
  for (const auto& e : elems) vs.push_back(parse_element(e, alg));
  py::gil_scoped_release unlock;
  std::vector<ModuleSpace> nodes;
  for (const auto& v : vs) nodes.push_back(closed_module(alg, v, spec, cap));
  return dump(lattice_json(lattice_probe(alg, nodes, probes, seed, cap)));
}

std::string fiber(const UqAlgebra& alg, int x, const std::vector<int>& ns, std::size_t cap) {
  py::gil_scoped_release unlock;
  return dump(family_json(verify_fiber_family(alg, x - 1, ns, cap)));
}

py::list selfcheck(const UqAlgebra& alg, std::size_t hopf_samples, std::size_t law_samples, int max_height,
                   std::uint64_t seed) {
  std::vector<SuiteResult> results;
  {
    py::gil_scoped_release unlock;
    results = run_selfcheck(alg, hopf_samples, law_samples, max_height, seed);
  }
  py::list out;
  for (const auto& r : results) {
    py::dict d;
    d["algebra"] = r.algebra;
    d["suite"] = r.suite;
    d["checked"] = r.checked;
    d["failed"] = r.failed;
    d["first_failure"] = r.first_failure;
    d["passed"] = r.passed();
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic for cyclic adjoint modules of quantized enveloping algebras";

  static py::exception<CapExceededError> cap_exceeded(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const CapExceededError& e) {
      PyErr_SetString(cap_exceeded.ptr(), e.what());
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.attr("DEFAULT_CAP") = kDefaultCap;

  py::class_<UqAlgebra, std::unique_ptr<UqAlgebra>>(m, "Algebra")
      .def(py::init([](const std::string& type, int rank) {
             if (type.size() != 1) throw std::invalid_argument("type is a single letter A..G");
             return std::make_unique<UqAlgebra>(CartanDatum::build(type[0], rank));
           }),
           py::arg("type"), py::arg("rank"))
      .def_property_readonly("name", [](const UqAlgebra& a) { return a.datum().name(); })
      .def_property_readonly("rank", &UqAlgebra::rank)
      .def("cartan_matrix", [](const UqAlgebra& a) { return a.datum().cartan_matrix(); })
      .def("positive_roots", [](const UqAlgebra& a) { return a.datum().positive_roots(); })
      .def("normalize", [](const UqAlgebra& a, const std::string& s) { return render_element(parse_element(s, a)); })
      .def("multiply",
           [](const UqAlgebra& a, const std::string& x, const std::string& y) {
             return render_element(a.multiply(parse_element(x, a), parse_element(y, a)));
           })
      .def("ad",
           [](const UqAlgebra& a, const std::string& x, const std::string& y) {
             return render_element(ad_left(a, parse_element(x, a), parse_element(y, a)));
           })
      .def("graded_dim", [](const UqAlgebra& a, const RootCoords& nu) { return a.graded_dim(nu, Side::F); });

  m.def("closure_json", &closure, py::arg("alg"), py::arg("elem"), py::arg("levi") = py::none(),
        py::arg("x") = py::none(), py::arg("cap") = kDefaultCap);
  m.def("decompose_json", &decompose, py::arg("alg"), py::arg("elem"), py::arg("levi") = py::none(),
        py::arg("x") = py::none(), py::arg("cap") = kDefaultCap);
  m.def("poset_json", &poset, py::arg("alg"), py::arg("elem"), py::arg("levi") = py::none(),
        py::arg("x") = py::none(), py::arg("probes") = 16, py::arg("seed") = 1, py::arg("cap") = kDefaultCap);
  m.def("lattice_json", &lattice, py::arg("alg"), py::arg("elems"), py::arg("levi") = py::none(),
        py::arg("x") = py::none(), py::arg("probes") = 16, py::arg("seed") = 1, py::arg("cap") = kDefaultCap);
  m.def("fiber_json", &fiber, py::arg("alg"), py::arg("x"), py::arg("ns"), py::arg("cap") = kDefaultCap);
  m.def("selfcheck", &selfcheck, py::arg("alg"), py::arg("hopf_samples") = 20, py::arg("law_samples") = 30,
        py::arg("max_height") = 5, py::arg("seed") = 1);
}
