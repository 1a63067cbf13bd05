#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tropwall/grassmann.hpp"
#include "tropwall/io.hpp"
#include "tropwall/suite.hpp"
#include "tropwall/toric.hpp"
#include "tropwall/wallcross.hpp"

namespace py = pybind11;
using namespace tropwall;

// Results cross the boundary as JSON text; the Python package decodes them.
namespace {

Ideal ideal(const std::string& text, const std::vector<std::string>& ring, bool laurent) {
  Ideal I = read_ideal(text, ring, laurent);
  if (I.is_zero()) throw std::invalid_argument("zero ideal");
  return I;
}

Vector vec(const std::vector<std::string>& v) {
  Vector out;
  for (const auto& x : v) out.push_back(parse_rational(x));
  return out;
}

Matrix mat(const std::vector<std::vector<std::string>>& m) {
  Matrix out;
  for (const auto& r : m) out.push_back(vec(r));
  return out;
}

IntMatrix int_matrix(const std::vector<std::vector<long>>& A) {
  IntMatrix out;
  for (const auto& r : A) out.emplace_back(r.begin(), r.end());
  return out;
}

std::vector<std::string> strings(const Vector& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::vector<std::string> strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.attr("format_version") = kFormatVersion;

  m.def("parse_ideal", [](const std::string& text, const std::vector<std::string>& ring, bool laurent) {
    Ideal I = ideal(text, ring, laurent);
    return std::make_pair(I.ring()->names, strings(I.generators()));
  }, py::arg("text"), py::arg("ring") = std::vector<std::string>{}, py::arg("laurent") = false);

  m.def("groebner_basis", [](const std::string& text, const std::string& order, const std::vector<std::string>& ring) {
    return strings(buchberger(ideal(text, ring, false), OrderDescriptor::parse(order)).elements);
  }, py::arg("text"), py::arg("order") = "grevlex", py::arg("ring") = std::vector<std::string>{});

  m.def("initial_ideal", [](const std::string& text, const std::vector<std::string>& w,
                            const std::vector<std::string>& ring, bool laurent) {
    return strings(initial_ideal(ideal(text, ring, laurent), vec(w)).generators());
  }, py::arg("text"), py::arg("weight"), py::arg("ring") = std::vector<std::string>{}, py::arg("laurent") = false);

  m.def("tropicalize", [](const std::string& text, const std::vector<std::string>& ring, bool laurent,
                          std::size_t budget) {
    return to_json(tropicalize(ideal(text, ring, laurent), budget)).dump();
  }, py::arg("text"), py::arg("ring") = std::vector<std::string>{}, py::arg("laurent") = false,
     py::arg("budget") = 10000);

  m.def("groebner_fan", [](const std::string& text, const std::vector<std::string>& ring, std::size_t budget) {
    return to_json(groebner_fan(ideal(text, ring, false), budget)).dump();
  }, py::arg("text"), py::arg("ring") = std::vector<std::string>{}, py::arg("budget") = 10000);

  m.def("plot_fan", [](const std::string& fan_json) { return to_json(plot_fan(fan_from_json(json::parse(fan_json)))).dump(); });

  m.def("plucker_ideal", [](int k, int n) {
    Ideal I = plucker_ideal(k, n);
    return std::make_pair(I.ring()->names, strings(I.generators()));
  });
  m.def("plucker_coords", [](const std::vector<std::vector<std::string>>& M) { return strings(plucker_coords(mat(M))); });

  m.def("toric_ideal", [](const std::vector<std::vector<long>>& A) {
    return strings(toric_ideal(int_matrix(A)).generators());
  });
  m.def("ehrhart", [](const std::vector<std::vector<long>>& A) {
    ToricData td = toric_data(int_matrix(A));
    EhrhartPolynomial e = ehrhart_polynomial(td.Q, &td.lattice);
    return std::make_pair(strings(Vector(e.coefficients.begin(), e.coefficients.end())), e.normalized_volume().get_str());
  });

  m.def("no_body", [](const std::vector<std::vector<std::string>>& M) {
    return to_json(no_body(WeightMatrix(mat(M)))).dump();
  });

  m.def("kappa", [](const std::string& text, std::size_t i1, std::size_t i2, const std::vector<std::string>& ring) {
    Ideal I = ideal(text, ring, false);
    TropicalVariety t = tropicalize(I);
    if (i1 >= t.cones.size() || i2 >= t.cones.size()) throw py::index_error("cone id out of range");
    return to_string(kappa(wall_setup(t, i1, i2, I)));
  }, py::arg("text"), py::arg("cone1"), py::arg("cone2"), py::arg("ring") = std::vector<std::string>{});

  m.def("run_acceptance", [](bool long_run) {
    py::list out;
    for (const auto& r : run_acceptance_suite(long_run)) {
      py::dict d;
      d["id"] = r.id;
      d["name"] = r.name;
      d["pass"] = r.pass;
      d["skipped"] = r.skipped;
      d["detail"] = r.detail;
      d["seconds"] = r.seconds;
      out.append(d);
    }
    return out;
  }, py::arg("long_run") = false);
}
