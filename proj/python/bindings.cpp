// SPDX-FileCopyrightText: © 2026 The liminal authors
//
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "liminal/classify.hpp"
#include "liminal/dual_complex.hpp"
#include "liminal/enumerate.hpp"
#include "liminal/errors.hpp"
#include "liminal/io.hpp"
#include "liminal/milnor.hpp"
#include "liminal/report.hpp"
#include "liminal/suite.hpp"
#include "liminal/t1.hpp"
#include "liminal/weight_system.hpp"
#if LIMINAL_WITH_CLI
#include "liminal/cli.hpp"
#endif

namespace py = pybind11;

namespace {

using liminal::BigInt;
using liminal::Rational;

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::object to_py(const Rational& r) {
  const py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(liminal::numerator(r)), to_py(liminal::denominator(r)));
}

py::list to_py(const std::vector<BigInt>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

py::object parse_json(const liminal::io::Json& doc) {
  const py::object loads = py::module_::import("json").attr("loads");
  return loads(doc.dump());
}

py::dict t1_dict(const liminal::T1Decomposition& t1) {
  py::dict by_weight;
  for (const auto& [w, dim] : t1.by_weight) by_weight[py::int_(w)] = to_py(dim);
  py::dict out;
  out["by_weight"] = by_weight;
  out["h1_log"] = to_py(t1.h1_log);
  out["gr_hn_link"] = to_py(t1.gr_hn_link);
  out["im_h1_log_minus_E"] = to_py(t1.im_h1_log_minus_E);
  out["dim_K"] = to_py(t1.dim_K);
  out["dim_K_prime"] = to_py(t1.dim_K_prime);
  out["labels_valid"] = t1.labels_valid;
  return out;
}

}  // namespace

PYBIND11_MODULE(_liminal, m) {
  m.doc() = "Invariants of isolated weighted-homogeneous hypersurface singularities";

  auto& base = py::register_exception<liminal::Error>(m, "LiminalError");
  py::register_exception<liminal::InvalidWeightSystem>(m, "InvalidWeightSystem", base.ptr());
  py::register_exception<liminal::NormalizationViolation>(m, "NormalizationViolation", base.ptr());
  py::register_exception<liminal::NonPolynomialQuotient>(m, "NonPolynomialQuotient", base.ptr());
  py::register_exception<liminal::NonIntegerMilnorNumber>(m, "NonIntegerMilnorNumber", base.ptr());
  py::register_exception<liminal::DegreeTooLarge>(m, "DegreeTooLarge", base.ptr());
  py::register_exception<liminal::DimensionTooLarge>(m, "DimensionTooLarge", base.ptr());
  py::register_exception<liminal::InvalidComplex>(m, "InvalidComplex", base.ptr());
  py::register_exception<liminal::InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<liminal::ParseError>(m, "ParseError", base.ptr());

  py::class_<liminal::WeightSystem>(m, "WeightSystem")
      .def(py::init<std::vector<std::int64_t>, std::int64_t>(), py::arg("weights"), py::arg("degree"))
      .def_static("parse", &liminal::WeightSystem::parse, py::arg("text"))
      .def_property_readonly("weights", &liminal::WeightSystem::weights)
      .def_property_readonly("input_weights", &liminal::WeightSystem::input_weights)
      .def_property_readonly("degree", &liminal::WeightSystem::degree)
      .def_property_readonly("scale", &liminal::WeightSystem::scale)
      .def_property_readonly("dim", &liminal::WeightSystem::dim)
      .def_property_readonly("weight_sum", &liminal::WeightSystem::weight_sum)
      .def("__str__", &liminal::WeightSystem::to_string)
      .def("__repr__", [](const liminal::WeightSystem& ws) { return "WeightSystem('" + ws.to_string() + "')"; })
      .def("__eq__", [](const liminal::WeightSystem& a, const liminal::WeightSystem& b) { return a == b; })
      .def("__hash__", [](const liminal::WeightSystem& ws) {
        return py::hash(py::make_tuple(py::tuple(py::cast(ws.weights())), ws.degree()));
      });

  py::class_<liminal::SingularityClass>(m, "SingularityClass")
      .def_readonly("log_canonical", &liminal::SingularityClass::log_canonical)
      .def_readonly("zero_liminal", &liminal::SingularityClass::zero_liminal)
      .def_readonly("rational", &liminal::SingularityClass::rational)
      .def_readonly("max_du_bois", &liminal::SingularityClass::max_du_bois)
      .def_readonly("max_rational", &liminal::SingularityClass::max_rational)
      .def_readonly("liminal_level", &liminal::SingularityClass::liminal_level)
      .def_property_readonly("label", &liminal::SingularityClass::label)
      .def("__repr__", [](const liminal::SingularityClass& c) { return "SingularityClass('" + c.label() + "')"; });

  m.def("liminal_defect", &liminal::liminal_defect, py::arg("ws"));
  m.def("minimal_exponent", [](const liminal::WeightSystem& ws) { return to_py(liminal::minimal_exponent(ws)); },
        py::arg("ws"));
  m.def("classify", &liminal::classify, py::arg("ws"));

  m.def("poincare_polynomial", [](const liminal::WeightSystem& ws) {
    return to_py(liminal::poincare_polynomial(ws).coeffs);
  }, py::arg("ws"));
  m.def("milnor_number", [](const liminal::WeightSystem& ws) { return to_py(liminal::milnor_number(ws)); },
        py::arg("ws"));
  m.def("spectrum", [](const liminal::WeightSystem& ws) {
    py::list out;
    for (const auto& e : liminal::spectrum(ws).entries) out.append(py::make_tuple(to_py(e.value), to_py(e.multiplicity)));
    return out;
  }, py::arg("ws"), "List of (spectral number as Fraction, multiplicity), ascending.");
  m.def("s_vector", [](const liminal::WeightSystem& ws) { return to_py(liminal::s_vector(ws)); }, py::arg("ws"));

  m.def("weight_of_monomial", [](const liminal::WeightSystem& ws, const std::vector<std::int64_t>& alpha) {
    return liminal::weight_of_monomial(ws, alpha);
  }, py::arg("ws"), py::arg("alpha"));
  m.def("t1_decomposition", [](const liminal::WeightSystem& ws) { return t1_dict(liminal::t1_decomposition(ws)); },
        py::arg("ws"));
  m.def("t_minus", [](const liminal::WeightSystem& ws) { return to_py(liminal::t_minus(ws)); }, py::arg("ws"));
  m.def("analyze", [](const liminal::WeightSystem& ws) { return parse_json(liminal::io::to_json(liminal::analyze(ws))); },
        py::arg("ws"), "Full report as the JSON structure emitted by the CLI.");

  m.def("enumerate_diagonal_liminal", [](int dim, std::uint64_t node_budget) {
    liminal::EnumerationOptions options;
    options.node_budget = node_budget;
    py::list out;
    for (const auto& f : liminal::enumerate_diagonal_liminal(dim, options)) out.append(py::tuple(py::cast(f.exponents)));
    return out;
  }, py::arg("dim"), py::arg("node_budget") = liminal::EnumerationOptions{}.node_budget);

  m.def("global_t1_dim", [](int n) { return to_py(liminal::suite::global_t1_dim(n)); }, py::arg("n"));
  m.def("dim_A_system", [](int n) { return to_py(liminal::suite::dim_A_system(n)); }, py::arg("n"));
  m.def("moduli_E_dim", [](int n) { return to_py(liminal::suite::moduli_E_dim(n)); }, py::arg("n"));
  m.def("t_minus_formula", [](int n) { return to_py(liminal::suite::t_minus_formula(n)); }, py::arg("n"));
  m.def("verify_identity", [](int n) { return parse_json(liminal::io::to_json(liminal::suite::verify_identity(n))); },
        py::arg("n"));
  m.def("local_image_dims", [](int n) {
    const auto d = liminal::suite::local_image_dims(n);
    return py::make_tuple(to_py(d.full), to_py(d.image), to_py(d.codim));
  }, py::arg("n"));
  m.def("series_report", [](int n_min, int n_max) {
    py::list out;
    for (const auto& r : liminal::suite::series_report(n_min, n_max)) out.append(parse_json(liminal::io::to_json(r)));
    return out;
  }, py::arg("n_min"), py::arg("n_max"));

  py::class_<liminal::DualComplexData>(m, "DualComplex")
      .def_static("from_json", [](const std::string& text) {
        try {
          return liminal::DualComplexData::from_json(nlohmann::json::parse(text));
        } catch (const nlohmann::json::parse_error& e) {
          throw liminal::ParseError(e.what());
        }
      }, py::arg("text"))
      .def_property_readonly("n", &liminal::DualComplexData::n)
      .def_property_readonly("components", &liminal::DualComplexData::components);
  m.def("e1_page", &liminal::e1_page, py::arg("complex"));
  m.def("dual_complex_cohomology", &liminal::dual_complex_cohomology, py::arg("complex"));
  m.def("check_zero_liminal_constraints", [](const liminal::DualComplexData& d, std::optional<int> m_range) {
    py::list out;
    for (const auto& v : liminal::check_zero_liminal_constraints(d, m_range)) out.append(py::make_tuple(v.clause, v.message));
    return out;
  }, py::arg("complex"), py::arg("vanishing_range") = py::none());

#if LIMINAL_WITH_CLI
  m.def("cli_run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = liminal::cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs the command-line front end in-process; returns (exit_code, stdout, stderr).");
#endif
}
