#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <bit>

#include "cfauto/backbone.hpp"
#include "cfauto/equation.hpp"
#include "cfauto/error.hpp"
#include "cfauto/json_io.hpp"
#include "cfauto/poly_literal.hpp"
#include "cfauto/reference_examples.hpp"
#include "cfauto/verification.hpp"

namespace py = pybind11;
using namespace cfauto;

namespace {

using Letters = std::vector<std::string>;

BackboneSpec make_spec(const Letters& prefix, const Letters& period) {
  return BackboneSpec::from_names(prefix, period);
}

std::vector<UniPoly> images_for(const BackboneSpec& spec, const std::map<std::string, std::string>& assignment) {
  for (const auto& [name, _] : assignment) {
    if (!spec.alphabet()->find(name)) throw Error(ErrorCode::SymbolUniverseMismatch, "unknown letter '" + name + "'");
  }
  std::vector<UniPoly> images;
  for (const auto& name : spec.alphabet()->names()) {
    const auto it = assignment.find(name);
    if (it == assignment.end()) throw Error(ErrorCode::ConstantLetterAssignment, "letter '" + name + "' is unassigned");
    images.push_back(parse_poly_literal(it->second));
  }
  return images;
}

py::dict derive(const Letters& prefix, const Letters& period) {
  const auto eq = derive_equation(make_spec(prefix, period));
  py::dict out;
  out["delta"] = eq.delta.to_string();
  out["A"] = eq.A.to_string();
  Letters b;
  for (const auto& x : eq.B) b.push_back(x.to_string());
  out["B"] = b;
  out["equation"] = eq.to_string();
  out["json"] = equation_to_json(eq).dump();
  return out;
}

py::dict specialize(const Letters& prefix, const Letters& period, const std::map<std::string, std::string>& assignment) {
  const auto spec = make_spec(prefix, period);
  const auto eq = specialize_equation(derive_equation(spec), images_for(spec, assignment));
  py::dict out;
  out["A"] = eq.A.to_string();
  Letters b;
  for (const auto& x : eq.B) b.push_back(x.to_string());
  out["B"] = b;
  out["equation"] = eq.to_string();
  return out;
}

py::dict verify(const Letters& prefix, const Letters& period, const std::map<std::string, std::string>& assignment,
                std::int64_t precision) {
  const auto spec = make_spec(prefix, period);
  const auto eq = specialize_equation(derive_equation(spec), images_for(spec, assignment));
  const auto report = residual_valuation(eq, spec, precision);
  py::dict out;
  out["clean"] = report.clean();
  out["valuation"] = report.valuation ? py::object(py::int_(*report.valuation)) : py::object(py::none());
  out["precision"] = report.checked_precision;
  return out;
}

Letters sequence(const Letters& prefix, const Letters& period, std::size_t count) {
  const auto spec = make_spec(prefix, period);
  Letters out;
  for (auto s : s_prefix(spec, count)) out.push_back(spec.alphabet()->name(s));
  return out;
}

py::dict automaton(const Letters& prefix, const Letters& period) {
  const auto spec = make_spec(prefix, period);
  const auto dfa = kernel_automaton(spec);
  Letters emit;
  for (auto s : dfa.output) emit.push_back(spec.alphabet()->name(s));
  py::dict out;
  out["next"] = dfa.next;
  out["emit"] = emit;
  out["description"] = dfa.describe();
  return out;
}

py::object search(const Letters& prefix, const Letters& period, const std::vector<Elem>& values, unsigned q,
                  unsigned deg_x, unsigned deg_t, std::int64_t precision) {
  if (q < 2 || !std::has_single_bit(q)) throw Error(ErrorCode::UnsupportedFieldSize, "q must be a power of 2");
  const auto spec = make_spec(prefix, period);
  const auto field = gf2s_field(static_cast<unsigned>(std::countr_zero(q)));
  if (precision <= 0) precision = 2 * static_cast<std::int64_t>(deg_x + 1) * (deg_t + 1);
  const auto gamma = gamma_series(spec, field, values, 2 * precision + deg_t + 1);
  const auto found = relation_search(gamma, deg_x, deg_t, precision);
  if (!found.certificate) return py::none();
  py::dict out;
  Letters coeffs;
  for (const auto& c : found.certificate->coeffs) coeffs.push_back(c.to_string());
  out["coeffs"] = coeffs;
  out["deg_x"] = found.certificate->deg_x();
  out["deg_t"] = found.certificate->deg_t();
  out["verified_precision"] = found.certificate->verified_precision;
  return std::move(out);
}

std::vector<std::pair<std::string, Letters>> check_examples() {
  std::vector<std::pair<std::string, Letters>> out;
  for (const auto& ex : reference_examples()) {
    auto check = check_reference_example(ex);
    out.emplace_back(check.name, check.mismatches);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Algebraic continued fractions built from ultimately periodic backbones";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result(
      [&]() { return py::exception<Error>(m, "CfautoError", PyExc_ValueError); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const py::object& type = error_type.get_stored();
      py::object exc = type(e.what());
      exc.attr("code") = error_code_name(e.code());
      PyErr_SetObject(type.ptr(), exc.ptr());
    }
  });

  m.def("derive", &derive, py::arg("prefix"), py::arg("period"));
  m.def("specialize", &specialize, py::arg("prefix"), py::arg("period"), py::arg("assignment"));
  m.def("verify", &verify, py::arg("prefix"), py::arg("period"), py::arg("assignment"), py::arg("precision") = 256);
  m.def("sequence", &sequence, py::arg("prefix"), py::arg("period"), py::arg("count"));
  m.def("automaton", &automaton, py::arg("prefix"), py::arg("period"));
  m.def("search", &search, py::arg("prefix"), py::arg("period"), py::arg("values"), py::arg("q") = 2,
        py::arg("deg_x") = 2, py::arg("deg_t") = 8, py::arg("precision") = 0);
  m.def("check_examples", &check_examples);
}
