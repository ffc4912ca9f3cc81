// Python bindings: the report layer exposed as JSON strings plus a few
// direct helpers. The package-level wrappers in galilei/__init__.py parse
// the JSON into dictionaries.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "galilei/report.hpp"
#include "galilei/reps.hpp"
#include "galilei/textio.hpp"

namespace py = pybind11;

namespace {

std::string dump(const galilei::report::Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact verification of Galilei-invariant massless field equations";

  m.def("convention", [] { return galilei::reps::convention_string(); });
  m.def("labels", [] {
    std::vector<std::string> out;
    for (const auto& l : galilei::reps::enumerate_labels()) out.push_back(l.str());
    return out;
  });
  m.def("catalogue_names", [] { return galilei::fieldsys::catalogue_names(); });

  m.def("reps_list", [] { return dump(galilei::report::reps_list()); });
  m.def(
      "reps_check",
      [](const std::string& label) { return dump(galilei::report::reps_check(label)); },
      py::arg("label") = "all");
  m.def("reps_indecomposable", [](const std::string& label) {
    return dump(galilei::report::reps_indecomposable(label));
  });
  m.def(
      "contract",
      [](const std::string& scheme, const std::string& rep) {
        return dump(galilei::report::contract_report(scheme, rep, std::nullopt));
      },
      py::arg("scheme"), py::arg("rep") = "four-vector");
  m.def(
      "covariance",
      [](const std::string& system) { return dump(galilei::report::covariance_report(system)); },
      py::arg("system") = "all");
  m.def(
      "reduce",
      [](const std::string& system, const std::vector<std::string>& zero,
         const std::vector<std::string>& drop) {
        return dump(galilei::report::reduce_report(system, zero, drop));
      },
      py::arg("system"), py::arg("zero") = std::vector<std::string>{},
      py::arg("drop") = std::vector<std::string>{});
  m.def("potentials", [](const std::string& scheme) {
    return dump(galilei::report::potentials_report(scheme));
  });
  m.def(
      "limits",
      [](const std::string& scheme, const std::string& target, const std::vector<double>& eps) {
        return dump(galilei::report::limits_report(scheme, target, eps));
      },
      py::arg("scheme"), py::arg("target"), py::arg("eps") = std::vector<double>{});
  m.def("catalog_export", [](const std::string& system) {
    return galilei::textio::export_system(galilei::fieldsys::catalogue(system));
  });
}
