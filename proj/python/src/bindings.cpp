// Copyright 2026 The imprecise-ror Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Python entry points. Documents cross the boundary as JSON text; the
// package wrapper converts to and from dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ror/api.hpp"

namespace py = pybind11;
using ror::io::Json;

namespace {

PyObject* ror_error = nullptr;

ror::io::ProblemDocument document(const std::string& problem) {
  return ror::io::parse_problem(ror::io::parse_text(problem));
}

// Runs f on the parsed problem; ror::Error becomes imprecise_ror.RorError
// carrying the JSON error document.
template <class F>
std::string run(const std::string& problem, bool collapse, F f) {
  try {
    const auto doc = document(problem);
    return f(ror::api::Query{doc, collapse});
  } catch (const ror::Error& e) {
    PyErr_SetString(ror_error, ror::io::dump(ror::io::to_json(e)).c_str());
    throw py::error_already_set();
  }
}

std::string dump(const Json& j) { return ror::io::dump(j); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Robust ordinal regression with interval evaluations";
  ror_error = PyErr_NewException("imprecise_ror._core.RorError", PyExc_RuntimeError, nullptr);
  m.attr("RorError") = py::handle(ror_error);

  m.def("validate", [](const std::string& p, bool collapse) {
    return run(p, collapse, [](const auto& q) { return dump(ror::api::validate(q)); });
  }, py::arg("problem"), py::arg("collapse") = false);

  m.def("dominance", [](const std::string& p, const std::string& index, bool collapse) {
    return run(p, collapse, [&](const auto& q) { return dump(ror::api::dominance(q, index)); });
  }, py::arg("problem"), py::arg("index") = "classic", py::arg("collapse") = false);

  m.def("relations", [](const std::string& p, const std::string& family, const std::string& index, bool collapse) {
    return run(p, collapse, [&](const auto& q) {
      return dump(ror::api::relations(q, ror::io::parse_family(family), index));
    });
  }, py::arg("problem"), py::arg("family") = "necessary", py::arg("index") = "classic", py::arg("collapse") = false);

  m.def("group", [](const std::string& p, const std::string& outer, const std::string& inner,
                    const std::string& index, const std::vector<std::string>& dms, bool exclude, bool collapse) {
    return run(p, collapse, [&](const auto& q) {
      return dump(ror::api::group(q, ror::io::parse_family(outer), ror::io::parse_family(inner), index, dms,
                                  exclude));
    });
  }, py::arg("problem"), py::arg("outer") = "necessary", py::arg("inner") = "necessary",
     py::arg("index") = "classic", py::arg("dms") = std::vector<std::string>{},
     py::arg("exclude_incompatible") = false, py::arg("collapse") = false);

  m.def("sorting", [](const std::string& p, const std::string& index, bool joint, bool collapse) {
    return run(p, collapse, [&](const auto& q) { return dump(ror::api::sorting(q, index, joint)); });
  }, py::arg("problem"), py::arg("index") = "classic", py::arg("joint") = false, py::arg("collapse") = false);

  m.def("extreme_ranks", [](const std::string& p, const std::string& index, bool collapse) {
    return run(p, collapse, [&](const auto& q) { return dump(ror::api::extreme_ranks(q, index)); });
  }, py::arg("problem"), py::arg("index") = "classic", py::arg("collapse") = false);

  m.def("diagnose", [](const std::string& p, int max_sets, long budget, bool collapse) {
    ror::DiagnosisOptions o;
    o.max_sets = max_sets;
    o.node_budget = budget;
    return run(p, collapse, [&](const auto& q) { return dump(ror::api::diagnose(q, o)); });
  }, py::arg("problem"), py::arg("max_sets") = ror::DiagnosisOptions{}.max_sets,
     py::arg("budget") = ror::DiagnosisOptions{}.node_budget, py::arg("collapse") = false);

  m.def("sweep", [](const std::string& p, const std::string& index, bool collapse) {
    return run(p, collapse, [&](const auto& q) { return dump(ror::api::sweep(q, index)); });
  }, py::arg("problem"), py::arg("index") = "classic", py::arg("collapse") = false);

  m.def("dot", [](const std::string& p, const std::string& relation, const std::string& index, bool collapse) {
    return run(p, collapse, [&](const auto& q) { return ror::api::dot(q, relation, index); });
  }, py::arg("problem"), py::arg("relation") = "necessary", py::arg("index") = "classic",
     py::arg("collapse") = false);

  m.def("check_properties", [](std::uint64_t seed, int instances, int max_dms) {
    py::gil_scoped_release release;
    return dump(ror::api::check_properties(seed, instances, max_dms));
  }, py::arg("seed") = 42, py::arg("instances") = 50, py::arg("max_dms") = 3);
}
