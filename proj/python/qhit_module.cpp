// Copyright 2026 The qhit Authors
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


#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qhit/cli/commands.hpp"
#include "qhit/hitting.hpp"
#include "qhit/ksmh.hpp"

namespace py = pybind11;
using namespace qhit;

namespace {

SuperOp channel_of(const std::vector<Matrix>& kraus) { return represent(KrausChannel(kraus, 1e-9)); }

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

double tau(const std::vector<Matrix>& kraus, const Matrix& basis, const Matrix& rho, const std::string& method) {
  const auto m = method_from_string(method);
  if (!m) throw ParameterError("unknown method '" + method + "'");
  return tau_channel(channel_of(kraus), GoalSubspace(basis), rho, *m).tau;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Mean hitting times of quantum channels";

  static py::exception<Error> base(m, "QhitError");
  static py::exception<SpectralObstruction> spectral(m, "SpectralObstruction", base.ptr());
  static py::exception<ReducibleError> reducible(m, "ReducibleError", base.ptr());
  static py::exception<ValidationError> validation(m, "ValidationError", base.ptr());
  static py::exception<NumericalError> numerical(m, "NumericalError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const SpectralObstruction& e) {
      PyErr_SetString(spectral.ptr(), e.what());
    } catch (const ReducibleError& e) {
      PyErr_SetString(reducible.ptr(), e.what());
    } catch (const ValidationError& e) {
      PyErr_SetString(validation.ptr(), e.what());
    } catch (const NumericalError& e) {
      PyErr_SetString(numerical.ptr(), e.what());
    } catch (const Error& e) {
      PyErr_SetString(base.ptr(), e.what());
    }
  });

  m.def("represent", [](const std::vector<Matrix>& kraus) { return channel_of(kraus).mat(); }, py::arg("kraus"),
        "sum_i V_i (x) conj(V_i)");
  m.def("induce",
        [](const std::vector<Matrix>& kraus, const Matrix& basis) { return induce(channel_of(kraus), GoalSubspace(basis)).rep(); },
        py::arg("kraus"), py::arg("basis"));
  m.def("assumption_one",
        [](const std::vector<Matrix>& kraus, const Matrix& basis) {
          return assumption_one(channel_of(kraus), GoalSubspace(basis)).holds;
        },
        py::arg("kraus"), py::arg("basis"));
  m.def("group_inverse", [](const Matrix& a) { return group_inverse(a).asharp; }, py::arg("a"));
  m.def("tau", &tau, py::arg("kraus"), py::arg("basis"), py::arg("rho"), py::arg("method") = "ksmh-group",
        "mean hitting time of span(basis) from rho");
  m.def("run_cli", &run_cli, py::arg("args"), "run the command line front end; returns (code, stdout, stderr)");
}
