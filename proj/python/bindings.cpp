// Copyright 2026 The sccckit Authors
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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sccckit/suites.hpp"

namespace py = pybind11;
using namespace sccckit;

namespace {

using Rows = std::vector<std::vector<Complex>>;

CMorphism to_morphism(const Rows& rows, const std::string& dom, const std::string& cod) {
  const std::size_t m = rows.size();
  const std::size_t n = m ? rows.front().size() : 0;
  const ObjectExpr d = dom.empty() ? object_of_dim(n, "A") : parse_object(dom);
  const ObjectExpr c = cod.empty() ? object_of_dim(m, "B") : parse_object(cod);
  CMorphism f(d, c);
  if (f.rows() != m || (m && f.cols() != n)) throw TypeMismatch("matrix shape does not fit the objects");
  for (std::size_t r = 0; r < m; ++r) {
    if (rows[r].size() != n) throw TypeMismatch("ragged matrix");
    for (std::size_t k = 0; k < n; ++k) f(r, k) = rows[r][k];
  }
  return f;
}

Rows to_rows(const CMorphism& f) {
  Rows out(f.rows(), std::vector<Complex>(f.cols()));
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t c = 0; c < f.cols(); ++c) out[r][c] = f(r, c);
  return out;
}

CMorphism state(const std::vector<Complex>& v) {
  Rows rows;
  for (auto x : v) rows.push_back({x});
  return to_morphism(rows, "I", "");
}

}  // namespace

PYBIND11_MODULE(_sccckit, m) {
  m.doc() = "Executable checks for strongly compact closed matrix models";

  py::register_exception<SccError>(m, "SccError");

  m.def(
      "run_suite",
      [](const std::string& suite, const std::string& model, std::size_t trials, std::uint64_t seed,
         double tolerance, std::size_t max_dim, const std::string& nu, bool corrupt_trace,
         const std::string& state_text) {
        SuiteOptions o{suite, model, trials, seed, tolerance, max_dim, nu, corrupt_trace, state_text};
        return emit_report(run_suite(o), ReportFormat::Json);
      },
      py::arg("suite"), py::arg("model") = "fdhilb", py::arg("trials") = 200, py::arg("seed") = 0,
      py::arg("tolerance") = 1e-9, py::arg("max_dim") = 6, py::arg("nu") = "1",
      py::arg("corrupt_trace") = false, py::arg("state") = "",
      "Runs a verification suite and returns the JSON report text.");

  m.def("suite_names", &suite_names);

  m.def(
      "name",
      [](const Rows& f) {
        auto n = name(to_morphism(f, "", ""));
        std::vector<Complex> out;
        for (std::size_t r = 0; r < n.rows(); ++r) out.push_back(n(r, 0));
        return out;
      },
      "The name of f as a flat state vector.");
  m.def("unit", [](std::size_t d) {
    auto eta = unit<ComplexField>(object_of_dim(d, "A"));
    std::vector<Complex> out;
    for (std::size_t r = 0; r < eta.rows(); ++r) out.push_back(eta(r, 0));
    return out;
  });
  m.def("hs_inner", [](const Rows& f, const Rows& g) {
    return hs_inner(to_morphism(f, "", ""), to_morphism(g, "", "")).value();
  });
  m.def("hs_norm_sq", [](const Rows& f) { return hs_norm_sq(to_morphism(f, "", "")).value(); });
  m.def("trace", [](const Rows& h) { return trace(to_morphism(h, "", "A[" + std::to_string(h.size()) + "]")).value(); });
  m.def("doubled", [](const Rows& f) { return to_rows(doubled(to_morphism(f, "", ""))); });
  m.def("derived_sum", [](const Rows& f, const Rows& g) {
    return to_rows(derived_sum(to_morphism(f, "", ""), to_morphism(g, "", "")));
  });
  m.def("phase_equal", [](const Rows& f, const Rows& g, double tolerance) {
    return wequal(lift(to_morphism(f, "", "")), lift(to_morphism(g, "", "")), Tolerance{tolerance, 1e-12});
  }, py::arg("f"), py::arg("g"), py::arg("tolerance") = 1e-9);
  m.def("canonical_rep", [](const Rows& f) { return to_rows(canonical_rep(to_morphism(f, "", ""))); });
  m.def("born_prob", [](const std::vector<Complex>& psi, const Rows& p) {
    auto s = state(psi);
    return born_prob(s, to_morphism(p, to_string(s.cod()), to_string(s.cod()))).value().real();
  });
  m.def(
      "scalar_sum",
      [](double s, double t, const std::string& nu) {
        return scalar_sum(make_scalar<ComplexField>(s), make_scalar<ComplexField>(t), Rational::parse(nu))
            .value()
            .real();
      },
      py::arg("s"), py::arg("t"), py::arg("nu") = "1");
  m.def(
      "teleport",
      [](const std::vector<Complex>& psi) {
        if (psi.size() != 2) throw TypeMismatch("teleportation input must have two entries");
        Rows rows = {{psi[0]}, {psi[1]}};
        auto run = run_teleportation(to_morphism(rows, "I", "Q[2]"));
        py::list out;
        for (const auto& b : run.branches) {
          py::dict d;
          d["output"] = std::vector<Complex>{b.output(0, 0), b.output(1, 0)};
          d["corrected"] = std::vector<Complex>{b.corrected(0, 0), b.corrected(1, 0)};
          d["probability"] = b.probability;
          out.append(d);
        }
        return out;
      },
      "Teleports a qubit state; returns one dict per measurement outcome.");
}
