// Copyright 2026 The gaussbound Authors
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

#include <optional>
#include <string>
#include <vector>

#include "gaussbound/bound_family.hpp"
#include "gaussbound/circuit.hpp"
#include "gaussbound/core.hpp"
#include "gaussbound/decomposition.hpp"
#include "gaussbound/errors.hpp"
#include "gaussbound/separability.hpp"
#include "gaussbound/sweep.hpp"

namespace py = pybind11;
using namespace gaussbound;

namespace {

// Modes are zero-based; an empty split means first half | second half.
Bipartition make_partition(const CovarianceMatrix& g, const std::vector<int>& a, const std::vector<int>& b) {
  if (a.empty() && b.empty()) {
    const int n = g.n_modes();
    return Bipartition::split(n / 2, n - n / 2);
  }
  Bipartition p{a, b};
  p.validate(g.n_modes());
  return p;
}

ClassifyOptions classify_options(double tol_sep, double tol_ppt) {
  ClassifyOptions o;
  o.tol_sep = tol_sep;
  o.tol_ppt = tol_ppt;
  return o;
}

BoundFamilyParams make_params(double beta1, double beta2, const std::vector<double>& alpha) {
  if (alpha.size() != 8) throw Error(ErrorCode::InvalidParams, "alpha needs eight entries");
  BoundFamilyParams p;
  p.beta1 = beta1;
  p.beta2 = beta2;
  std::copy(alpha.begin(), alpha.end(), p.alpha.begin());
  return p;
}

BoundaryKind parse_kind(const std::string& kind) {
  if (kind == "bound_to_free") return BoundaryKind::BoundToFree;
  if (kind == "sep_to_bound") return BoundaryKind::SepToBound;
  throw Error(ErrorCode::InvalidAxis, "kind must be 'bound_to_free' or 'sep_to_bound'");
}

py::dict verdict_dict(const EntanglementVerdict& v) {
  py::dict d;
  d["class"] = std::string(to_string(v.cls));
  d["ppt_margin"] = v.ppt_margin;
  d["slack"] = v.slack ? py::cast(*v.slack) : py::none();
  d["iterations"] = v.iterations;
  return d;
}


}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bound entangled Gaussian states: construction, certification, decomposition, circuits";

  static py::exception<Error> error(m, "GaussboundError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object args = py::make_tuple(std::string(to_string(e.code())), std::string(e.what()));
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  m.def("preset", [](int example) { return preset_matrix(example).data(); }, py::arg("example"),
        "One of the four worked examples (1..4) as an 8x8 interleaved matrix.");
  m.def("construct",
        [](double beta1, double beta2, const std::vector<double>& alpha) {
          return construct(make_params(beta1, beta2, alpha)).data();
        },
        py::arg("beta1"), py::arg("beta2"), py::arg("alpha"));
  m.def("validate_params",
        [](double beta1, double beta2, const std::vector<double>& alpha) {
          std::vector<std::string> out;
          for (ParamViolation v : validate_params(make_params(beta1, beta2, alpha))) out.emplace_back(to_string(v));
          return out;
        },
        py::arg("beta1"), py::arg("beta2"), py::arg("alpha"));

  m.def("is_valid_covariance",
        [](const Matrix& g) {
          const PsdCheck c = is_valid_covariance(CovarianceMatrix(g));
          return py::make_tuple(c.ok, c.margin);
        },
        py::arg("gamma"), "(ok, margin) for gamma + i sigma >= 0.");
  m.def("is_ppt",
        [](const Matrix& g, const std::vector<int>& a, const std::vector<int>& b) {
          const CovarianceMatrix cm(g);
          const PsdCheck c = is_ppt(cm, make_partition(cm, a, b));
          return py::make_tuple(c.ok, c.margin);
        },
        py::arg("gamma"), py::arg("modes_a") = std::vector<int>{}, py::arg("modes_b") = std::vector<int>{});
  m.def("partial_transpose",
        [](const Matrix& g, const std::vector<int>& a, const std::vector<int>& b) {
          const CovarianceMatrix cm(g);
          return partial_transpose(cm, make_partition(cm, a, b)).data();
        },
        py::arg("gamma"), py::arg("modes_a") = std::vector<int>{}, py::arg("modes_b") = std::vector<int>{});
  m.def("min_slack",
        [](const Matrix& g, const std::vector<int>& a, const std::vector<int>& b) {
          const CovarianceMatrix cm(g);
          const SdpSolution s = solve_min_slack(build_problem(cm, make_partition(cm, a, b)));
          py::dict d;
          d["t_star"] = s.t_star;
          d["t_lower"] = s.t_lower;
          d["gamma_a"] = s.gamma_a;
          d["status"] = std::string(sdp::to_string(s.status));
          d["iterations"] = s.iterations;
          return d;
        },
        py::arg("gamma"), py::arg("modes_a") = std::vector<int>{}, py::arg("modes_b") = std::vector<int>{});
  m.def("classify",
        [](const Matrix& g, const std::vector<int>& a, const std::vector<int>& b, double tol_sep,
           double tol_ppt) {
          const CovarianceMatrix cm(g);
          return verdict_dict(classify(cm, make_partition(cm, a, b), classify_options(tol_sep, tol_ppt)));
        },
        py::arg("gamma"), py::arg("modes_a") = std::vector<int>{}, py::arg("modes_b") = std::vector<int>{}, py::arg("tol_sep") = 1e-6, py::arg("tol_ppt") = 1e-9);
  m.def("is_minimal_ppt",
        [](const Matrix& g, const std::vector<int>& a, const std::vector<int>& b) {
          const CovarianceMatrix cm(g);
          const MinimalityReport r = is_minimal_ppt(cm, make_partition(cm, a, b));
          py::dict d;
          d["minimal"] = r.minimal;
          d["ranks"] = py::make_tuple(r.rank_sigma, r.rank_tilde, r.rank_stacked);
          return d;
        },
        py::arg("gamma"), py::arg("modes_a") = std::vector<int>{}, py::arg("modes_b") = std::vector<int>{});

  m.def("symplectic_eigenvalues", [](const Matrix& g) { return symplectic_eigenvalues(CovarianceMatrix(g)); },
        py::arg("gamma"));
  m.def("williamson",
        [](const Matrix& g) {
          const WilliamsonForm w = williamson(CovarianceMatrix(g));
          return py::make_tuple(w.s.data(), w.nu);
        },
        py::arg("gamma"), "(S, nu) with gamma = S diag(nu1, nu1, ...) S^T.");
  m.def("euler",
        [](const Matrix& s) {
          const EulerForm e = euler_decompose(SymplecticTransform(s));
          return py::make_tuple(e.k.data(), e.r, e.l.data());
        },
        py::arg("s"), "(K, r, L) with S = K (+)diag(e^{-r}, e^{r}) L.");

  m.def("preparation_state",
        [](double kappa, double tau, bool use_factors, bool include_a0, bool include_pi_phase) {
          Fig1Options o;
          o.use_factors = use_factors;
          o.include_a0 = include_a0;
          o.include_pi_phase = include_pi_phase;
          return fig1_state(kappa, tau, o).data();
        },
        py::arg("kappa"), py::arg("tau"), py::arg("use_factors") = true, py::arg("include_a0") = true,
        py::arg("include_pi_phase") = true,
        "Output covariance of the preparation circuit for thermal scale kappa and squeezing tau.");
  m.def("scan",
        [](const std::vector<double>& kappa, const std::vector<double>& tau, int threads) {
          SweepOptions o;
          o.threads = threads;
          const SweepGrid g = scan(kappa, tau, o);
          std::vector<std::vector<std::optional<std::string>>> out(kappa.size());
          for (std::size_t i = 0; i < kappa.size(); ++i) {
            for (std::size_t j = 0; j < tau.size(); ++j) {
              const SweepCell& c = g.at(i, j);
              out[i].push_back(c.cls ? std::optional<std::string>(to_string(*c.cls)) : std::nullopt);
            }
          }
          return out;
        },
        py::arg("kappa"), py::arg("tau"), py::arg("threads") = 0,
        py::call_guard<py::gil_scoped_release>());
  m.def("find_boundary",
        [](double kappa, const std::string& kind, double tol) {
          BoundaryOptions o;
          o.tol = tol;
          const Bracket b = find_boundary(kappa, parse_kind(kind), o);
          return py::make_tuple(b.tau_lo, b.tau_hi);
        },
        py::arg("kappa"), py::arg("kind") = "bound_to_free", py::arg("tol") = 1e-4);
  m.def("estimate_asymptote",
        [](double kappa_max, double tol, int rungs) {
          const AsymptoteEstimate a = estimate_asymptote(kappa_max, tol, rungs);
          return py::make_tuple(a.value, a.error);
        },
        py::arg("kappa_max") = 1281.0, py::arg("tol") = 0.005, py::arg("rungs") = 5);
}
