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

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <functional>
#include <string>

#include "gaussbound/bound_family.hpp"
#include "gaussbound/errors.hpp"
#include "gaussbound/io.hpp"

using namespace gaussbound;

namespace {

ErrorCode thrown_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no exception");
  return ErrorCode::NumericalFailure;
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("round15") {
  CHECK(io::round15(0.1 + 0.2) == 0.3);
  CHECK(io::round15(1.0 / 3.0) == 0.333333333333333);
  CHECK_FALSE(std::signbit(io::round15(-0.0)));
  CHECK(io::round15(-2.5e-300) == -2.5e-300);
}

TEST_CASE("matrix documents") {
  const CovarianceMatrix g = preset_matrix(4);
  const std::string text = io::covariance_to_json(g);
  CHECK(contains(text, "\"format_version\": 1"));
  CHECK(contains(text, "\"ordering\": \"interleaved\""));
  CHECK(io::covariance_to_json(io::covariance_from_json(text)) == text);
  CHECK((io::covariance_from_json(text).data() - g.data()).cwiseAbs().maxCoeff() <= 1e-15);

  Ordering ord = Ordering::Interleaved;
  const Matrix m = io::matrix_from_json(
      R"({"n_modes": 1, "ordering": "grouped", "data": [[1, 0], [0, 1]]})", &ord);
  CHECK(ord == Ordering::Grouped);
  CHECK(m == Matrix::Identity(2, 2));

  // Grouped input comes back in the library's interleaved ordering.
  const CovarianceMatrix grouped_in = io::covariance_from_json(io::matrix_to_json(
      reorder(g, Ordering::Grouped).data(), Ordering::Grouped));
  CHECK((reorder(grouped_in, Ordering::Interleaved).data() - g.data()).cwiseAbs().maxCoeff() <= 1e-15);

  for (const char* bad : {"", "[]", R"({"data": [[1, 0], [0, 1]]})",
                          R"({"n_modes": 1, "data": [[1, 0], [0]]})",
                          R"({"n_modes": 1, "data": [[1, "x"], [0, 1]]})",
                          R"({"n_modes": 2, "data": [[1, 0], [0, 1]]})",
                          R"({"n_modes": 1, "format_version": 2, "data": [[1, 0], [0, 1]]})",
                          R"({"n_modes": 1, "ordering": "diagonal", "data": [[1, 0], [0, 1]]})"}) {
    CAPTURE(std::string(bad));
    CHECK(thrown_code([&] { io::matrix_from_json(bad); }) == ErrorCode::Format);
  }
  CHECK(thrown_code([] { io::covariance_from_json(R"({"n_modes": 1, "data": [[1, 2], [0, 1]]})"); }) ==
        ErrorCode::NonSymmetric);
}

TEST_CASE("parameter documents") {
  for (int e = 1; e <= 4; ++e) {
    const BoundFamilyParams p = preset_params(e);
    const BoundFamilyParams q = io::params_from_json(io::params_to_json(p));
    CHECK(q.beta1 == p.beta1);
    CHECK(q.beta2 == p.beta2);
    CHECK(q.alpha == p.alpha);
  }
  CHECK(thrown_code([] { io::params_from_json(R"({"beta": [1, 2], "alpha": [1, 2, 3]})"); }) ==
        ErrorCode::Format);
}

TEST_CASE("circuit documents") {
  const OpticalCircuit c{3, {BeamSplitter{0, 2, 0.25, -1.0}, PhaseShift{1, 0.5}, Squeezer{2, 0.3}}};
  const std::string text = io::circuit_to_json(c);
  CHECK(contains(text, "\"kind\": \"bs\""));
  CHECK(contains(text, "\"kind\": \"phase\""));
  CHECK(contains(text, "\"kind\": \"squeezer\""));
  const OpticalCircuit back = io::circuit_from_json(text);
  REQUIRE(back.elements.size() == 3);
  const auto& bs = std::get<BeamSplitter>(back.elements[0]);
  CHECK(bs.j == 0);
  CHECK(bs.k == 2);
  CHECK(bs.theta == 0.25);
  CHECK(std::get<PhaseShift>(back.elements[1]).mode == 1);
  CHECK(std::get<Squeezer>(back.elements[2]).r == 0.3);
  CHECK(io::circuit_to_json(back) == text);

  const OpticalCircuit one = io::circuit_from_json(
      R"({"n_modes": 2, "elements": [{"kind": "bs", "modes": [1, 2], "theta": 0.1, "phi": 0}]})");
  CHECK(std::get<BeamSplitter>(one.elements[0]).j == 0);
  CHECK(std::get<BeamSplitter>(one.elements[0]).k == 1);

  CHECK(thrown_code([] {
          io::circuit_from_json(R"({"n_modes": 2, "elements": [{"kind": "mirror", "modes": [1]}]})");
        }) == ErrorCode::Format);
  CHECK(thrown_code([] {
          io::circuit_from_json(
              R"({"n_modes": 2, "elements": [{"kind": "bs", "modes": [1, 3], "theta": 0.1, "phi": 0}]})");
        }) == ErrorCode::Format);
}

TEST_CASE("verdict and csv output") {
  EntanglementVerdict v;
  v.cls = EntanglementClass::BoundEntangled;
  v.ppt_margin = -1e-17;
  v.slack = 0.0548861143366648;
  v.iterations = 12;
  const std::string text = io::verdict_to_json(v);
  CHECK(contains(text, "\"class\": \"bound_entangled\""));
  CHECK(contains(text, "\"iterations\": 12"));
  CHECK(text.find("\"class\"") < text.find("\"ppt_margin\""));
  v.slack.reset();
  CHECK(contains(io::verdict_to_json(v), "\"slack\": null"));

  SweepGrid g;
  g.kappa = {3.0};
  g.tau = {1.0, 2.0};
  SweepCell a;
  a.cls = EntanglementClass::Separable;
  a.slack = -0.5;
  SweepCell b;
  g.cells = {a, b};
  const std::string csv = io::grid_to_csv(g);
  CHECK(csv.rfind("kappa,tau,class,ppt_margin,slack\n", 0) == 0);
  CHECK(contains(csv, "3,1,separable,0,-0.5\n"));
  CHECK(contains(csv, "3,2,inconclusive,0,\n"));

  BoundaryCurve s;
  s.kappa = {3.0};
  s.tau_lower = {1.0};
  s.tau_upper = {1.001};
  s.converged = {true};
  BoundaryCurve f = s;
  f.converged = {false};
  const std::string bcsv = io::boundaries_to_csv(s, f);
  CHECK(bcsv.rfind("kappa,kind,tau_lower,tau_upper,converged\n", 0) == 0);
  CHECK(contains(bcsv, "sep_to_bound"));
  CHECK(contains(bcsv, "bound_to_free"));
}

TEST_CASE("file helpers") {
  const auto path = std::filesystem::temp_directory_path() / "gaussbound_io_test.json";
  io::write_text(path, "{}\n");
  CHECK(io::read_text(path) == "{}\n");
  std::filesystem::remove(path);
  CHECK(thrown_code([&] { io::read_text(path); }) == ErrorCode::Format);
}
