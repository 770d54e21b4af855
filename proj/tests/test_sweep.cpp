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
#include <functional>
#include <string>
#include <vector>

#include "gaussbound/errors.hpp"
#include "gaussbound/reference_data.hpp"
#include "gaussbound/sweep.hpp"

using namespace gaussbound;

namespace {

ErrorCode thrown_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no exception");
  return ErrorCode::Format;
}

SweepCell cell(EntanglementClass c) {
  SweepCell s;
  s.cls = c;
  return s;
}

}  // namespace

TEST_CASE("axis parsing") {
  const std::vector<double> a = parse_axis("1:2:5");
  REQUIRE(a.size() == 5);
  CHECK(a.front() == 1.0);
  CHECK(a.back() == 2.0);
  CHECK(a[2] == doctest::Approx(1.5));
  CHECK(parse_axis("3:3:1") == std::vector<double>{3.0});
  for (std::string bad : {"1:2", "1:2:0", "a:2:3", "2:1:3", "1:2:1", "1:2:3:4", "1:inf:3"}) {
    CAPTURE(bad);
    CHECK(thrown_code([&] { parse_axis(bad); }) == ErrorCode::InvalidAxis);
  }
  CHECK_NOTHROW(validate_axis({1.0, 2.0}, 1.0, true, "kappa"));
  CHECK(thrown_code([] { validate_axis({1.0, 2.0}, 1.0, false, "tau"); }) == ErrorCode::InvalidAxis);
  CHECK(thrown_code([] { validate_axis({0.5, 2.0}, 1.0, true, "kappa"); }) == ErrorCode::InvalidAxis);
  CHECK(thrown_code([] { validate_axis({2.0, 2.0}, 1.0, true, "kappa"); }) == ErrorCode::InvalidAxis);
  CHECK(default_threads() >= 1);
}

TEST_CASE("single cells") {
  CHECK(evaluate_cell(3.0, 1.0).cls == EntanglementClass::Separable);
  CHECK(evaluate_cell(3.0, 1.05).cls == EntanglementClass::BoundEntangled);
  CHECK(evaluate_cell(3.0, 2.0).cls == EntanglementClass::FreeEntangled);
  CHECK(evaluate_cell(1.0, 1.2).cls == EntanglementClass::FreeEntangled);
  const SweepCell far = evaluate_cell(5001.0, 1.59);
  CHECK(far.cls == EntanglementClass::FreeEntangled);
  CHECK(far.ppt_margin < 0.0);
}

TEST_CASE("scan") {
  const std::vector<double> kappa = {1.0, 3.0, 9.0};
  const std::vector<double> tau = parse_axis("1:2:6");
  SweepOptions one;
  one.threads = 1;
  SweepOptions many;
  many.threads = 4;
  const SweepGrid a = scan(kappa, tau, one);
  const SweepGrid b = scan(kappa, tau, many);
  REQUIRE(a.cells.size() == 18);
  CHECK(a.inconclusive_count() == 0);
  CHECK(monotone_violations(a).empty());
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    CHECK(a.cells[i].cls == b.cells[i].cls);
    CHECK(a.cells[i].ppt_margin == b.cells[i].ppt_margin);
    CHECK(a.cells[i].slack == b.cells[i].slack);
  }
  for (std::size_t i = 0; i < kappa.size(); ++i) CHECK(a.at(i, 0).cls == EntanglementClass::Separable);
  CHECK_NOTHROW(require_conclusive(a));

  // Inverse squeezing gives the same classification.
  std::vector<double> inv;
  for (auto it = tau.rbegin(); it != tau.rend(); ++it) inv.push_back(1.0 / *it);
  const SweepGrid c = scan(kappa, inv, many);
  for (std::size_t i = 0; i < kappa.size(); ++i) {
    for (std::size_t j = 0; j < tau.size(); ++j) CHECK(c.at(i, tau.size() - 1 - j).cls == a.at(i, j).cls);
  }

  CHECK(thrown_code([&] { scan({0.5}, tau); }) == ErrorCode::InvalidAxis);
  CHECK(thrown_code([&] { scan(kappa, {0.0, 1.0}); }) == ErrorCode::InvalidAxis);
}

TEST_CASE("monotone order and conclusiveness on synthetic grids") {
  using C = EntanglementClass;
  SweepGrid g;
  g.kappa = {3.0};
  g.tau = {0.5, 0.8, 1.0, 1.2, 1.5};
  g.cells = {cell(C::FreeEntangled), cell(C::BoundEntangled), cell(C::Separable),
             cell(C::BoundEntangled), cell(C::FreeEntangled)};
  CHECK(monotone_violations(g).empty());
  g.cells[3] = cell(C::FreeEntangled);
  g.cells[4] = cell(C::BoundEntangled);
  const auto v = monotone_violations(g);
  REQUIRE(v.size() == 1);
  CHECK(v[0].tau_index == 4);
  g.cells[1] = cell(C::Separable);
  g.cells[0] = cell(C::BoundEntangled);
  CHECK(monotone_violations(g).size() == 1);
  g.cells[0] = cell(C::FreeEntangled);
  g.cells[0].cls.reset();
  CHECK(g.inconclusive_count() == 1);
  CHECK(thrown_code([&] { require_conclusive(g); }) == ErrorCode::Inconclusive);
  CHECK_NOTHROW(require_conclusive(g, 0.5));
}

TEST_CASE("boundaries") {
  const double star = reference::squeezing_tau();
  const Bracket b = find_boundary(3.0, BoundaryKind::BoundToFree);
  CHECK(b.tau_lo <= star + 1e-3);
  CHECK(b.tau_hi >= star - 1e-3);
  CHECK(b.tau_hi - b.tau_lo <= 1e-4);
  CHECK(evaluate_cell(3.0, b.tau_lo).cls == EntanglementClass::BoundEntangled);
  CHECK(evaluate_cell(3.0, b.tau_hi).cls == EntanglementClass::FreeEntangled);

  const Bracket s = find_boundary(3.0, BoundaryKind::SepToBound);
  CHECK(s.tau_hi - s.tau_lo <= 1e-4);
  CHECK(s.tau_hi < b.tau_lo);
  CHECK(evaluate_cell(3.0, s.tau_lo).cls == EntanglementClass::Separable);
  CHECK(evaluate_cell(3.0, s.tau_hi).cls == EntanglementClass::BoundEntangled);

  CHECK(thrown_code([] { find_boundary(1.0, BoundaryKind::BoundToFree); }) == ErrorCode::NoBracket);

  BoundaryOptions coarse;
  coarse.tol = 1e-3;
  const BoundaryCurve curve = boundary_curve({1.0, 3.0, 5.0}, BoundaryKind::BoundToFree, coarse, 2);
  REQUIRE(curve.kappa.size() == 3);
  CHECK_FALSE(curve.converged[0]);
  CHECK(curve.converged[1]);
  CHECK(curve.converged[2]);
  CHECK(curve.tau_upper[1] - curve.tau_lower[1] <= 1e-3);
  CHECK(curve.tau_lower[2] > curve.tau_lower[1]);

  CHECK(thrown_code([] { estimate_asymptote(21.0); }) == ErrorCode::InvalidKappa);
}
