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

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "gaussbound/bound_family.hpp"
#include "gaussbound/core.hpp"
#include "gaussbound/errors.hpp"
#include "gaussbound/linalg.hpp"
#include "gaussbound/random.hpp"
#include "gaussbound/sdp.hpp"
#include "gaussbound/separability.hpp"
#include "test_util.hpp"

using namespace gaussbound;

namespace {

// Symmetric two-mode squeezed thermal state: n (cosh 2r I, sinh 2r Z).
CovarianceMatrix squeezed_thermal(double n, double r) {
  Matrix g = Matrix::Zero(4, 4);
  const double c = n * std::cosh(2 * r), s = n * std::sinh(2 * r);
  g(0, 0) = g(1, 1) = g(2, 2) = g(3, 3) = c;
  g(0, 2) = g(2, 0) = s;
  g(1, 3) = g(3, 1) = -s;
  return CovarianceMatrix(g);
}

double min_eig_general(const Matrix& a) {
  Eigen::EigenSolver<Matrix> es(a, false);
  return es.eigenvalues().real().minCoeff();
}

}  // namespace

TEST_CASE("problem dimensions") {
  const SeparabilityProblem p = build_problem(preset_matrix(1), family_partition());
  CHECK(p.num_variables() == 10);
  const sdp::Blocks blocks = p.blocks(Vector::Zero(10));
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].rows() == 8);
  CHECK(blocks[1].rows() == 16);

  const SeparabilityProblem q = build_problem(vacuum_state(2), Bipartition::split(1, 1));
  CHECK(q.num_variables() == 3);
  CHECK(q.blocks(Vector::Zero(3))[0].rows() == 4);
  CHECK(q.blocks(Vector::Zero(3))[1].rows() == 8);

  const SeparabilityProblem r = build_problem(vacuum_state(3), Bipartition::split(2, 1));
  CHECK(r.num_variables() == 10);
}

TEST_CASE("constraint embedding") {
  const Matrix emb = linalg::real_embedding(Matrix::Zero(2, 2), gbtest::sigma_oracle(1));
  Eigen::EigenSolver<Matrix> es(emb, false);
  std::vector<double> ev;
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(es.eigenvalues()[i].imag()) < 1e-14);
    ev.push_back(es.eigenvalues()[i].real());
  }
  std::sort(ev.begin(), ev.end());
  CHECK(ev[0] == doctest::Approx(-1.0));
  CHECK(ev[1] == doctest::Approx(-1.0));
  CHECK(ev[2] == doctest::Approx(1.0));
  CHECK(ev[3] == doctest::Approx(1.0));

  // Block 2 at gamma_A = 0 is emb(gamma) - emb(0 (+) i sigma_B).
  const SeparabilityProblem q = build_problem(vacuum_state(2), Bipartition::split(1, 1));
  Matrix im = Matrix::Zero(4, 4);
  im.bottomRightCorner(2, 2) = gbtest::sigma_oracle(1);
  const Matrix expected = linalg::real_embedding(Matrix::Identity(4, 4), -im);
  CHECK(gbtest::max_abs_diff(q.blocks(Vector::Zero(3))[1], expected) < 1e-15);

  // Block 1 at gamma_A = I is emb(I + i sigma_A), PSD with a zero eigenvalue.
  Vector x = q.variables(Matrix::Identity(2, 2));
  CHECK(q.gamma_a(x) == Matrix::Identity(2, 2));
  CHECK(std::abs(min_eig_general(q.blocks(x)[0])) < 1e-14);
}

TEST_CASE("min slack values") {
  const Bipartition part = family_partition();
  const double frozen[4] = {0.0548861143366648, 0.0848169726644764, 0.106401395577387,
                            0.0400618519306558};
  for (int e = 1; e <= 4; ++e) {
    CAPTURE(e);
    const SdpSolution sol = solve_min_slack(build_problem(preset_matrix(e), part));
    CHECK(sol.status == sdp::Status::Optimal);
    CHECK(std::abs(sol.t_star - frozen[e - 1]) < 1e-6);
    CHECK(sol.gap <= 1e-7);
    CHECK(sol.min_block_eig >= -1e-8);
    CHECK(sol.t_lower <= sol.t_star);
    CHECK(sol.t_star - sol.t_lower < 1e-7);
  }

  const SdpSolution vac = solve_min_slack(build_problem(vacuum_state(4), part));
  CHECK(vac.status == sdp::Status::Optimal);
  CHECK(vac.t_star <= 1e-7);
  CHECK(vac.t_star >= -1e-7);
}

TEST_CASE("two-mode states against the closed-form criterion") {
  const Bipartition part = Bipartition::split(1, 1);
  // Separable iff n exp(-2r) >= 1.
  const SdpSolution far = solve_min_slack(build_problem(squeezed_thermal(4.0, 0.3), part));
  CHECK(far.t_star <= 1e-7);
  for (double ratio : {0.9, 0.99, 1.01, 1.1}) {
    CAPTURE(ratio);
    const double r = 0.4;
    const double n = ratio * std::exp(2 * r);
    const CovarianceMatrix g = squeezed_thermal(n, r);
    CHECK(is_valid_covariance(g).ok);
    const bool separable = ratio >= 1.0;
    CHECK(is_separable(g, part).separable == separable);
    CHECK(is_ppt(g, part).ok == separable);
  }

  const CovarianceMatrix tmsv = two_mode_squeezed_vacuum(0.5);
  CHECK_FALSE(is_separable(tmsv, part).separable);
  const EntanglementVerdict v = classify(tmsv, part);
  CHECK(v.cls == EntanglementClass::FreeEntangled);
  CHECK_FALSE(v.slack.has_value());
  Matrix pt = tmsv.data();
  for (int i = 0; i < 4; ++i) {
    pt(3, i) = -pt(3, i);
    pt(i, 3) = -pt(i, 3);
  }
  const double oracle = gbtest::block_min_eig(pt, gbtest::sigma_oracle(2));
  CHECK(oracle < 0.0);
  CHECK(v.ppt_margin == doctest::Approx(oracle).epsilon(1e-9));
}

TEST_CASE("classify") {
  const EntanglementVerdict ex1 = classify(preset_matrix(1), family_partition());
  CHECK(ex1.cls == EntanglementClass::BoundEntangled);
  REQUIRE(ex1.slack.has_value());
  CHECK(*ex1.slack > 1e-6);
  CHECK(std::string(to_string(ex1.cls)) == "bound_entangled");

  const CovarianceMatrix th =
      direct_sum(thermal_state(std::vector<double>{0.5, 2.0}), thermal_state(std::vector<double>{1.0, 0.0}));
  const EntanglementVerdict sep = classify(th, family_partition());
  CHECK(sep.cls == EntanglementClass::Separable);
  CHECK(is_separable(th, family_partition()).separable);
  CHECK(std::string(to_string(sep.cls)) == "separable");
  CHECK(std::string(to_string(EntanglementClass::FreeEntangled)) == "free_entangled");

  for (int e = 1; e <= 4; ++e) CHECK_FALSE(is_separable(preset_matrix(e), family_partition()).separable);
}

TEST_CASE("unresolvable tolerance is reported") {
  // The vacuum optimum is zero; a threshold below the solver accuracy
  // cannot be decided.
  try {
    is_separable(vacuum_state(2), Bipartition::split(1, 1), 1e-14);
    FAIL("expected Inconclusive");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Inconclusive);
  }
  sdp::Options tiny;
  tiny.max_iter = 2;
  CHECK_THROWS_AS(is_separable(preset_matrix(1), family_partition(), 1e-6, tiny), Error);
}

TEST_CASE("soundness and 1x1 agreement with PPT") {
  random::Rng rng(17);
  const Bipartition part = Bipartition::split(1, 1);
  int entangled = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const CovarianceMatrix g = random::random_covariance(2, rng, 2.0, 0.8);
    const bool ppt = is_ppt(g, part).ok;
    const EntanglementVerdict v = classify(g, part);
    CHECK(v.cls != EntanglementClass::BoundEntangled);
    CHECK((v.cls == EntanglementClass::Separable) == ppt);
    entangled += v.cls == EntanglementClass::FreeEntangled;
  }
  CHECK(entangled > 0);
  CHECK(entangled < 60);
}

TEST_CASE("adding noise does not increase the slack") {
  random::Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const int na = 1 + trial % 2;
    const CovarianceMatrix g =
        direct_sum(random::random_covariance(na, rng), random::random_covariance(2, rng));
    const Bipartition part = Bipartition::split(na, 2);
    const double t0 = solve_min_slack(build_problem(g, part)).t_star;
    const Matrix r = Matrix::Random(g.data().rows(), g.data().rows());
    const CovarianceMatrix noisy(g.data() + 0.3 * r * r.transpose());
    CHECK(solve_min_slack(build_problem(noisy, part)).t_star <= t0 + 1e-6);
  }
}

TEST_CASE("local symplectic invariance") {
  random::Rng rng(29);
  const Bipartition part = family_partition();
  for (int trial = 0; trial < 10; ++trial) {
    const CovarianceMatrix g = trial < 4 ? preset_matrix(trial + 1)
                                         : construct(gbtest::random_family_params(rng));
    const SymplecticTransform local =
        direct_sum(random::random_symplectic(2, rng, 0.5), random::random_symplectic(2, rng, 0.5));
    const EntanglementVerdict a = classify(g, part);
    const EntanglementVerdict b = classify(apply_symplectic(local, g), part);
    CHECK(a.cls == b.cls);
  }
}
