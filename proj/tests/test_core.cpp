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
#include <random>
#include <vector>

#include "gaussbound/bound_family.hpp"
#include "gaussbound/core.hpp"
#include "gaussbound/errors.hpp"
#include "gaussbound/random.hpp"
#include "gaussbound/reference_data.hpp"
#include "test_util.hpp"

using namespace gaussbound;
using gbtest::max_abs_diff;

TEST_CASE("symplectic_form") {
  Matrix one(2, 2);
  one << 0, 1, -1, 0;
  CHECK(symplectic_form(1) == one);

  Matrix grouped = Matrix::Zero(8, 8);
  grouped.topRightCorner(4, 4).setIdentity();
  grouped.bottomLeftCorner(4, 4) = -Matrix::Identity(4, 4);
  CHECK(symplectic_form(4, Ordering::Grouped) == grouped);

  const Matrix s = symplectic_form(4);
  CHECK(s * s == -Matrix::Identity(8, 8));
  CHECK(s == gbtest::sigma_oracle(4));
}

TEST_CASE("is_valid_covariance") {
  const PsdCheck vac = is_valid_covariance(vacuum_state(4));
  CHECK(vac.ok);
  CHECK(std::abs(vac.margin) < 1e-12);

  CHECK(is_valid_covariance(preset_matrix(1)).ok);

  const Matrix half = 0.5 * Matrix::Identity(2, 2);
  const PsdCheck bad = is_valid_covariance(half, Ordering::Interleaved);
  CHECK_FALSE(bad.ok);
  const double oracle = gbtest::block_min_eig(half, gbtest::sigma_oracle(1));
  CHECK(oracle == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(bad.margin == doctest::Approx(oracle).epsilon(1e-12));

  Matrix asym = Matrix::Identity(2, 2);
  asym(0, 1) = 1e-6;
  CHECK_THROWS_AS(CovarianceMatrix{asym}, Error);
}

TEST_CASE("partial_transpose") {
  const Bipartition part = family_partition();
  const CovarianceMatrix diag = thermal_state(std::vector<double>{0.5, 1.0, 2.0, 0.0});
  CHECK(partial_transpose(diag, part).data() == diag.data());

  const CovarianceMatrix g = preset_matrix(1);
  const Matrix pt = partial_transpose(g, part).data();
  // Lambda flips p of modes 3 and 4 (rows 5 and 7, zero-based).
  Matrix lambda = Matrix::Identity(8, 8);
  lambda(5, 5) = lambda(7, 7) = -1.0;
  CHECK(max_abs_diff(pt, lambda * g.data() * lambda) == 0.0);
  CHECK(pt(1, 7) == -g(1, 7));
  CHECK(pt(3, 5) == -g(3, 5));
  CHECK(pt(0, 4) == g(0, 4));
  CHECK(pt(2, 6) == g(2, 6));
  CHECK(partial_transpose(partial_transpose(g, part), part).data() == g.data());
}

TEST_CASE("is_ppt") {
  for (int e = 1; e <= 4; ++e) CHECK(is_ppt(preset_matrix(e), family_partition()).ok);

  const CovarianceMatrix tmsv = two_mode_squeezed_vacuum(1.0);
  const Bipartition part = Bipartition::split(1, 1);
  const PsdCheck ppt = is_ppt(tmsv, part);
  CHECK_FALSE(ppt.ok);
  Matrix pt = tmsv.data();
  for (int i = 0; i < 4; ++i) {
    pt(3, i) = -pt(3, i);
    pt(i, 3) = -pt(i, 3);
  }
  const double oracle = gbtest::block_min_eig(pt, gbtest::sigma_oracle(2));
  CHECK(ppt.margin == doctest::Approx(oracle).epsilon(1e-10));
  CHECK(oracle < -0.5);

  random::Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int na = 1 + trial % 2, nb = 1 + (trial / 2) % 2;
    const CovarianceMatrix prod =
        direct_sum(random::random_covariance(na, rng), random::random_covariance(nb, rng));
    CHECK(is_ppt(prod, Bipartition::split(na, nb)).ok);
  }
}

TEST_CASE("apply_symplectic") {
  const CovarianceMatrix g = preset_matrix(2);
  CHECK(apply_symplectic(SymplecticTransform::identity(4), g).data() == g.data());

  const double tau = 1.7;
  Matrix sq(2, 2);
  sq << tau, 0, 0, 1 / tau;
  const CovarianceMatrix out = apply_symplectic(SymplecticTransform(sq), vacuum_state(1));
  CHECK(out(0, 0) == doctest::Approx(tau * tau));
  CHECK(out(1, 1) == doctest::Approx(1 / (tau * tau)));
  CHECK(out(0, 1) == 0.0);

  const SymplecticTransform chain(reference::euler_k() * reference::squeezer_block() *
                                  reference::euler_l());
  const CovarianceMatrix d(reference::williamson_diagonal());
  CHECK(max_abs_diff(apply_symplectic(chain, d).data(), preset_matrix(1).data()) < 1e-9);

  CHECK_THROWS_AS(apply_symplectic(SymplecticTransform::identity(2), g), Error);
}

TEST_CASE("thermal_state") {
  CHECK(thermal_state(std::vector<double>{0.0}).data() == Matrix::Identity(2, 2));
  CHECK(thermal_state(std::vector<double>{1.0}).data() == 3.0 * Matrix::Identity(2, 2));
  Eigen::VectorXd d(8);
  d << 1, 1, 1, 1, 3, 3, 3, 3;
  CHECK(thermal_state(std::vector<double>{0, 0, 1, 1}).data() == Matrix(d.asDiagonal()));
  CHECK(thermal_state(std::vector<double>{0, 0, 1, 1}).data() == reference::williamson_diagonal());
  try {
    thermal_state(std::vector<double>{0.0, -0.1});
    FAIL("expected NegativeOccupation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NegativeOccupation);
  }
}

TEST_CASE("reorder") {
  const CovarianceMatrix g = preset_matrix(1);
  const CovarianceMatrix grouped = reorder(g, Ordering::Grouped);
  CHECK(grouped.ordering() == Ordering::Grouped);
  Matrix g1(4, 4), g2(4, 4);
  g1 << 2, 0, 1, 0,
        0, 2, 0, -1,
        1, 0, 2, 0,
        0, -1, 0, 2;
  g2 << 1, 0, 0, -1,
        0, 1, -1, 0,
        0, -1, 4, 0,
        -1, 0, 0, 4;
  CHECK(grouped.data().topLeftCorner(4, 4) == g1);
  CHECK(grouped.data().bottomRightCorner(4, 4) == g2);
  CHECK(grouped.data().topRightCorner(4, 4).isZero(0.0));

  Matrix p = Matrix::Zero(8, 8);
  const int rows[8] = {0, 2, 4, 6, 1, 3, 5, 7};
  for (int i = 0; i < 8; ++i) p(i, rows[i]) = 1.0;
  CHECK(grouping_permutation(4) == p);
  CHECK(max_abs_diff(p * g.data() * p.transpose(), grouped.data()) == 0.0);

  CHECK(reorder(vacuum_state(3), Ordering::Grouped).data() == Matrix::Identity(6, 6));
  CHECK(reorder(grouped, Ordering::Interleaved).data() == g.data());
  CHECK(symplectic_form(4, Ordering::Grouped) == p * symplectic_form(4) * p.transpose());
}

TEST_CASE("direct_sum") {
  CHECK(direct_sum(vacuum_state(1), vacuum_state(1)).data() == Matrix::Identity(4, 4));
  Eigen::Vector4d d(3, 3, 1, 1);
  CHECK(direct_sum(thermal_state(std::vector<double>{1.0}), vacuum_state(1)).data() ==
        Matrix(d.asDiagonal()));

  const BlockReduction blocks = block_reduce(preset_matrix(1));
  Matrix grouped = Matrix::Zero(8, 8);
  grouped.topLeftCorner(4, 4) = blocks.q_block;
  grouped.bottomRightCorner(4, 4) = blocks.p_block;
  CHECK(reorder(CovarianceMatrix(grouped, Ordering::Grouped), Ordering::Interleaved).data() ==
        preset_matrix(1).data());

  CHECK_THROWS_AS(direct_sum(vacuum_state(1), reorder(vacuum_state(1), Ordering::Grouped)), Error);

  const CovarianceMatrix a = thermal_state(std::vector<double>{1.0, 2.0});
  const CovarianceMatrix b = thermal_state(std::vector<double>{3.0});
  const CovarianceMatrix ga = reorder(a, Ordering::Grouped), gbm = reorder(b, Ordering::Grouped);
  CHECK(reorder(direct_sum(ga, gbm), Ordering::Interleaved).data() == direct_sum(a, b).data());
}

TEST_CASE("symplectic invariants on random transforms") {
  random::Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 4;
    const SymplecticTransform s = random::random_symplectic(n, rng, 1.0);
    CHECK(symplectic_residual(s.data()) <= 1e-10);
    CHECK(s.data().determinant() == doctest::Approx(1.0).epsilon(1e-8));
    const CovarianceMatrix g = random::random_covariance(n, rng);
    const double before = is_valid_covariance(g).margin;
    const PsdCheck after = is_valid_covariance(apply_symplectic(s, g));
    CHECK(after.ok);
    CHECK(after.margin >= -1e-9 * linalg::spectral_norm(apply_symplectic(s, g).data()));
    (void)before;
    CHECK(max_abs_diff((s * s.inverse()).data(), Matrix::Identity(2 * n, 2 * n)) < 1e-9);
  }
  Matrix bad = Matrix::Identity(2, 2);
  bad(0, 0) = 2.0;
  CHECK_THROWS_AS(SymplecticTransform{bad}, Error);
}

TEST_CASE("bipartition validation") {
  CHECK_THROWS_AS(Bipartition({{0}, {0}}).validate(2), Error);
  CHECK_THROWS_AS(Bipartition({{0}, {}}).validate(1), Error);
  CHECK_THROWS_AS(Bipartition({{0}, {2}}).validate(2), Error);
  CHECK_NOTHROW(Bipartition({{1}, {0}}).validate(2));
}
