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
#include <vector>

#include "gaussbound/bound_family.hpp"
#include "gaussbound/core.hpp"
#include "gaussbound/decomposition.hpp"
#include "gaussbound/errors.hpp"
#include "gaussbound/random.hpp"
#include "gaussbound/reference_data.hpp"
#include "test_util.hpp"

using namespace gaussbound;
using gbtest::max_abs_diff;

namespace {

// |eigenvalues| of sigma gamma from the general solver, each listed once.
std::vector<double> symplectic_spectrum_oracle(const Matrix& g) {
  const int n = static_cast<int>(g.rows() / 2);
  Eigen::EigenSolver<Matrix> es(gbtest::sigma_oracle(n) * g, false);
  std::vector<double> v;
  for (int i = 0; i < 2 * n; ++i) v.push_back(std::abs(es.eigenvalues()[i].imag()));
  std::sort(v.begin(), v.end());
  std::vector<double> out;
  for (int i = 0; i < 2 * n; i += 2) out.push_back(v[i]);
  return out;
}

bool orthogonal(const Matrix& m, double tol) {
  return max_abs_diff(m * m.transpose(), Matrix::Identity(m.rows(), m.cols())) <= tol;
}

double rel_frob(const Matrix& a, const Matrix& b) { return (a - b).norm() / b.norm(); }

}  // namespace

TEST_CASE("symplectic eigenvalues") {
  const std::vector<double> ex1 = symplectic_eigenvalues(preset_matrix(1));
  REQUIRE(ex1.size() == 4);
  const double expect[4] = {1, 1, 3, 3};
  for (int i = 0; i < 4; ++i) CHECK(std::abs(ex1[i] - expect[i]) <= 1e-9);

  for (double v : symplectic_eigenvalues(vacuum_state(3))) CHECK(std::abs(v - 1.0) < 1e-12);

  const double tau = 1.3;
  Matrix sq(2, 2);
  sq << tau * tau, 0, 0, 1 / (tau * tau);
  const std::vector<double> one = symplectic_eigenvalues(CovarianceMatrix(sq));
  REQUIRE(one.size() == 1);
  CHECK(one[0] == doctest::Approx(1.0).epsilon(1e-12));

  for (int e = 2; e <= 4; ++e) {
    const std::vector<double> lib = symplectic_eigenvalues(preset_matrix(e));
    const std::vector<double> ora = symplectic_spectrum_oracle(preset_matrix(e).data());
    for (int i = 0; i < 4; ++i) CHECK(lib[i] == doctest::Approx(ora[i]).epsilon(1e-9));
  }

  Matrix neg = Matrix::Identity(2, 2);
  neg(0, 0) = -1.0;
  try {
    symplectic_eigenvalues(CovarianceMatrix(neg));
    FAIL("expected NotPositiveDefinite");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPositiveDefinite);
  }
}

TEST_CASE("williamson on fixed inputs") {
  const CovarianceMatrix g1 = preset_matrix(1);
  const WilliamsonForm w = williamson(g1);
  CHECK(w.degenerate);
  CHECK(max_abs_diff(w.diagonal(), reference::williamson_diagonal()) <= 1e-9);
  const Matrix rec = w.s.data() * w.diagonal() * w.s.data().transpose();
  CHECK((rec - g1.data()).norm() <= 1e-9 * g1.data().norm());
  CHECK(symplectic_residual(w.s.data()) <= 1e-10);

  const CovarianceMatrix five(5.0 * Matrix::Identity(2, 2));
  const WilliamsonForm w5 = williamson(five);
  REQUIRE(w5.nu.size() == 1);
  CHECK(w5.nu[0] == doctest::Approx(5.0));
  CHECK(orthogonal(w5.s.data(), 1e-12));
}

TEST_CASE("williamson round trip on random states") {
  random::Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 4;
    const SymplecticTransform s0 = random::random_symplectic(n, rng);
    std::uniform_real_distribution<double> nud(1.0, 4.0);
    std::vector<double> nu0(n);
    for (double& v : nu0) v = nud(rng);
    if (trial % 5 == 0) std::fill(nu0.begin(), nu0.end(), 1.0);
    Matrix d0 = Matrix::Zero(2 * n, 2 * n);
    for (int k = 0; k < n; ++k) d0(2 * k, 2 * k) = d0(2 * k + 1, 2 * k + 1) = nu0[k];
    const CovarianceMatrix g(s0.data() * d0 * s0.data().transpose());
    std::sort(nu0.begin(), nu0.end());

    const WilliamsonForm w = williamson(g);
    CHECK(rel_frob(w.s.data() * w.diagonal() * w.s.data().transpose(), g.data()) <= 1e-9);
    for (int k = 0; k < n; ++k) {
      CHECK(w.nu[k] >= 1.0 - 1e-9);
      CHECK(std::abs(w.nu[k] - nu0[k]) <= 1e-9 * nu0[k]);
    }
    CHECK(std::is_sorted(w.nu.begin(), w.nu.end()));

    const SymplecticTransform t = random::random_symplectic(n, rng);
    const std::vector<double> moved = symplectic_eigenvalues(apply_symplectic(t, g));
    for (int k = 0; k < n; ++k) CHECK(std::abs(moved[k] - w.nu[k]) <= 1e-9 * w.nu[k]);
  }
}

TEST_CASE("euler on fixed inputs") {
  const EulerForm ref = euler_decompose(SymplecticTransform(reference::williamson_symplectic()));
  REQUIRE(ref.r.size() == 4);
  const double tau = reference::squeezing_tau();
  CHECK(tau == doctest::Approx((std::sqrt(17.0) + 1) / 4));
  for (double r : ref.r) CHECK(std::abs(std::exp(r) - tau) <= 1e-9);
  CHECK(std::abs(1 / tau - (std::sqrt(17.0) - 1) / 4) < 1e-15);

  random::Rng rng(43);
  const SymplecticTransform o = random::random_passive(3, rng);
  const EulerForm eo = euler_decompose(o);
  for (double r : eo.r) CHECK(std::abs(r) <= 1e-9);
  CHECK(max_abs_diff(eo.k.data() * eo.l.data(), o.data()) <= 1e-9);

  Matrix d(2, 2);
  d << 2, 0, 0, 0.5;
  const EulerForm e1 = euler_decompose(SymplecticTransform(d));
  REQUIRE(e1.r.size() == 1);
  CHECK(e1.r[0] == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(max_abs_diff(e1.k.data() * e1.squeezers() * e1.l.data(), d) <= 1e-12);

  Matrix bad = Matrix::Identity(2, 2);
  bad(0, 0) = 2.0;
  try {
    euler_decompose(SymplecticTransform(bad, Ordering::Interleaved, 1e6));
    FAIL("expected NotSymplectic");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSymplectic);
  }
}

TEST_CASE("euler on random symplectics") {
  random::Rng rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 4;
    const SymplecticTransform s = random::random_symplectic(n, rng, 1.2);
    const EulerForm e = euler_decompose(s);
    CHECK(orthogonal(e.k.data(), 1e-10));
    CHECK(orthogonal(e.l.data(), 1e-10));
    CHECK(symplectic_residual(e.k.data()) <= 1e-10);
    CHECK(symplectic_residual(e.l.data()) <= 1e-10);
    CHECK(rel_frob(e.k.data() * e.squeezers() * e.l.data(), s.data()) <= 1e-9);
    CHECK(std::is_sorted(e.r.rbegin(), e.r.rend()));
    for (double r : e.r) CHECK(r >= 0.0);

    // Eigenvalues of S S^T are exp(+-2 r_k).
    Eigen::EigenSolver<Matrix> es(s.data() * s.data().transpose(), false);
    std::vector<double> got;
    for (int i = 0; i < 2 * n; ++i) got.push_back(es.eigenvalues()[i].real());
    std::vector<double> want;
    for (double r : e.r) {
      want.push_back(std::exp(2 * r));
      want.push_back(std::exp(-2 * r));
    }
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    for (int i = 0; i < 2 * n; ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-8));
  }
}

TEST_CASE("reference fixture identities") {
  const FixtureReport rep = verify_reference_fixtures();
  CHECK(rep.ok());
  CHECK_NOTHROW(rep.require());
  CHECK(rep.checks.size() >= 7);
  CHECK(reference::williamson_diagonal() ==
        Matrix(Eigen::VectorXd((Eigen::VectorXd(8) << 1, 1, 1, 1, 3, 3, 3, 3).finished()).asDiagonal()));

  Matrix s = reference::williamson_symplectic();
  s(0, 1) += 1e-3;
  const FixtureReport bad = verify_fixture_identities(
      s, reference::euler_k(), reference::euler_l(), reference::squeezer_block(),
      reference::williamson_diagonal(), preset_matrix(1).data());
  CHECK_FALSE(bad.ok());
  CHECK(bad.checks.front().name == "S symplectic");
  CHECK_FALSE(bad.checks.front().ok());
  try {
    bad.require();
    FAIL("expected FixtureMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FixtureMismatch);
    CHECK(std::string(e.what()).find("S symplectic") != std::string::npos);
  }
}
