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

#include "gaussbound/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gaussbound/bound_family.hpp"
#include "gaussbound/errors.hpp"
#include "gaussbound/reference_data.hpp"

namespace gaussbound {
namespace {

Eigen::LLT<Matrix> cholesky(const Matrix& gamma) {
  Eigen::LLT<Matrix> llt(gamma);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::NotPositiveDefinite, "covariance matrix is not positive definite");
  }
  return llt;
}

// Removes the components of v along the columns already in `basis`.
Vector project_out(Vector v, const std::vector<Vector>& basis) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : basis) v -= b.dot(v) * b;
  }
  return v;
}

// Picks from `candidates` the vector with the largest component outside
// `basis`, normalized. The candidates span an invariant subspace, so after
// k picks the residual of the best one is still O(1).
Vector best_residual(const std::vector<Vector>& candidates, const std::vector<Vector>& basis) {
  Vector best;
  double best_norm = -1.0;
  for (const auto& c : candidates) {
    Vector r = project_out(c, basis);
    const double nr = r.norm();
    if (nr > best_norm) {
      best_norm = nr;
      best = std::move(r);
    }
  }
  return best / best_norm;
}

}  // namespace

std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& gamma) {
  const int n = gamma.n_modes();
  const Eigen::LLT<Matrix> llt = cholesky(gamma.data());
  const Matrix l = llt.matrixL();
  const Matrix a = l.transpose() * symplectic_form(n, gamma.ordering()) * l;
  const Vector ev = linalg::symmetric_eigenvalues(a.transpose() * a);
  std::vector<double> nu(n);
  for (int k = 0; k < n; ++k) nu[k] = std::sqrt(std::max(0.0, 0.5 * (ev(2 * k) + ev(2 * k + 1))));
  return nu;
}

Matrix WilliamsonForm::diagonal() const {
  Vector d(2 * nu.size());
  for (std::size_t k = 0; k < nu.size(); ++k) d(2 * k) = d(2 * k + 1) = nu[k];
  return d.asDiagonal();
}

WilliamsonForm williamson(const CovarianceMatrix& input) {
  const CovarianceMatrix gamma =
      input.ordering() == Ordering::Interleaved ? input : reorder(input, Ordering::Interleaved);
  const int n = gamma.n_modes();
  const int d = 2 * n;
  const Eigen::LLT<Matrix> llt = cholesky(gamma.data());
  const Matrix l = llt.matrixL();
  // O^T A O = (+) nu_k J for an orthogonal O; then S = L O D^{-1/2}.
  const Matrix a = l.transpose() * symplectic_form(n) * l;
  Eigen::SelfAdjointEigenSolver<Matrix> es(linalg::symmetrized(a.transpose() * a));
  const Vector ev = es.eigenvalues();
  Vector nu_sorted(d);
  for (int i = 0; i < d; ++i) nu_sorted(i) = std::sqrt(std::max(0.0, ev(i)));

  std::vector<Vector> basis;
  std::vector<double> nu;
  for (const auto& cluster : linalg::cluster_sorted(nu_sorted, kDegeneracyTol)) {
    std::vector<Vector> candidates;
    for (int i : cluster) candidates.push_back(es.eigenvectors().col(i));
    const std::size_t pairs = (cluster.size() + 1) / 2;
    for (std::size_t p = 0; p < pairs && static_cast<int>(basis.size()) < d; ++p) {
      const Vector v = best_residual(candidates, basis);
      Vector w = a * v;
      const double nu_k = w.norm();
      w = project_out(w / nu_k, basis);
      w -= v.dot(w) * v;
      w.normalize();
      basis.push_back(w);
      basis.push_back(v);
      nu.push_back(nu_k);
    }
  }
  if (static_cast<int>(basis.size()) != d) {
    throw Error(ErrorCode::NumericalFailure, "symplectic spectrum does not pair up");
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return nu[i] < nu[j]; });
  Matrix o(d, d);
  WilliamsonForm out{SymplecticTransform::identity(n), {}, false};
  for (int k = 0; k < n; ++k) {
    const int src = order[k];
    o.col(2 * k) = basis[2 * src];
    o.col(2 * k + 1) = basis[2 * src + 1];
    out.nu.push_back(nu[src]);
  }
  for (int k = 1; k < n; ++k) {
    if (out.nu[k] - out.nu[k - 1] < kDegeneracyTol * std::max(1.0, out.nu[k])) out.degenerate = true;
  }
  Vector scale(d);
  for (int k = 0; k < n; ++k) scale(2 * k) = scale(2 * k + 1) = 1.0 / std::sqrt(out.nu[k]);
  out.s = SymplecticTransform(l * o * scale.asDiagonal());
  return out;
}

Matrix squeezer_matrix(const std::vector<double>& r) {
  Vector d(2 * r.size());
  for (std::size_t k = 0; k < r.size(); ++k) {
    d(2 * k) = std::exp(-r[k]);
    d(2 * k + 1) = std::exp(r[k]);
  }
  return d.asDiagonal();
}

Matrix EulerForm::squeezers() const { return squeezer_matrix(r); }

EulerForm euler_decompose(const SymplecticTransform& input) {
  const SymplecticTransform s =
      input.ordering() == Ordering::Interleaved ? input : reorder(input, Ordering::Interleaved);
  if (!is_symplectic(s.data())) throw Error(ErrorCode::NotSymplectic, "input is not symplectic");
  const int n = s.n_modes();
  const int d = 2 * n;
  const Matrix sigma = symplectic_form(n);
  // S^T S = O diag(e^{-2r}, e^{2r}) O^T. An eigenvector v with eigenvalue
  // mu > 1 becomes the p column of a mode and sigma v (eigenvalue 1/mu) its
  // q column; the eigenspace at 1 is sigma invariant and is paired greedily.
  Eigen::SelfAdjointEigenSolver<Matrix> es(linalg::symmetrized(s.data().transpose() * s.data()));
  const Vector mu = es.eigenvalues();
  constexpr double kUnitTol = 1e-10;
  int n_above = 0;
  while (n_above < n && mu(d - 1 - n_above) > 1.0 + kUnitTol) ++n_above;

  std::vector<Vector> basis;
  std::vector<double> r;
  for (int i = d - 1; i >= d - n_above; --i) {
    const Vector v = es.eigenvectors().col(i);
    basis.push_back(sigma * v);
    basis.push_back(v);
    r.push_back(0.5 * std::log(mu(i)));
  }
  std::vector<Vector> unit;
  for (int i = n_above; i < d - n_above; ++i) unit.push_back(es.eigenvectors().col(i));
  while (static_cast<int>(basis.size()) < d) {
    const Vector v = best_residual(unit, basis);
    Vector w = project_out(sigma * v, basis);
    w -= v.dot(w) * v;
    w.normalize();
    basis.push_back(w);
    basis.push_back(v);
    r.push_back(0.0);
  }
  Matrix o(d, d);
  for (int i = 0; i < d; ++i) o.col(i) = basis[i];
  const Matrix lambda = squeezer_matrix(r);
  const Matrix k = s.data() * o * lambda.inverse();
  return EulerForm{SymplecticTransform(k), SymplecticTransform(Matrix(o.transpose())), r};
}

bool FixtureReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const FixtureCheck& c) { return c.ok(); });
}

void FixtureReport::require() const {
  for (const auto& c : checks) {
    if (!c.ok()) {
      throw Error(ErrorCode::FixtureMismatch, c.name + ": error " + std::to_string(c.error) +
                                                  " exceeds " + std::to_string(c.tolerance));
    }
  }
}

FixtureReport verify_fixture_identities(const Matrix& s, const Matrix& k, const Matrix& l,
                                        const Matrix& squeezers, const Matrix& d,
                                        const Matrix& gamma) {
  const Matrix id = Matrix::Identity(s.rows(), s.cols());
  FixtureReport rep;
  rep.checks.push_back({"S symplectic", symplectic_residual(s), 1e-10});
  rep.checks.push_back({"K orthogonal", linalg::max_abs(Matrix(k * k.transpose() - id)), 1e-10});
  rep.checks.push_back({"K symplectic", symplectic_residual(k), 1e-10});
  rep.checks.push_back({"L orthogonal", linalg::max_abs(Matrix(l * l.transpose() - id)), 1e-10});
  rep.checks.push_back({"L symplectic", symplectic_residual(l), 1e-10});
  rep.checks.push_back({"K Lambda L = S", linalg::max_abs(Matrix(k * squeezers * l - s)), 1e-9});
  rep.checks.push_back(
      {"S D S^T = gamma", linalg::max_abs(Matrix(s * d * s.transpose() - gamma)), 1e-9});
  return rep;
}

FixtureReport verify_reference_fixtures() {
  return verify_fixture_identities(reference::williamson_symplectic(), reference::euler_k(),
                                   reference::euler_l(), reference::squeezer_block(),
                                   reference::williamson_diagonal(), preset_matrix(1).data());
}

}  // namespace gaussbound
