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

#include "gaussbound/random.hpp"

#include <complex>

#include "gaussbound/decomposition.hpp"

namespace gaussbound::random {

ComplexUnitary haar_unitary(int n, Rng& rng) {
  std::normal_distribution<double> normal;
  CMatrix z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z(i, j) = std::complex<double>(normal(rng), normal(rng));
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return ComplexUnitary(q);
}

SymplecticTransform random_passive(int n, Rng& rng) {
  return unitary_to_passive(haar_unitary(n, rng));
}

SymplecticTransform random_symplectic(int n, Rng& rng, double max_r) {
  std::uniform_real_distribution<double> uni(0.0, max_r);
  std::vector<double> r(n);
  for (auto& x : r) x = uni(rng);
  const SymplecticTransform k = random_passive(n, rng);
  const SymplecticTransform l = random_passive(n, rng);
  return k * SymplecticTransform(squeezer_matrix(r)) * l;
}

CovarianceMatrix random_covariance(int n, Rng& rng, double max_nu, double max_r) {
  std::uniform_real_distribution<double> uni(1.0, max_nu);
  Vector d(2 * n);
  for (int k = 0; k < n; ++k) d(2 * k) = d(2 * k + 1) = max_nu > 1.0 ? uni(rng) : 1.0;
  const SymplecticTransform s = random_symplectic(n, rng, max_r);
  return apply_symplectic(s, CovarianceMatrix(Matrix(d.asDiagonal())));
}

}  // namespace gaussbound::random
