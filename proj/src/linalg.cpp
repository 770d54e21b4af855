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

#include "gaussbound/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace gaussbound::linalg {

Vector symmetric_eigenvalues(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(symmetrized(a), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double min_eigenvalue(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  return symmetric_eigenvalues(a)(0);
}

Matrix real_embedding(const Matrix& re, const Matrix& im) {
  const Eigen::Index n = re.rows();
  Matrix out(2 * n, 2 * n);
  out.topLeftCorner(n, n) = re;
  out.topRightCorner(n, n) = -im;
  out.bottomLeftCorner(n, n) = im;
  out.bottomRightCorner(n, n) = re;
  return out;
}

double spectral_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  return singular_values(a)(0);
}

double max_abs(const Matrix& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

double max_abs(const CMatrix& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

Matrix symmetrized(const Matrix& a) { return 0.5 * (a + a.transpose()); }

Vector singular_values(const Matrix& a) {
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues();
}

int numerical_rank(const Matrix& a, double rel_tol, double scale) {
  const Vector s = singular_values(a);
  if (s.size() == 0) return 0;
  const double ref = scale > 0.0 ? scale : s(0);
  const double thr = rel_tol * ref;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > thr) ++r;
  }
  return r;
}

Matrix psd_sqrt(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(symmetrized(a));
  Vector w = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * w.asDiagonal() * es.eigenvectors().transpose();
}

std::vector<std::vector<int>> cluster_sorted(const Vector& v, double rel_tol) {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < static_cast<int>(v.size()); ++i) {
    if (!out.empty()) {
      const double prev = v(out.back().back());
      const double scale = std::max({1.0, std::abs(prev), std::abs(v(i))});
      if (std::abs(v(i) - prev) <= rel_tol * scale) {
        out.back().push_back(i);
        continue;
      }
    }
    out.push_back({i});
  }
  return out;
}

}  // namespace gaussbound::linalg
