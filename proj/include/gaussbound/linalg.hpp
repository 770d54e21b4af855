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

#pragma once

// Small dense helpers shared by the modules. Everything here works on
// matrices of at most a few dozen rows; no attempt is made to exploit
// sparsity or blocking.

#include <Eigen/Dense>

#include <vector>

namespace gaussbound {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using CMatrix = Eigen::MatrixXcd;

namespace linalg {

/// Ascending eigenvalues of the symmetric part of `a`.
Vector symmetric_eigenvalues(const Matrix& a);

double min_eigenvalue(const Matrix& a);

/// Real representation [[A, -B], [B, A]] of the Hermitian matrix A + iB.
/// Its spectrum is that of A + iB with every eigenvalue doubled.
Matrix real_embedding(const Matrix& re, const Matrix& im);

double spectral_norm(const Matrix& a);

/// Largest absolute entry.
double max_abs(const Matrix& a);
double max_abs(const CMatrix& a);

Matrix symmetrized(const Matrix& a);

/// Number of singular values above `rel_tol * scale`. When `scale` is not
/// positive the largest singular value is used.
int numerical_rank(const Matrix& a, double rel_tol, double scale = 0.0);

/// Singular values, descending.
Vector singular_values(const Matrix& a);

/// Square root of a symmetric positive semidefinite matrix.
Matrix psd_sqrt(const Matrix& a);

/// Groups of indices of `sorted_values` whose consecutive relative spread is
/// below `rel_tol`. Input must already be sorted.
std::vector<std::vector<int>> cluster_sorted(const Vector& sorted_values, double rel_tol);

}  // namespace linalg
}  // namespace gaussbound
