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

// Covariance-matrix and symplectic algebra for n bosonic modes.
//
// Conventions (used throughout the library, no alternatives supported):
//   * hbar = 1 and gamma_jk = <{dX_j, dX_k}>, so the vacuum has covariance I
//     and a thermal mode with mean occupation nbar has covariance (2 nbar + 1) I.
//   * The canonical ordering is Interleaved, X = (q1, p1, ..., qn, pn), with
//     symplectic form sigma = (+) [[0, 1], [-1, 0]]. Grouped ordering
//     (q1..qn, p1..pn) exists for the block analysis of the bound family.
//   * A real symmetric gamma is a valid covariance iff gamma + i sigma >= 0.
//     Hermitian PSD tests go through the real embedding [[A, -B], [B, A]].
//   * Mode indices in the C++ API are zero-based.

#include <span>
#include <vector>

#include "gaussbound/linalg.hpp"

namespace gaussbound {

enum class Ordering { Interleaved, Grouped };

/// Relative tolerance on lambda_min used by the PSD tests; the absolute
/// threshold is this times the spectral norm of gamma.
inline constexpr double kDefaultPsdTol = 1e-9;
inline constexpr double kSymmetryTol = 1e-12;
inline constexpr double kSymplecticTol = 1e-10;

int q_index(int mode, int n_modes, Ordering ordering);
int p_index(int mode, int n_modes, Ordering ordering);

/// Second moments of an n-mode Gaussian state. Construction checks symmetry
/// but not physical validity, so invalid matrices can be diagnosed.
class CovarianceMatrix {
 public:
  /// Throws NonSymmetric if |gamma - gamma^T|_max exceeds
  /// kSymmetryTol * max(1, |gamma|_max); DimensionMismatch if the matrix is
  /// not square with even size. The stored matrix is exactly symmetric.
  explicit CovarianceMatrix(const Matrix& data, Ordering ordering = Ordering::Interleaved);

  int n_modes() const { return static_cast<int>(data_.rows() / 2); }
  Ordering ordering() const { return ordering_; }
  const Matrix& data() const { return data_; }
  double operator()(int i, int j) const { return data_(i, j); }

 private:
  Matrix data_;
  Ordering ordering_;
};

/// A real 2n x 2n matrix S with S sigma S^T = sigma.
class SymplecticTransform {
 public:
  /// Throws NotSymplectic when |S sigma S^T - sigma|_max > tol * max(1, |S|_max^2).
  explicit SymplecticTransform(const Matrix& data, Ordering ordering = Ordering::Interleaved,
                               double tol = kSymplecticTol);

  static SymplecticTransform identity(int n_modes, Ordering ordering = Ordering::Interleaved);

  int n_modes() const { return static_cast<int>(data_.rows() / 2); }
  Ordering ordering() const { return ordering_; }
  const Matrix& data() const { return data_; }

  /// Composition: (a * b) applies b first.
  SymplecticTransform operator*(const SymplecticTransform& rhs) const;
  SymplecticTransform inverse() const;
  SymplecticTransform transpose() const;

 private:
  struct Unchecked {};
  SymplecticTransform(Matrix data, Ordering ordering, Unchecked);

  Matrix data_;
  Ordering ordering_;
};

/// |S sigma S^T - sigma|_max.
double symplectic_residual(const Matrix& s, Ordering ordering = Ordering::Interleaved);
bool is_symplectic(const Matrix& s, Ordering ordering = Ordering::Interleaved,
                   double tol = kSymplecticTol);

/// Split of the modes into two parties. Invariants: disjoint, nonempty,
/// union is {0, ..., n-1}.
struct Bipartition {
  std::vector<int> modes_a;
  std::vector<int> modes_b;

  /// First `n_a` modes to A, the next `n_b` to B.
  static Bipartition split(int n_a, int n_b);

  int n_modes() const { return static_cast<int>(modes_a.size() + modes_b.size()); }
  /// Throws InvalidPartition.
  void validate(int n_modes) const;
};

struct PsdCheck {
  bool ok = false;
  double margin = 0.0;     ///< lambda_min of the Hermitian test matrix
  double tolerance = 0.0;  ///< absolute threshold applied to the margin
};

Matrix symplectic_form(int n_modes, Ordering ordering = Ordering::Interleaved);

/// sigma~ = (-sigma_A) (+) sigma_B, arranged on the actual mode positions.
Matrix partial_transpose_form(int n_modes, const Bipartition& part,
                              Ordering ordering = Ordering::Interleaved);

/// lambda_min of gamma + i form, computed on the real embedding.
double hermitian_margin(const Matrix& gamma, const Matrix& form);

PsdCheck is_valid_covariance(const CovarianceMatrix& gamma, double rel_tol = kDefaultPsdTol);

/// Same test on a raw matrix; throws NonSymmetric if it is not symmetric.
PsdCheck is_valid_covariance(const Matrix& gamma, Ordering ordering,
                             double rel_tol = kDefaultPsdTol);

/// Lambda gamma Lambda with Lambda flipping every momentum of the B modes.
CovarianceMatrix partial_transpose(const CovarianceMatrix& gamma, const Bipartition& part);

PsdCheck is_ppt(const CovarianceMatrix& gamma, const Bipartition& part,
                double rel_tol = kDefaultPsdTol);

/// S gamma S^T. Throws DimensionMismatch / OrderingMismatch.
CovarianceMatrix apply_symplectic(const SymplecticTransform& s, const CovarianceMatrix& gamma);

CovarianceMatrix vacuum_state(int n_modes);

/// Throws NegativeOccupation for any nbar < 0.
CovarianceMatrix thermal_state(std::span<const double> nbar);

/// Two-mode squeezed vacuum on modes (0, 1), interleaved.
CovarianceMatrix two_mode_squeezed_vacuum(double r);

/// Permutation P with P x_interleaved = x_grouped.
Matrix grouping_permutation(int n_modes);

CovarianceMatrix reorder(const CovarianceMatrix& gamma, Ordering to);
SymplecticTransform reorder(const SymplecticTransform& s, Ordering to);

/// Block assembly; modes of `b` follow those of `a`. Throws OrderingMismatch.
CovarianceMatrix direct_sum(const CovarianceMatrix& a, const CovarianceMatrix& b);
SymplecticTransform direct_sum(const SymplecticTransform& a, const SymplecticTransform& b);

/// Covariance of the listed modes, in the listed order.
CovarianceMatrix reduced_state(const CovarianceMatrix& gamma, std::span<const int> modes);

}  // namespace gaussbound
