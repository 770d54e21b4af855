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

// Williamson normal form gamma = S diag(nu1, nu1, ..., nun, nun) S^T and the
// Euler (Bloch-Messiah) factorization S = K [(+) S(r_k)] L with K, L
// orthogonal symplectic and S(r) = diag(e^{-r}, e^{r}).
//
// Both factorizations are unique only up to symplectic-orthogonal gauge. The
// returned factors satisfy the reconstruction contracts; nothing beyond nu
// ascending and r descending (r >= 0) is canonicalized.

#include <string>
#include <vector>

#include "gaussbound/core.hpp"

namespace gaussbound {

/// Relative gap below which two symplectic eigenvalues count as degenerate.
inline constexpr double kDegeneracyTol = 1e-8;

/// Ascending. Throws NotPositiveDefinite.
std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& gamma);

struct WilliamsonForm {
  SymplecticTransform s;
  std::vector<double> nu;  ///< ascending
  bool degenerate = false; ///< some |nu_j - nu_k| < kDegeneracyTol: S is not unique

  Matrix diagonal() const;
};

/// Throws NotPositiveDefinite. Interleaved ordering only.
WilliamsonForm williamson(const CovarianceMatrix& gamma);

struct EulerForm {
  SymplecticTransform k;
  SymplecticTransform l;
  std::vector<double> r;  ///< descending, r >= 0

  Matrix squeezers() const;
};

/// (+) diag(e^{-r_k}, e^{r_k}), interleaved.
Matrix squeezer_matrix(const std::vector<double>& r);

/// Throws NotSymplectic.
EulerForm euler_decompose(const SymplecticTransform& s);

struct FixtureCheck {
  std::string name;
  double error = 0.0;
  double tolerance = 0.0;
  bool ok() const { return error <= tolerance; }
};

struct FixtureReport {
  std::vector<FixtureCheck> checks;
  bool ok() const;
  /// Throws FixtureMismatch naming the first failing identity.
  void require() const;
};

/// Identities tying together a printed Williamson S, Euler factors K, L,
/// squeezer block and target gamma:
///   S symplectic; K, L orthogonal and symplectic; K Lambda L = S; S D S^T = gamma.
FixtureReport verify_fixture_identities(const Matrix& s, const Matrix& k, const Matrix& l,
                                        const Matrix& squeezers, const Matrix& d,
                                        const Matrix& gamma);

/// The identities above on the built-in closed-form reference matrices and
/// the first bound-family example.
FixtureReport verify_reference_fixtures();

}  // namespace gaussbound
