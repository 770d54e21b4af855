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

// Seeded random draws of unitaries, symplectics and covariance matrices for
// property tests. Every function takes the generator explicitly.

#include <random>

#include "gaussbound/circuit.hpp"
#include "gaussbound/core.hpp"

namespace gaussbound::random {

using Rng = std::mt19937_64;

/// Haar-distributed n x n unitary (QR of a complex Ginibre matrix).
ComplexUnitary haar_unitary(int n, Rng& rng);

/// Orthogonal symplectic from a Haar unitary.
SymplecticTransform random_passive(int n, Rng& rng);

/// K (+)S(r_k) L with Haar K, L and r_k uniform in [0, max_r].
SymplecticTransform random_symplectic(int n, Rng& rng, double max_r = 1.0);

/// S diag(nu) S^T with nu_k uniform in [1, max_nu] and S from
/// random_symplectic. max_nu = 1 gives pure states.
CovarianceMatrix random_covariance(int n, Rng& rng, double max_nu = 3.0, double max_r = 1.0);

}  // namespace gaussbound::random
