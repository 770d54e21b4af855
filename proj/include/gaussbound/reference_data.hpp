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

// Closed-form reference matrices for the 2x2-mode bound entangled state with
// covariance diag(1,1,1,1,3,3,3,3) under S = K (+)S(r) L, and the
// beam-splitter factorizations of the two interferometers. All matrices are
// evaluated from their radical expressions; nothing here is fitted.

#include <array>

#include "gaussbound/linalg.hpp"

namespace gaussbound::reference {

/// e^{-r} = (sqrt(17) + 1) / 4 for every squeezer.
double squeezing_tau();

/// sqrt(17 - 3 sqrt(17)), the common normalization of K and L.
double interferometer_norm();

/// Williamson diagonal diag(1,1,1,1,3,3,3,3), interleaved.
Matrix williamson_diagonal();

/// The printed symplectic S with S D S^T equal to the first example.
Matrix williamson_symplectic();

Matrix euler_k();
Matrix euler_l();

/// diag(tau, 1/tau) on every mode.
Matrix squeezer_block();

/// Complex 4x4 actions of L and K on the annihilation operators.
CMatrix unitary_l();
CMatrix unitary_k();

/// U_L = A4 A3 A2 A1 A0 diag(1,-1,1,1).
std::array<CMatrix, 5> factors_a();
/// U_K = B4 B3 B2 B1 diag(1,1,i,-i); index 0 holds B1.
std::array<CMatrix, 4> factors_b();
CMatrix phase_a();
CMatrix phase_b();

}  // namespace gaussbound::reference
