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

// Linear-optical circuits over n modes.
//
// Passive transformations act on annihilation operators a = (q + i p) / sqrt(2)
// as a -> U a. On interleaved quadratures, U = X + iY becomes the orthogonal
// symplectic whose (j, k) 2x2 block is [[X_jk, -Y_jk], [Y_jk, X_jk]].
//
// Elements (angles in radians, applied in list order):
//   BeamSplitter(j, k, theta, phi): (a_j, a_k) -> [[cos t, -e^{i phi} sin t],
//                                                  [e^{-i phi} sin t, cos t]] (a_j, a_k)
//   PhaseShift(j, phi):             a_j -> e^{i phi} a_j
//   Squeezer(j, r):                 (q_j, p_j) -> (e^{-r} q_j, e^{r} p_j)

#include <array>
#include <utility>
#include <variant>
#include <vector>

#include "gaussbound/core.hpp"

namespace gaussbound {

struct BeamSplitter {
  int j = 0;
  int k = 1;
  double theta = 0.0;  ///< in [0, pi/2]
  double phi = 0.0;
};

struct PhaseShift {
  int mode = 0;
  double phi = 0.0;
};

struct Squeezer {
  int mode = 0;
  double r = 0.0;
};

using CircuitElement = std::variant<BeamSplitter, PhaseShift, Squeezer>;

struct OpticalCircuit {
  int n_modes = 0;
  std::vector<CircuitElement> elements;

  /// Throws InvalidCircuit on out-of-range or repeated modes, or theta
  /// outside [0, pi/2].
  void validate() const;
  bool passive() const;
};

inline constexpr double kUnitaryTol = 1e-10;

/// n x n complex matrix with U^dagger U = I.
class ComplexUnitary {
 public:
  /// Throws NotUnitary.
  explicit ComplexUnitary(CMatrix data, double tol = kUnitaryTol);
  static ComplexUnitary identity(int n);

  int n_modes() const { return static_cast<int>(data_.rows()); }
  const CMatrix& data() const { return data_; }

 private:
  CMatrix data_;
};

/// Throws NotPassive unless O is orthogonal with the complex block structure.
ComplexUnitary passive_to_unitary(const SymplecticTransform& o);
SymplecticTransform unitary_to_passive(const ComplexUnitary& u);

/// Triangular elimination: at most n(n-1)/2 beam splitters and n phase
/// shifters reproducing U.
OpticalCircuit decompose_unitary(const ComplexUnitary& u);

/// Throws SqueezerInUnitaryComposition if the circuit contains a squeezer.
ComplexUnitary elements_to_unitary(const OpticalCircuit& circuit);
SymplecticTransform elements_to_symplectic(const OpticalCircuit& circuit);

/// Output covariance. Throws DimensionMismatch.
CovarianceMatrix simulate(const OpticalCircuit& circuit, const CovarianceMatrix& input);

/// Closed-form factors of the two four-mode interferometers:
///   U_L = A4 A3 A2 A1 A0 diag(1, -1, 1, 1),  U_K = B4 B3 B2 B1 diag(1, 1, i, -i).
struct InterferometerFactors {
  std::array<CMatrix, 5> a;  ///< A0 ... A4
  std::array<CMatrix, 4> b;  ///< B1 ... B4
  CMatrix phase_a;
  CMatrix phase_b;
  CMatrix u_l;
  CMatrix u_k;
};

InterferometerFactors interferometer_factors();

struct Fig1Options {
  /// Compile the closed-form factors one by one; otherwise decompose U_L and
  /// U_K directly.
  bool use_factors = true;
  /// A0 mixes the two thermal inputs and the pi phase acts on a vacuum; both
  /// leave the output unchanged.
  bool include_a0 = true;
  bool include_pi_phase = true;
};

/// Preparation circuit on vacuum (x) vacuum (x) kappa I (x) kappa I: the L
/// interferometer, four squeezers with e^{-r} = tau, then K.
/// Throws InvalidKappa (kappa < 1) or InvalidTau (tau <= 0).
std::pair<OpticalCircuit, CovarianceMatrix> build_fig1_circuit(double kappa, double tau,
                                                               const Fig1Options& options = {});

/// simulate(build_fig1_circuit(kappa, tau)).
CovarianceMatrix fig1_state(double kappa, double tau, const Fig1Options& options = {});

}  // namespace gaussbound
