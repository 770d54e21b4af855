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

#include "gaussbound/circuit.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "gaussbound/errors.hpp"
#include "gaussbound/reference_data.hpp"

namespace gaussbound {
namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kAngleSlack = 1e-12;
constexpr double kNegligible = 1e-15;

double wrap_angle(double a) {
  a = std::remainder(a, 2.0 * kPi);
  return a <= -kPi ? a + 2.0 * kPi : a;
}

Eigen::Matrix2cd bs_matrix(double theta, double phi) {
  const double c = std::cos(theta), s = std::sin(theta);
  Eigen::Matrix2cd m;
  m << c, -std::polar(1.0, phi) * s, std::polar(1.0, -phi) * s, c;
  return m;
}

void check_mode(int mode, int n) {
  if (mode < 0 || mode >= n) {
    throw Error(ErrorCode::InvalidCircuit,
                "mode " + std::to_string(mode) + " out of range for " + std::to_string(n) + " modes");
  }
}

Matrix passive_embedding(const CMatrix& u) {
  const int n = static_cast<int>(u.rows());
  Matrix o(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const double x = u(j, k).real(), y = u(j, k).imag();
      o(2 * j, 2 * k) = x;
      o(2 * j, 2 * k + 1) = -y;
      o(2 * j + 1, 2 * k) = y;
      o(2 * j + 1, 2 * k + 1) = x;
    }
  }
  return o;
}

// Left-multiplies `m` (2n x 2n) by the element's symplectic.
void apply_element(const CircuitElement& e, Matrix& m) {
  if (const auto* bs = std::get_if<BeamSplitter>(&e)) {
    const Eigen::Matrix2cd u = bs_matrix(bs->theta, bs->phi);
    const int idx[2] = {bs->j, bs->k};
    Matrix rows(4, m.cols());
    for (int a = 0; a < 2; ++a) {
      rows.row(2 * a) = m.row(2 * idx[a]);
      rows.row(2 * a + 1) = m.row(2 * idx[a] + 1);
    }
    const Matrix out = passive_embedding(u) * rows;
    for (int a = 0; a < 2; ++a) {
      m.row(2 * idx[a]) = out.row(2 * a);
      m.row(2 * idx[a] + 1) = out.row(2 * a + 1);
    }
  } else if (const auto* ps = std::get_if<PhaseShift>(&e)) {
    const double c = std::cos(ps->phi), s = std::sin(ps->phi);
    const Eigen::RowVectorXd q = m.row(2 * ps->mode), p = m.row(2 * ps->mode + 1);
    m.row(2 * ps->mode) = c * q - s * p;
    m.row(2 * ps->mode + 1) = s * q + c * p;
  } else {
    const auto& sq = std::get<Squeezer>(e);
    m.row(2 * sq.mode) *= std::exp(-sq.r);
    m.row(2 * sq.mode + 1) *= std::exp(sq.r);
  }
}

void append_decomposed(OpticalCircuit& circuit, const CMatrix& u) {
  const OpticalCircuit part = decompose_unitary(ComplexUnitary(u));
  circuit.elements.insert(circuit.elements.end(), part.elements.begin(), part.elements.end());
}

}  // namespace

void OpticalCircuit::validate() const {
  if (n_modes < 1) throw Error(ErrorCode::InvalidCircuit, "circuit needs at least one mode");
  for (const auto& e : elements) {
    if (const auto* bs = std::get_if<BeamSplitter>(&e)) {
      check_mode(bs->j, n_modes);
      check_mode(bs->k, n_modes);
      if (bs->j == bs->k) throw Error(ErrorCode::InvalidCircuit, "beam splitter modes must differ");
      if (!(bs->theta >= -kAngleSlack && bs->theta <= kPi / 2 + kAngleSlack) ||
          !std::isfinite(bs->phi)) {
        throw Error(ErrorCode::InvalidCircuit, "beam splitter angle out of range");
      }
    } else if (const auto* ps = std::get_if<PhaseShift>(&e)) {
      check_mode(ps->mode, n_modes);
      if (!std::isfinite(ps->phi)) throw Error(ErrorCode::InvalidCircuit, "phase is not finite");
    } else {
      const auto& sq = std::get<Squeezer>(e);
      check_mode(sq.mode, n_modes);
      if (!std::isfinite(sq.r)) throw Error(ErrorCode::InvalidCircuit, "squeezing is not finite");
    }
  }
}

bool OpticalCircuit::passive() const {
  for (const auto& e : elements) {
    if (std::holds_alternative<Squeezer>(e)) return false;
  }
  return true;
}

ComplexUnitary::ComplexUnitary(CMatrix data, double tol) : data_(std::move(data)) {
  if (data_.rows() != data_.cols() || data_.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "unitary must be square and nonempty");
  }
  const CMatrix id = CMatrix::Identity(data_.rows(), data_.cols());
  const double err = linalg::max_abs(CMatrix(data_.adjoint() * data_ - id));
  if (!(err <= tol)) {
    throw Error(ErrorCode::NotUnitary, "|U^dagger U - I| = " + std::to_string(err));
  }
}

ComplexUnitary ComplexUnitary::identity(int n) { return ComplexUnitary(CMatrix::Identity(n, n)); }

ComplexUnitary passive_to_unitary(const SymplecticTransform& input) {
  const SymplecticTransform o =
      input.ordering() == Ordering::Interleaved ? input : reorder(input, Ordering::Interleaved);
  const int n = o.n_modes();
  const Matrix& m = o.data();
  const double orth = linalg::max_abs(Matrix(m * m.transpose() - Matrix::Identity(2 * n, 2 * n)));
  if (orth > kUnitaryTol) {
    throw Error(ErrorCode::NotPassive, "|O O^T - I| = " + std::to_string(orth));
  }
  CMatrix u(n, n);
  double structure = 0.0;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const double x = m(2 * j, 2 * k), y = m(2 * j + 1, 2 * k);
      structure = std::max({structure, std::abs(m(2 * j + 1, 2 * k + 1) - x),
                            std::abs(m(2 * j, 2 * k + 1) + y)});
      u(j, k) = cd(x, y);
    }
  }
  if (structure > kUnitaryTol) {
    throw Error(ErrorCode::NotPassive, "orthogonal matrix does not commute with sigma");
  }
  return ComplexUnitary(u);
}

SymplecticTransform unitary_to_passive(const ComplexUnitary& u) {
  return SymplecticTransform(passive_embedding(u.data()));
}

OpticalCircuit decompose_unitary(const ComplexUnitary& u) {
  const int n = u.n_modes();
  CMatrix w = u.data();
  // T_N ... T_1 U = diag(e^{i d}); hence U = T_1^{-1} ... T_N^{-1} diag(e^{i d}).
  std::vector<BeamSplitter> eliminations;
  for (int c = 0; c + 1 < n; ++c) {
    for (int r = n - 1; r > c; --r) {
      const cd a = w(c, c), b = w(r, c);
      if (std::abs(b) <= kNegligible) continue;
      const double theta = std::atan2(std::abs(b), std::abs(a));
      const double phi =
          std::abs(a) <= kNegligible ? -std::arg(b) - kPi : std::arg(a) - std::arg(b) - kPi;
      const Eigen::Matrix2cd t = bs_matrix(theta, phi);
      const Eigen::RowVectorXcd row_c = w.row(c), row_r = w.row(r);
      w.row(c) = t(0, 0) * row_c + t(0, 1) * row_r;
      w.row(r) = t(1, 0) * row_c + t(1, 1) * row_r;
      w(r, c) = 0.0;
      eliminations.push_back({c, r, theta, phi});
    }
  }
  OpticalCircuit circuit{n, {}};
  for (int k = 0; k < n; ++k) {
    const double phase = std::arg(w(k, k));
    if (std::abs(phase) > kNegligible) circuit.elements.push_back(PhaseShift{k, phase});
  }
  for (auto it = eliminations.rbegin(); it != eliminations.rend(); ++it) {
    circuit.elements.push_back(BeamSplitter{it->j, it->k, it->theta, wrap_angle(it->phi + kPi)});
  }
  return circuit;
}

ComplexUnitary elements_to_unitary(const OpticalCircuit& circuit) {
  circuit.validate();
  CMatrix u = CMatrix::Identity(circuit.n_modes, circuit.n_modes);
  for (const auto& e : circuit.elements) {
    if (const auto* bs = std::get_if<BeamSplitter>(&e)) {
      const Eigen::Matrix2cd t = bs_matrix(bs->theta, bs->phi);
      const Eigen::RowVectorXcd row_j = u.row(bs->j), row_k = u.row(bs->k);
      u.row(bs->j) = t(0, 0) * row_j + t(0, 1) * row_k;
      u.row(bs->k) = t(1, 0) * row_j + t(1, 1) * row_k;
    } else if (const auto* ps = std::get_if<PhaseShift>(&e)) {
      u.row(ps->mode) *= std::polar(1.0, ps->phi);
    } else {
      throw Error(ErrorCode::SqueezerInUnitaryComposition,
                  "squeezers have no annihilation-operator unitary");
    }
  }
  return ComplexUnitary(u);
}

SymplecticTransform elements_to_symplectic(const OpticalCircuit& circuit) {
  circuit.validate();
  Matrix m = Matrix::Identity(2 * circuit.n_modes, 2 * circuit.n_modes);
  for (const auto& e : circuit.elements) apply_element(e, m);
  return SymplecticTransform(m);
}

CovarianceMatrix simulate(const OpticalCircuit& circuit, const CovarianceMatrix& input) {
  if (input.n_modes() != circuit.n_modes) {
    throw Error(ErrorCode::DimensionMismatch, "circuit and input mode counts differ");
  }
  const CovarianceMatrix in =
      input.ordering() == Ordering::Interleaved ? input : reorder(input, Ordering::Interleaved);
  return apply_symplectic(elements_to_symplectic(circuit), in);
}

InterferometerFactors interferometer_factors() {
  return {reference::factors_a(), reference::factors_b(), reference::phase_a(),
          reference::phase_b(),   reference::unitary_l(), reference::unitary_k()};
}

std::pair<OpticalCircuit, CovarianceMatrix> build_fig1_circuit(double kappa, double tau,
                                                               const Fig1Options& options) {
  if (!(kappa >= 1.0) || !std::isfinite(kappa)) {
    throw Error(ErrorCode::InvalidKappa, "kappa must be finite and >= 1");
  }
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw Error(ErrorCode::InvalidTau, "tau must be finite and > 0");
  }
  const InterferometerFactors f = interferometer_factors();
  OpticalCircuit circuit{4, {}};
  if (options.use_factors) {
    if (options.include_pi_phase) circuit.elements.push_back(PhaseShift{1, kPi});
    for (int i = options.include_a0 ? 0 : 1; i < 5; ++i) append_decomposed(circuit, f.a[i]);
  } else {
    CMatrix u_l = f.u_l;
    if (!options.include_pi_phase) u_l = u_l * f.phase_a;  // phase_a is its own inverse
    append_decomposed(circuit, u_l);
  }
  const double r = -std::log(tau);
  for (int k = 0; k < 4; ++k) circuit.elements.push_back(Squeezer{k, r});
  if (options.use_factors) {
    circuit.elements.push_back(PhaseShift{2, kPi / 2});
    circuit.elements.push_back(PhaseShift{3, -kPi / 2});
    for (const auto& b : f.b) append_decomposed(circuit, b);
  } else {
    append_decomposed(circuit, f.u_k);
  }
  const std::vector<double> nbar = {0.0, 0.0, (kappa - 1.0) / 2.0, (kappa - 1.0) / 2.0};
  return {std::move(circuit), thermal_state(nbar)};
}

CovarianceMatrix fig1_state(double kappa, double tau, const Fig1Options& options) {
  const auto [circuit, input] = build_fig1_circuit(kappa, tau, options);
  return simulate(circuit, input);
}

}  // namespace gaussbound
