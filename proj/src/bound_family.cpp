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

#include "gaussbound/bound_family.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gaussbound/errors.hpp"

namespace gaussbound {

std::string_view to_string(ParamViolation v) {
  switch (v) {
    case ParamViolation::NonFinite: return "NonFinite";
    case ParamViolation::Beta1EqualsBeta2: return "Beta1EqualsBeta2";
    case ParamViolation::BetaProductMinusOne: return "BetaProductMinusOne";
    case ParamViolation::Alpha1Zero: return "Alpha1Zero";
    case ParamViolation::Alpha2Zero: return "Alpha2Zero";
    case ParamViolation::Alpha3Zero: return "Alpha3Zero";
    case ParamViolation::Alpha4Zero: return "Alpha4Zero";
    case ParamViolation::Alpha5NonPositive: return "Alpha5NonPositive";
    case ParamViolation::Alpha6NonPositive: return "Alpha6NonPositive";
    case ParamViolation::Alpha7NonPositive: return "Alpha7NonPositive";
    case ParamViolation::Alpha8NonPositive: return "Alpha8NonPositive";
  }
  return "Unknown";
}

namespace {

// Margins of every open constraint; a constraint fails when its margin is
// at or below the requested separation.
std::vector<std::pair<ParamViolation, double>> constraint_margins(const BoundFamilyParams& p) {
  std::vector<std::pair<ParamViolation, double>> out;
  out.emplace_back(ParamViolation::Beta1EqualsBeta2, std::abs(p.beta1 - p.beta2));
  out.emplace_back(ParamViolation::BetaProductMinusOne, std::abs(p.beta1 * p.beta2 + 1.0));
  static constexpr ParamViolation kZero[] = {ParamViolation::Alpha1Zero, ParamViolation::Alpha2Zero,
                                             ParamViolation::Alpha3Zero, ParamViolation::Alpha4Zero};
  static constexpr ParamViolation kPos[] = {
      ParamViolation::Alpha5NonPositive, ParamViolation::Alpha6NonPositive,
      ParamViolation::Alpha7NonPositive, ParamViolation::Alpha8NonPositive};
  for (int k = 0; k < 4; ++k) out.emplace_back(kZero[k], std::abs(p.alpha[k]));
  for (int k = 0; k < 4; ++k) out.emplace_back(kPos[k], p.alpha[4 + k]);
  return out;
}

bool all_finite(const BoundFamilyParams& p) {
  if (!std::isfinite(p.beta1) || !std::isfinite(p.beta2)) return false;
  return std::all_of(p.alpha.begin(), p.alpha.end(), [](double a) { return std::isfinite(a); });
}

// Positions (row, col), zero-based, of the off-diagonal entries allowed by
// the family pattern.
constexpr std::array<std::pair<int, int>, 4> kCouplings = {{{0, 4}, {1, 7}, {2, 6}, {3, 5}}};

bool in_pattern(int i, int j) {
  if (i == j) return true;
  for (auto [a, b] : kCouplings) {
    if ((i == a && j == b) || (i == b && j == a)) return true;
  }
  return false;
}

}  // namespace

std::vector<ParamViolation> validate_params(const BoundFamilyParams& params, double separation) {
  if (!all_finite(params)) return {ParamViolation::NonFinite};
  std::vector<ParamViolation> out;
  for (auto [v, margin] : constraint_margins(params)) {
    if (!(margin > separation)) out.push_back(v);
  }
  return out;
}

std::vector<ParamViolation> near_degenerate_params(const BoundFamilyParams& params,
                                                   double warn_separation) {
  if (!all_finite(params)) return {};
  std::vector<ParamViolation> out;
  for (auto [v, margin] : constraint_margins(params)) {
    if (margin > kParamSeparation && margin < warn_separation) out.push_back(v);
  }
  return out;
}

CovarianceMatrix construct(const BoundFamilyParams& params) {
  const auto violations = validate_params(params);
  if (!violations.empty()) {
    std::ostringstream os;
    os << "constraint violated: " << to_string(violations.front());
    for (std::size_t i = 1; i < violations.size(); ++i) os << ", " << to_string(violations[i]);
    throw Error(ErrorCode::InvalidParams, os.str());
  }
  const double b1 = params.beta1;
  const double b2 = params.beta2;
  const auto& a = params.alpha;
  const double a1 = a[0], a2 = a[1], a3 = a[2], a4 = a[3];
  const double a5 = a[4], a6 = a[5], a7 = a[6], a8 = a[7];
  const double db = b1 - b2;
  const double c23 = db * db * a2 * a2 * a3 * a3;  // (b1-b2)^2 a2^2 a3^2
  const double c14 = db * db * a1 * a1 * a4 * a4;  // (b2-b1)^2 a1^2 a4^2

  Matrix g = Matrix::Zero(8, 8);
  g(0, 0) = a5 + (1.0 + b1 * b1) * a1 * a1;
  g(1, 1) = (1.0 + a8) / (a5 * a8);
  g(2, 2) = a6 + (1.0 + b1 * b1) * a2 * a2;
  g(3, 3) = (1.0 + a7) / (a6 * a7);
  g(4, 4) = c23 * (1.0 + a7) / a6 + (1.0 + b2 * b2) * a3 * a3;
  g(5, 5) = a6 / (a7 * c23);
  g(6, 6) = c14 * (1.0 + a8) / a5 + (1.0 + b2 * b2) * a4 * a4;
  g(7, 7) = a5 / (a8 * c14);
  g(0, 4) = g(4, 0) = (1.0 + b1 * b2) * a1 * a3;
  g(1, 7) = g(7, 1) = 1.0 / (db * a1 * a4 * a8);
  g(2, 6) = g(6, 2) = (1.0 + b1 * b2) * a2 * a4;
  g(3, 5) = g(5, 3) = 1.0 / (-db * a2 * a3 * a7);
  return CovarianceMatrix(g);
}

BoundFamilyParams preset_params(int example) {
  BoundFamilyParams p;
  switch (example) {
    case 1: {
      const double s = std::sqrt(3.0) / 3.0;
      p.beta1 = 1.0;
      p.beta2 = 2.0;
      p.alpha = {s, -s, s, s, 4.0 / 3.0, 4.0 / 3.0, 3.0, 3.0};
      break;
    }
    case 2: {
      const double s = std::sqrt(2.0) / 2.0;
      p.beta1 = 1.0;
      p.beta2 = 3.0;
      p.alpha = {s, s, s, s, 1.0, 1.0, 1.0, 1.0};
      break;
    }
    case 3:
      p.beta1 = 1.0 / 3.0;
      p.beta2 = 1.0 / 2.0;
      p.alpha = {1.5, 1.5, 4.0, 4.0, 0.5, 0.5, 0.5, 0.5};
      break;
    case 4: {
      const double r2 = std::sqrt(2.0);
      p.beta1 = -r2;
      p.beta2 = 2.0 * r2;
      p.alpha = {0.5, -r2 / 2.0, 1.0 / 3.0, -r2 / 2.0, 1.0, 3.0, 2.0, 2.0 / 9.0};
      break;
    }
    default:
      throw Error(ErrorCode::InvalidParams, "examples are numbered 1 to 4");
  }
  return p;
}

CovarianceMatrix preset_matrix(int example) {
  // Diagonal, then the couplings (1,5), (2,8), (3,7), (4,6) in one-based terms.
  struct Entries {
    std::array<double, 8> diag;
    double g15, g28, g37, g46;
  };
  Entries e{};
  switch (example) {
    case 1: e = {{2, 1, 2, 1, 2, 4, 2, 4}, 1, -1, -1, -1}; break;
    case 2: e = {{2, 2, 2, 2, 7, 1, 7, 1}, 2, -1, 2, 1}; break;
    case 3: e = {{3, 6, 3, 6, 23, 1, 23, 1}, 7, -2, 7, 2}; break;
    case 4: e = {{7.0 / 4, 11.0 / 2, 9.0 / 2, 1.0 / 2, 2, 3.0 / 2, 29.0 / 4, 2}, -0.5, 3, -1.5, -0.5};
      break;
    default:
      throw Error(ErrorCode::InvalidParams, "examples are numbered 1 to 4");
  }
  Matrix g = Matrix::Zero(8, 8);
  for (int i = 0; i < 8; ++i) g(i, i) = e.diag[i];
  g(0, 4) = g(4, 0) = e.g15;
  g(1, 7) = g(7, 1) = e.g28;
  g(2, 6) = g(6, 2) = e.g37;
  g(3, 5) = g(5, 3) = e.g46;
  return CovarianceMatrix(g);
}

Bipartition family_partition() { return Bipartition::split(2, 2); }

BlockReduction block_reduce(const CovarianceMatrix& gamma) {
  if (gamma.n_modes() != 4) throw Error(ErrorCode::DimensionMismatch, "block reduction needs 4 modes");
  if (gamma.ordering() != Ordering::Interleaved) {
    throw Error(ErrorCode::OrderingMismatch, "block reduction expects interleaved ordering");
  }
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      if (!in_pattern(i, j) && std::abs(gamma(i, j)) > 1e-12) {
        std::ostringstream os;
        os << "entry (" << i + 1 << "," << j + 1 << ") = " << gamma(i, j)
           << " lies outside the family pattern";
        throw Error(ErrorCode::PatternMismatch, os.str());
      }
    }
  }
  const Matrix grouped = reorder(gamma, Ordering::Grouped).data();
  BlockReduction out;
  out.q_block = grouped.topLeftCorner<4, 4>();
  out.p_block = grouped.bottomRightCorner<4, 4>();
  return out;
}

BlockPptCheck block_ppt_check(const BlockReduction& blocks, double tol, double rank_tol) {
  BlockPptCheck out;
  out.p_block_min_eig = linalg::min_eigenvalue(blocks.p_block);
  const double scale = std::max(linalg::spectral_norm(blocks.q_block),
                                linalg::spectral_norm(blocks.p_block));
  if (out.p_block_min_eig <= tol * scale) return out;
  const Matrix schur = blocks.q_block - Matrix(blocks.p_block.inverse());
  out.schur_min_eig = linalg::min_eigenvalue(schur);
  out.schur_rank = linalg::numerical_rank(schur, rank_tol, scale);
  out.ok = out.schur_min_eig >= -tol * scale;
  return out;
}

Eigen::Matrix<double, 8, 8> sign_symmetry() {
  Eigen::Matrix<double, 8, 1> d;
  d << 1, 1, -1, -1, 1, -1, -1, 1;
  return d.asDiagonal();
}

bool commutes_with_sign_symmetry(const CovarianceMatrix& gamma, double tol) {
  if (gamma.n_modes() != 4) throw Error(ErrorCode::DimensionMismatch, "sign symmetry acts on 4 modes");
  const Matrix s = sign_symmetry();
  return linalg::max_abs(Matrix(s * gamma.data() - gamma.data() * s)) <= tol;
}

MinimalityReport is_minimal_ppt(const CovarianceMatrix& gamma, const Bipartition& part,
                                double tol_rank) {
  const int n = gamma.n_modes();
  const Matrix& g = gamma.data();
  Eigen::LLT<Matrix> llt(g);
  if (llt.info() != Eigen::Success || llt.rcond() < 1e-15) {
    throw Error(ErrorCode::SingularGamma, "covariance is not invertible to working precision");
  }
  const Matrix ginv = llt.solve(Matrix::Identity(2 * n, 2 * n));
  const Matrix sigma = symplectic_form(n, gamma.ordering());
  const Matrix tilde = partial_transpose_form(n, part, gamma.ordering());
  const Matrix m1 = linalg::symmetrized(g + sigma * ginv * sigma);
  const Matrix m2 = linalg::symmetrized(g + tilde * ginv * tilde);
  Matrix stacked(2 * n, 4 * n);
  stacked << m1, m2;

  const double gnorm = linalg::spectral_norm(g);
  MinimalityReport out;
  const Matrix* mats[3] = {&m1, &m2, &stacked};
  int* ranks[3] = {&out.rank_sigma, &out.rank_tilde, &out.rank_stacked};
  for (int k = 0; k < 3; ++k) {
    const Vector s = linalg::singular_values(*mats[k]);
    const double scale = std::max(s(0), gnorm);
    int r = 0;
    double dropped = 0.0;
    double kept = 0.0;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
      const double rel = s(i) / scale;
      if (rel > tol_rank) {
        ++r;
        kept = rel;
      } else {
        dropped = std::max(dropped, rel);
      }
    }
    *ranks[k] = r;
    out.largest_dropped[k] = dropped;
    out.smallest_kept[k] = kept;
  }
  out.minimal = out.rank_stacked == out.rank_sigma + out.rank_tilde;
  return out;
}

namespace detail {

Eigen::Matrix4d inverse_p_block(const BoundFamilyParams& p) {
  const double b1 = p.beta1, b2 = p.beta2;
  const auto& a = p.alpha;
  Eigen::Matrix4d d = Eigen::Matrix4d::Zero();
  d(0, 0) = a[4];
  d(1, 1) = a[5];
  d(2, 2) = (b1 - b2) * (b1 - b2) * a[1] * a[1] * a[2] * a[2] * (1.0 + a[6]) / a[5];
  d(3, 3) = (b2 - b1) * (b2 - b1) * a[0] * a[0] * a[3] * a[3] * (1.0 + a[7]) / a[4];
  d(0, 3) = d(3, 0) = (b2 - b1) * a[0] * a[3];
  d(1, 2) = d(2, 1) = (b1 - b2) * a[1] * a[2];
  return d;
}

}  // namespace detail
}  // namespace gaussbound
