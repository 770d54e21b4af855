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

// The ten-parameter family of 2x2-mode bound entangled covariance matrices.
//
// Every member has the sparsity pattern
//
//   g11 .   .   .   g15 .   .   .
//   .   g22 .   .   .   .   .   g28
//   .   .   g33 .   .   .   g37 .
//   .   .   .   g44 .   g46 .   .
//   g15 .   .   .   g55 .   .   .
//   .   .   .   g46 .   g66 .   .
//   .   .   g37 .   .   .   g77 .
//   .   g28 .   .   .   .   .   g88
//
// in interleaved ordering, with Alice holding modes {0, 1} and Bob {2, 3}.
// It is PPT, minimal, and not separable for every admissible parameter set.

#include <array>
#include <string_view>
#include <vector>

#include "gaussbound/core.hpp"

namespace gaussbound {

struct BoundFamilyParams {
  double beta1 = 0.0;
  double beta2 = 0.0;
  std::array<double, 8> alpha{};  ///< alpha[0] is alpha_1
};

enum class ParamViolation {
  NonFinite,
  Beta1EqualsBeta2,
  BetaProductMinusOne,
  Alpha1Zero,
  Alpha2Zero,
  Alpha3Zero,
  Alpha4Zero,
  Alpha5NonPositive,
  Alpha6NonPositive,
  Alpha7NonPositive,
  Alpha8NonPositive,
};

std::string_view to_string(ParamViolation v);

/// Minimum separation enforced on the open constraints.
inline constexpr double kParamSeparation = 1e-9;
/// Below this separation parameters are accepted but flagged as ill-conditioned.
inline constexpr double kParamWarnSeparation = 1e-4;

/// Empty iff the parameters are admissible.
std::vector<ParamViolation> validate_params(const BoundFamilyParams& params,
                                            double separation = kParamSeparation);

/// Constraints that hold but with a margin below `warn_separation`.
std::vector<ParamViolation> near_degenerate_params(const BoundFamilyParams& params,
                                                   double warn_separation = kParamWarnSeparation);

/// Builds the family member. Throws InvalidParams naming the first violation.
CovarianceMatrix construct(const BoundFamilyParams& params);

/// Parameters of the four worked examples (index 1..4).
BoundFamilyParams preset_params(int example);

/// The four example matrices entered from their exact entries.
CovarianceMatrix preset_matrix(int example);

/// Alice/Bob split used throughout the family analysis.
Bipartition family_partition();

struct BlockReduction {
  Eigen::Matrix4d q_block;  ///< covariances among (q1, q2, q3, q4)
  Eigen::Matrix4d p_block;  ///< covariances among (p1, p2, p3, p4)
};

/// P gamma P^T = q_block (+) p_block. Throws PatternMismatch when any entry
/// outside the family pattern exceeds 1e-12, DimensionMismatch if not 8x8.
BlockReduction block_reduce(const CovarianceMatrix& gamma);

struct BlockPptCheck {
  bool ok = false;
  double p_block_min_eig = 0.0;
  double schur_min_eig = 0.0;  ///< lambda_min(q_block - p_block^{-1})
  int schur_rank = 0;
};

/// PPT validity through the blocks: p_block > 0 and q_block - p_block^{-1} >= 0.
BlockPptCheck block_ppt_check(const BlockReduction& blocks, double tol = 1e-9,
                              double rank_tol = 1e-8);

/// diag(1, 1, -1, -1, 1, -1, -1, 1).
Eigen::Matrix<double, 8, 8> sign_symmetry();

bool commutes_with_sign_symmetry(const CovarianceMatrix& gamma, double tol = 1e-12);

struct MinimalityReport {
  bool minimal = false;
  int rank_sigma = 0;    ///< rank(gamma + sigma gamma^{-1} sigma)
  int rank_tilde = 0;    ///< rank(gamma + sigma~ gamma^{-1} sigma~)
  int rank_stacked = 0;  ///< rank of the two side by side
  /// Largest normalized singular value counted as zero and smallest counted
  /// as nonzero, per matrix (sigma, tilde, stacked).
  std::array<double, 3> largest_dropped{};
  std::array<double, 3> smallest_kept{};
};

/// Sufficient rank condition for minimality of a PPT covariance matrix.
/// Singular values are compared against tol_rank * max(s_max, |gamma|_2).
/// Throws SingularGamma if gamma cannot be inverted reliably.
MinimalityReport is_minimal_ppt(const CovarianceMatrix& gamma, const Bipartition& part,
                                double tol_rank = 1e-8);

namespace detail {
/// Inverse of the momentum block expressed in the parameters; used only to
/// cross-check the closed-form entries.
Eigen::Matrix4d inverse_p_block(const BoundFamilyParams& params);
}  // namespace detail

}  // namespace gaussbound
