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

// Separability of bipartite Gaussian states.
//
// gamma is separable iff some real symmetric gamma_A satisfies
//
//   gamma_A + i sigma_A >= 0   and   gamma - (gamma_A (+) i sigma_B) >= 0.
//
// Both Hermitian constraints go through their real embeddings. The decision
// is made on the smallest uniform shift t for which both hold after adding
// t I; t <= 0 means separable, and the signed value is a usable margin.

#include <optional>
#include <utility>
#include <vector>

#include "gaussbound/core.hpp"
#include "gaussbound/sdp.hpp"

namespace gaussbound {

class SeparabilityProblem {
 public:
  SeparabilityProblem(const CovarianceMatrix& gamma, const Bipartition& part);

  const CovarianceMatrix& gamma() const { return gamma_; }
  const Bipartition& partition() const { return part_; }

  /// n_A (2 n_A + 1): the independent entries of gamma_A.
  int num_variables() const { return static_cast<int>(entries_.size()); }
  /// (row, col) of gamma_A addressed by variable k, row <= col.
  std::pair<int, int> entry(int k) const { return entries_[k]; }

  /// Embedded constraint blocks at x: sizes 4 n_A and 4 n.
  sdp::Blocks blocks(const Vector& x) const;
  const sdp::Blocks& constant_blocks() const { return constant_; }
  const sdp::Blocks& coefficient_blocks(int k) const { return coefficient_[k]; }

  Matrix gamma_a(const Vector& x) const;
  /// Variables reproducing gamma_a.
  Vector variables(const Matrix& gamma_a) const;

 private:
  CovarianceMatrix gamma_;
  Bipartition part_;
  std::vector<std::pair<int, int>> entries_;
  sdp::Blocks constant_;
  std::vector<sdp::Blocks> coefficient_;
};

SeparabilityProblem build_problem(const CovarianceMatrix& gamma, const Bipartition& part);

struct SdpSolution {
  double t_star = 0.0;   ///< attained by gamma_a: an upper bound on the optimum
  double t_lower = 0.0;  ///< lower bound on the optimum from the primal iterate
  Matrix gamma_a;
  int iterations = 0;
  sdp::Status status = sdp::Status::NumericalFailure;
  double gap = 0.0;            ///< <X, Z> at exit
  double min_block_eig = 0.0;  ///< lambda_min over both blocks shifted by t_star
};

SdpSolution solve_min_slack(const SeparabilityProblem& problem, const sdp::Options& options = {});

struct SeparabilityResult {
  bool separable = false;
  double slack = 0.0;
  SdpSolution solution;
};

/// Throws Inconclusive when the solver does not certify the side of `tol`
/// on which the optimum lies.
SeparabilityResult is_separable(const CovarianceMatrix& gamma, const Bipartition& part,
                                double tol = 1e-6, const sdp::Options& options = {});

enum class EntanglementClass { Separable, BoundEntangled, FreeEntangled };

const char* to_string(EntanglementClass c);

struct ClassifyOptions {
  double tol_sep = 1e-6;
  /// Relative to |gamma|_2.
  double tol_ppt = 1e-9;
  sdp::Options sdp;
};

struct EntanglementVerdict {
  EntanglementClass cls = EntanglementClass::Separable;
  double ppt_margin = 0.0;
  double ppt_tolerance = 0.0;
  std::optional<double> slack;  ///< absent when the PPT test already decides
  int iterations = 0;
};

/// FreeEntangled when the PPT margin is below -tol_ppt |gamma|_2, otherwise
/// Separable or BoundEntangled by the slack. Throws Inconclusive when either
/// test cannot resolve its threshold at working precision.
EntanglementVerdict classify(const CovarianceMatrix& gamma, const Bipartition& part,
                             const ClassifyOptions& options = {});

}  // namespace gaussbound
