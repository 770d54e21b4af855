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

// Small dense semidefinite programs in dual (LMI) form:
//
//   maximize    b^T y
//   subject to  Z = C - sum_i y_i A_i  is PSD          (block diagonal)
//
// with the associated primal
//
//   minimize    <C, X>   subject to  <A_i, X> = b_i,  X PSD.
//
// Primal-dual path following with Nesterov-Todd scaling and a Mehrotra
// predictor-corrector. The caller supplies a strictly dual feasible y0; the
// dual iterates stay exactly feasible (Z is recomputed from y every step), so
// the returned b^T y is attained by a certified point.

#include <optional>
#include <vector>

#include "gaussbound/linalg.hpp"

namespace gaussbound::sdp {

using Blocks = std::vector<Matrix>;

struct Problem {
  Blocks c;                   ///< one symmetric matrix per block
  std::vector<Blocks> a;      ///< a[i] is the block list of A_i
  Vector b;
};

enum class Status { Optimal, MaxIter, NumericalFailure };

const char* to_string(Status s);

struct Options {
  int max_iter = 200;
  /// Stop when <X, Z> <= gap_tol * max(1, |b^T y|) ...
  double gap_tol = 1e-10;
  /// ... and |b - A(X)| <= feas_tol * (1 + |b|).
  double feas_tol = 1e-10;
  /// When progress stalls or a factorization breaks down, the last good
  /// iterate is accepted as Optimal if <X, Z> + |r^T y| <= stall_gap_tol *
  /// max(1, |b^T y|) and |r| <= stall_feas_tol * (1 + |b|), r = b - A(X).
  double stall_gap_tol = 1e-8;
  double stall_feas_tol = 1e-7;
  double step_fraction = 0.98;
};

struct Solution {
  Status status = Status::NumericalFailure;
  Vector y;
  Blocks x;
  Blocks z;
  double primal_objective = 0.0;  ///< <C, X>
  double dual_objective = 0.0;    ///< b^T y
  double complementarity = 0.0;   ///< <X, Z>
  double primal_infeasibility = 0.0;
  int iterations = 0;
};

/// Z(y) = C - sum_i y_i A_i.
Blocks dual_slack(const Problem& problem, const Vector& y);

double inner(const Blocks& a, const Blocks& b);

/// Solves the pair. `y0` must make Z(y0) positive definite; `x0` defaults to
/// identity blocks scaled to match the trace of Z(y0).
Solution solve(const Problem& problem, const Vector& y0, const Options& options = {},
               const std::optional<Blocks>& x0 = std::nullopt);

}  // namespace gaussbound::sdp
