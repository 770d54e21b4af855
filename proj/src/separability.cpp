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

#include "gaussbound/separability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "gaussbound/errors.hpp"

namespace gaussbound {
namespace {

CovarianceMatrix interleaved(const CovarianceMatrix& gamma) {
  return gamma.ordering() == Ordering::Interleaved ? gamma : reorder(gamma, Ordering::Interleaved);
}

}  // namespace

SeparabilityProblem::SeparabilityProblem(const CovarianceMatrix& gamma, const Bipartition& part)
    : gamma_(interleaved(gamma)), part_(part) {
  const int n = gamma_.n_modes();
  part_.validate(n);
  const int na = static_cast<int>(part_.modes_a.size());
  const int da = 2 * na;
  const int d = 2 * n;

  // Local A coordinate -> global coordinate.
  std::vector<int> glob(da);
  for (int i = 0; i < na; ++i) {
    glob[2 * i] = 2 * part_.modes_a[i];
    glob[2 * i + 1] = 2 * part_.modes_a[i] + 1;
  }
  Matrix sigma_b = Matrix::Zero(d, d);
  for (int k : part_.modes_b) {
    sigma_b(2 * k, 2 * k + 1) = 1.0;
    sigma_b(2 * k + 1, 2 * k) = -1.0;
  }
  const Matrix zero_a = Matrix::Zero(da, da);
  const Matrix zero = Matrix::Zero(d, d);
  constant_ = {linalg::real_embedding(zero_a, symplectic_form(na)),
               linalg::real_embedding(gamma_.data(), -sigma_b)};

  for (int r = 0; r < da; ++r) {
    for (int c = r; c < da; ++c) {
      entries_.emplace_back(r, c);
      Matrix e_local = Matrix::Zero(da, da);
      Matrix e_global = Matrix::Zero(d, d);
      e_local(r, c) = e_local(c, r) = 1.0;
      e_global(glob[r], glob[c]) = e_global(glob[c], glob[r]) = -1.0;
      coefficient_.push_back(
          {linalg::real_embedding(e_local, zero_a), linalg::real_embedding(e_global, zero)});
    }
  }
}

sdp::Blocks SeparabilityProblem::blocks(const Vector& x) const {
  sdp::Blocks out = constant_;
  for (int k = 0; k < num_variables(); ++k) {
    for (std::size_t b = 0; b < out.size(); ++b) out[b] += x(k) * coefficient_[k][b];
  }
  return out;
}

Matrix SeparabilityProblem::gamma_a(const Vector& x) const {
  const int da = 2 * static_cast<int>(part_.modes_a.size());
  Matrix g(da, da);
  for (int k = 0; k < num_variables(); ++k) {
    const auto [r, c] = entries_[k];
    g(r, c) = g(c, r) = x(k);
  }
  return g;
}

Vector SeparabilityProblem::variables(const Matrix& gamma_a) const {
  Vector x(num_variables());
  for (int k = 0; k < num_variables(); ++k) x(k) = gamma_a(entries_[k].first, entries_[k].second);
  return x;
}

SeparabilityProblem build_problem(const CovarianceMatrix& gamma, const Bipartition& part) {
  return SeparabilityProblem(gamma, part);
}

SdpSolution solve_min_slack(const SeparabilityProblem& problem, const sdp::Options& options) {
  const int m = problem.num_variables();
  sdp::Problem p;
  p.c = problem.constant_blocks();
  for (int k = 0; k < m; ++k) {
    sdp::Blocks a = problem.coefficient_blocks(k);
    for (auto& blk : a) blk = -blk;
    p.a.push_back(std::move(a));
  }
  sdp::Blocks shift;
  for (const auto& blk : p.c) shift.push_back(-Matrix::Identity(blk.rows(), blk.cols()));
  p.a.push_back(std::move(shift));
  p.b = Vector::Zero(m + 1);
  p.b(m) = -1.0;

  // Start from the reduced state of A, shifted well inside the cone.
  const Vector x0 = problem.variables(
      reduced_state(problem.gamma(), problem.partition().modes_a).data());
  double lmin = std::numeric_limits<double>::infinity();
  for (const auto& blk : problem.blocks(x0)) lmin = std::min(lmin, linalg::min_eigenvalue(blk));
  Vector y0(m + 1);
  y0.head(m) = x0;
  y0(m) = -lmin + std::max(1.0, linalg::spectral_norm(problem.gamma().data()));

  // X = I / N satisfies every primal equality exactly: the coefficient
  // blocks are traceless overall and the shift row asks for trace 1.
  int total = 0;
  for (const auto& blk : p.c) total += static_cast<int>(blk.rows());
  sdp::Blocks x_start;
  for (const auto& blk : p.c) x_start.push_back(Matrix::Identity(blk.rows(), blk.cols()) / total);

  const sdp::Solution s = sdp::solve(p, y0, options, x_start);

  SdpSolution out;
  out.status = s.status;
  out.iterations = s.iterations;
  out.gap = s.complementarity;
  out.t_star = s.y(m);
  out.gamma_a = problem.gamma_a(s.y.head(m));
  Vector residual(m + 1);
  for (int k = 0; k <= m; ++k) residual(k) = p.b(k) - sdp::inner(p.a[k], s.x);
  out.t_lower = out.t_star - s.complementarity - std::abs(residual.dot(s.y));
  out.min_block_eig = std::numeric_limits<double>::infinity();
  for (const auto& blk : problem.blocks(s.y.head(m))) {
    const Matrix shifted = blk + out.t_star * Matrix::Identity(blk.rows(), blk.cols());
    out.min_block_eig = std::min(out.min_block_eig, linalg::min_eigenvalue(shifted));
  }
  return out;
}

SeparabilityResult is_separable(const CovarianceMatrix& gamma, const Bipartition& part, double tol,
                                const sdp::Options& options) {
  SeparabilityResult out;
  out.solution = solve_min_slack(build_problem(gamma, part), options);
  const SdpSolution& s = out.solution;
  if (s.status != sdp::Status::Optimal) {
    throw Error(ErrorCode::Inconclusive,
                std::string("separability solver stopped with status ") + sdp::to_string(s.status));
  }
  if (s.t_lower <= tol && tol < s.t_star) {
    std::ostringstream msg;
    msg << "slack bracket [" << s.t_lower << ", " << s.t_star << "] straddles tolerance " << tol;
    throw Error(ErrorCode::Inconclusive, msg.str());
  }
  out.slack = s.t_star;
  out.separable = s.t_star <= tol;
  return out;
}

const char* to_string(EntanglementClass c) {
  switch (c) {
    case EntanglementClass::Separable: return "separable";
    case EntanglementClass::BoundEntangled: return "bound_entangled";
    case EntanglementClass::FreeEntangled: return "free_entangled";
  }
  return "unknown";
}

EntanglementVerdict classify(const CovarianceMatrix& gamma, const Bipartition& part,
                             const ClassifyOptions& options) {
  EntanglementVerdict v;
  const PsdCheck ppt = is_ppt(gamma, part, options.tol_ppt);
  v.ppt_margin = ppt.margin;
  v.ppt_tolerance = ppt.tolerance;
  if (!ppt.ok) {
    // Margins within rounding of zero cannot be placed against a tolerance
    // that is itself below rounding.
    const double norm = linalg::spectral_norm(gamma.data());
    const double noise = 64.0 * std::numeric_limits<double>::epsilon() * 4 * gamma.n_modes() * norm;
    if (ppt.margin >= -noise) {
      std::ostringstream msg;
      msg << "PPT margin " << ppt.margin << " is within rounding noise " << noise
          << " of zero but outside tolerance " << ppt.tolerance;
      throw Error(ErrorCode::Inconclusive, msg.str());
    }
    v.cls = EntanglementClass::FreeEntangled;
    return v;
  }
  const SeparabilityResult sep = is_separable(gamma, part, options.tol_sep, options.sdp);
  v.slack = sep.slack;
  v.iterations = sep.solution.iterations;
  v.cls = sep.separable ? EntanglementClass::Separable : EntanglementClass::BoundEntangled;
  return v;
}

}  // namespace gaussbound
