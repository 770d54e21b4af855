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

#include "gaussbound/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gaussbound::sdp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTiny = std::numeric_limits<double>::min();

struct BlockScaling {
  Matrix g;      // W = G G^T,  G^{-1} X G^{-T} = G^T Z G = diag(lambda)
  Matrix g_inv;
  Matrix w;
  Vector lambda;
};

int total_dim(const Blocks& blocks) {
  int n = 0;
  for (const auto& m : blocks) n += static_cast<int>(m.rows());
  return n;
}

Vector apply_a(const Problem& p, const Blocks& x) {
  Vector out(p.a.size());
  for (std::size_t i = 0; i < p.a.size(); ++i) out(i) = inner(p.a[i], x);
  return out;
}

Blocks combine_a(const Problem& p, const Vector& y) {
  Blocks out;
  for (const auto& c : p.c) out.push_back(Matrix::Zero(c.rows(), c.cols()));
  for (std::size_t i = 0; i < p.a.size(); ++i) {
    if (y(i) == 0.0) continue;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += y(i) * p.a[i][k];
  }
  return out;
}

// Largest step keeping m + alpha * dm PSD, given the Cholesky factor of m.
double max_step(const Eigen::LLT<Matrix>& chol, const Matrix& dm) {
  const Matrix l_inv_dm = chol.matrixL().solve(dm);
  const Matrix scaled = chol.matrixL().solve(Matrix(l_inv_dm.transpose()));
  const double lmin = linalg::min_eigenvalue(scaled);
  return lmin >= 0.0 ? kInf : -1.0 / lmin;
}

bool nt_scaling(const Eigen::LLT<Matrix>& chol_x, const Eigen::LLT<Matrix>& chol_z,
                BlockScaling& out) {
  const Matrix lx = chol_x.matrixL();
  const Matrix lz = chol_z.matrixL();
  Eigen::JacobiSVD<Matrix> svd(Matrix(lz.transpose() * lx), Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Vector s = svd.singularValues();
  if (!(s.minCoeff() > 0.0)) return false;
  const Vector s_isqrt = s.cwiseSqrt().cwiseInverse();
  out.g = lx * svd.matrixV() * s_isqrt.asDiagonal();
  out.g_inv = s.cwiseSqrt().asDiagonal() * svd.matrixV().transpose() *
              Matrix(chol_x.matrixL().solve(Matrix::Identity(lx.rows(), lx.cols())));
  out.w = out.g * out.g.transpose();
  out.lambda = s;
  return true;
}

bool schur_ok(const Eigen::LDLT<Matrix>& f) {
  return f.info() == Eigen::Success && f.vectorD().minCoeff() > 0.0;
}

}  // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::Optimal: return "optimal";
    case Status::MaxIter: return "max_iter";
    case Status::NumericalFailure: return "numerical_failure";
  }
  return "unknown";
}

double inner(const Blocks& a, const Blocks& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k].cwiseProduct(b[k]).sum();
  return s;
}

Blocks dual_slack(const Problem& problem, const Vector& y) {
  Blocks z = problem.c;
  const Blocks ay = combine_a(problem, y);
  for (std::size_t k = 0; k < z.size(); ++k) z[k] = linalg::symmetrized(z[k] - ay[k]);
  return z;
}

Solution solve(const Problem& p, const Vector& y0, const Options& opt,
               const std::optional<Blocks>& x0) {
  const std::size_t nb = p.c.size();
  const int m = static_cast<int>(p.a.size());
  Solution sol;
  sol.y = y0;
  sol.z = dual_slack(p, sol.y);
  const int n_total = total_dim(sol.z);

  if (x0) {
    sol.x = *x0;
  } else {
    double trace_z = 0.0;
    for (const auto& z : sol.z) trace_z += z.trace();
    const double scale = std::max(1.0, trace_z / n_total);
    for (const auto& z : sol.z) sol.x.push_back(Matrix::Identity(z.rows(), z.cols()) / scale);
  }

  const double b_norm = p.b.norm();
  double prev_mu = kInf;
  int stalled = 0;
  std::optional<Solution> last_good;

  // When progress ends early, accept the iterate if the duality gap,
  // including the contribution of the primal residual, is small anyway.
  auto finish_stalled = [&](Solution s) {
    const Vector r = p.b - apply_a(p, s.x);
    const double total_gap = s.complementarity + std::abs(r.dot(s.y));
    const double scale = std::max(1.0, std::abs(s.dual_objective));
    const bool ok = r.norm() <= opt.stall_feas_tol * (1.0 + b_norm) &&
                    total_gap <= opt.stall_gap_tol * scale;
    s.status = ok ? Status::Optimal : Status::NumericalFailure;
    return s;
  };

  for (int iter = 0; iter <= opt.max_iter; ++iter) {
    sol.iterations = iter;
    sol.z = dual_slack(p, sol.y);
    std::vector<Eigen::LLT<Matrix>> chol_x(nb), chol_z(nb);
    for (std::size_t k = 0; k < nb; ++k) {
      chol_x[k].compute(sol.x[k]);
      chol_z[k].compute(sol.z[k]);
      if (chol_x[k].info() != Eigen::Success || chol_z[k].info() != Eigen::Success) {
        if (last_good) return finish_stalled(*last_good);
        sol.status = Status::NumericalFailure;
        return sol;
      }
    }
    const Vector rp = p.b - apply_a(p, sol.x);
    const double mu = inner(sol.x, sol.z) / n_total;
    sol.primal_objective = inner(p.c, sol.x);
    sol.dual_objective = p.b.dot(sol.y);
    sol.complementarity = inner(sol.x, sol.z);
    sol.primal_infeasibility = rp.norm();

    const double obj_scale = std::max(1.0, std::abs(sol.dual_objective));
    const bool feasible = sol.primal_infeasibility <= opt.feas_tol * (1.0 + b_norm);
    if (feasible && sol.complementarity <= opt.gap_tol * obj_scale) {
      sol.status = Status::Optimal;
      return sol;
    }
    if (iter == opt.max_iter) break;

    last_good = sol;
    stalled = (mu > 0.5 * prev_mu) ? stalled + 1 : 0;
    prev_mu = mu;
    if (stalled >= 5) return finish_stalled(sol);

    std::vector<BlockScaling> sc(nb);
    for (std::size_t k = 0; k < nb; ++k) {
      if (!nt_scaling(chol_x[k], chol_z[k], sc[k])) return finish_stalled(sol);
    }

    // Schur complement M_ij = sum_k tr(A_i W A_j W).
    std::vector<Blocks> waw(m);
    for (int i = 0; i < m; ++i) {
      waw[i].resize(nb);
      for (std::size_t k = 0; k < nb; ++k) waw[i][k] = sc[k].w * p.a[i][k] * sc[k].w;
    }
    Matrix schur(m, m);
    for (int i = 0; i < m; ++i) {
      for (int j = i; j < m; ++j) schur(i, j) = schur(j, i) = inner(p.a[j], waw[i]);
    }
    // Near the optimum W is badly conditioned and M can lose definiteness in
    // floating point; retry with a growing diagonal shift before giving up.
    Eigen::LDLT<Matrix> schur_fact(schur);
    const double diag_scale = std::max(schur.diagonal().cwiseAbs().maxCoeff(), kTiny);
    for (double shift = 1e-14; !schur_ok(schur_fact); shift *= 100.0) {
      if (shift > 1e-6) return finish_stalled(sol);
      schur_fact.compute(schur + Matrix::Identity(m, m) * (shift * diag_scale));
    }

    // Direction for a given complementarity target r_c: dX = r_c - W dZ W.
    auto direction = [&](const Blocks& rc, Vector& dy, Blocks& dx, Blocks& dz) {
      dy = schur_fact.solve(Vector(rp - apply_a(p, rc)));
      const Blocks ady = combine_a(p, dy);
      dz.resize(nb);
      dx.resize(nb);
      for (std::size_t k = 0; k < nb; ++k) {
        dz[k] = -ady[k];
        dx[k] = linalg::symmetrized(rc[k] - sc[k].w * dz[k] * sc[k].w);
      }
    };
    auto step_lengths = [&](const Blocks& dx, const Blocks& dz) {
      double ap = kInf, ad = kInf;
      for (std::size_t k = 0; k < nb; ++k) {
        ap = std::min(ap, max_step(chol_x[k], dx[k]));
        ad = std::min(ad, max_step(chol_z[k], dz[k]));
      }
      return std::pair{ap, ad};
    };

    // Predictor.
    Blocks rc(nb);
    for (std::size_t k = 0; k < nb; ++k) rc[k] = -sol.x[k];
    Vector dy;
    Blocks dx, dz;
    direction(rc, dy, dx, dz);
    auto [ap_max, ad_max] = step_lengths(dx, dz);
    const double ap_aff = std::min(1.0, ap_max);
    const double ad_aff = std::min(1.0, ad_max);
    double mu_aff = 0.0;
    for (std::size_t k = 0; k < nb; ++k) {
      mu_aff += Matrix(sol.x[k] + ap_aff * dx[k]).cwiseProduct(Matrix(sol.z[k] + ad_aff * dz[k])).sum();
    }
    mu_aff /= n_total;
    const double centering = std::clamp(std::pow(std::max(mu_aff, 0.0) / mu, 3.0), 0.0, 1.0);

    // Corrector in the NT-scaled space, where X and Z both become diag(lambda).
    for (std::size_t k = 0; k < nb; ++k) {
      const Matrix dxs = sc[k].g_inv * dx[k] * sc[k].g_inv.transpose();
      const Matrix dzs = sc[k].g.transpose() * dz[k] * sc[k].g;
      Matrix r = -(dxs * dzs + dzs * dxs);
      const Vector& lam = sc[k].lambda;
      for (Eigen::Index i = 0; i < lam.size(); ++i) r(i, i) += 2.0 * (centering * mu - lam(i) * lam(i));
      Matrix h(r.rows(), r.cols());
      for (Eigen::Index i = 0; i < h.rows(); ++i)
        for (Eigen::Index j = 0; j < h.cols(); ++j) h(i, j) = r(i, j) / (lam(i) + lam(j));
      rc[k] = linalg::symmetrized(sc[k].g * h * sc[k].g.transpose());
    }
    direction(rc, dy, dx, dz);
    std::tie(ap_max, ad_max) = step_lengths(dx, dz);
    const double ap = std::min(1.0, opt.step_fraction * ap_max);
    const double ad = std::min(1.0, opt.step_fraction * ad_max);
    if (ap < 1e-12 && ad < 1e-12) return finish_stalled(sol);
    for (std::size_t k = 0; k < nb; ++k) sol.x[k] = linalg::symmetrized(sol.x[k] + ap * dx[k]);
    sol.y += ad * dy;
  }
  sol.status = Status::MaxIter;
  return sol;
}

}  // namespace gaussbound::sdp
