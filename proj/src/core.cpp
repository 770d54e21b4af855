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

#include "gaussbound/core.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "gaussbound/errors.hpp"

namespace gaussbound {
namespace {

void require_even_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0) {
    std::ostringstream os;
    os << what << " must be a nonempty 2n x 2n matrix, got " << m.rows() << "x" << m.cols();
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
}

// Index permutation: grouped position i holds interleaved coordinate perm[i].
std::vector<int> grouping_indices(int n) {
  std::vector<int> perm(2 * n);
  for (int k = 0; k < n; ++k) {
    perm[k] = 2 * k;
    perm[n + k] = 2 * k + 1;
  }
  return perm;
}

Matrix permute(const Matrix& m, const std::vector<int>& perm, bool to_grouped) {
  const int d = static_cast<int>(perm.size());
  Matrix out(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (to_grouped) {
        out(i, j) = m(perm[i], perm[j]);
      } else {
        out(perm[i], perm[j]) = m(i, j);
      }
    }
  }
  return out;
}

double symmetric_scale(const Matrix& gamma) {
  const Vector ev = linalg::symmetric_eigenvalues(gamma);
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

}  // namespace

int q_index(int mode, int /*n_modes*/, Ordering ordering) {
  return ordering == Ordering::Interleaved ? 2 * mode : mode;
}

int p_index(int mode, int n_modes, Ordering ordering) {
  return ordering == Ordering::Interleaved ? 2 * mode + 1 : n_modes + mode;
}

CovarianceMatrix::CovarianceMatrix(const Matrix& data, Ordering ordering) : ordering_(ordering) {
  require_even_square(data, "covariance matrix");
  if (!data.allFinite()) throw Error(ErrorCode::NonSymmetric, "covariance has non-finite entries");
  const double asym = linalg::max_abs(Matrix(data - data.transpose()));
  const double scale = std::max(1.0, linalg::max_abs(data));
  if (asym > kSymmetryTol * scale) {
    std::ostringstream os;
    os << "covariance asymmetry " << asym << " exceeds " << kSymmetryTol * scale;
    throw Error(ErrorCode::NonSymmetric, os.str());
  }
  data_ = linalg::symmetrized(data);
}

SymplecticTransform::SymplecticTransform(const Matrix& data, Ordering ordering, double tol)
    : data_(data), ordering_(ordering) {
  require_even_square(data, "symplectic transform");
  const double res = symplectic_residual(data, ordering);
  const double scale = std::max(1.0, std::pow(linalg::max_abs(data), 2));
  if (!(res <= tol * scale)) {
    std::ostringstream os;
    os << "|S sigma S^T - sigma|_max = " << res << " exceeds " << tol * scale;
    throw Error(ErrorCode::NotSymplectic, os.str());
  }
}

SymplecticTransform::SymplecticTransform(Matrix data, Ordering ordering, Unchecked)
    : data_(std::move(data)), ordering_(ordering) {}

SymplecticTransform SymplecticTransform::identity(int n_modes, Ordering ordering) {
  return SymplecticTransform(Matrix::Identity(2 * n_modes, 2 * n_modes), ordering, Unchecked{});
}

SymplecticTransform SymplecticTransform::operator*(const SymplecticTransform& rhs) const {
  if (rhs.data_.rows() != data_.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "composing transforms of different size");
  }
  if (rhs.ordering_ != ordering_) {
    throw Error(ErrorCode::OrderingMismatch, "composing transforms with different ordering");
  }
  return SymplecticTransform(data_ * rhs.data_, ordering_, Unchecked{});
}

SymplecticTransform SymplecticTransform::inverse() const {
  const Matrix sigma = symplectic_form(n_modes(), ordering_);
  // S^{-1} = -sigma S^T sigma for symplectic S.
  return SymplecticTransform(Matrix(-sigma * data_.transpose() * sigma), ordering_, Unchecked{});
}

SymplecticTransform SymplecticTransform::transpose() const {
  return SymplecticTransform(Matrix(data_.transpose()), ordering_, Unchecked{});
}

double symplectic_residual(const Matrix& s, Ordering ordering) {
  const Matrix sigma = symplectic_form(static_cast<int>(s.rows() / 2), ordering);
  return linalg::max_abs(Matrix(s * sigma * s.transpose() - sigma));
}

bool is_symplectic(const Matrix& s, Ordering ordering, double tol) {
  if (s.rows() != s.cols() || s.rows() % 2 != 0) return false;
  return symplectic_residual(s, ordering) <= tol;
}

Bipartition Bipartition::split(int n_a, int n_b) {
  Bipartition p;
  for (int k = 0; k < n_a; ++k) p.modes_a.push_back(k);
  for (int k = 0; k < n_b; ++k) p.modes_b.push_back(n_a + k);
  return p;
}

void Bipartition::validate(int n) const {
  if (modes_a.empty() || modes_b.empty()) {
    throw Error(ErrorCode::InvalidPartition, "both parties need at least one mode");
  }
  std::set<int> seen;
  for (int m : modes_a) seen.insert(m);
  for (int m : modes_b) seen.insert(m);
  if (static_cast<int>(seen.size()) != n_modes() || n_modes() != n || *seen.begin() != 0 ||
      *seen.rbegin() != n - 1) {
    std::ostringstream os;
    os << "partition must cover modes 0.." << n - 1 << " exactly once";
    throw Error(ErrorCode::InvalidPartition, os.str());
  }
}

Matrix symplectic_form(int n_modes, Ordering ordering) {
  Matrix s = Matrix::Zero(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    const int q = q_index(k, n_modes, ordering);
    const int p = p_index(k, n_modes, ordering);
    s(q, p) = 1.0;
    s(p, q) = -1.0;
  }
  return s;
}

Matrix partial_transpose_form(int n_modes, const Bipartition& part, Ordering ordering) {
  part.validate(n_modes);
  Matrix s = symplectic_form(n_modes, ordering);
  for (int k : part.modes_a) {
    const int q = q_index(k, n_modes, ordering);
    const int p = p_index(k, n_modes, ordering);
    s(q, p) = -1.0;
    s(p, q) = 1.0;
  }
  return s;
}

double hermitian_margin(const Matrix& gamma, const Matrix& form) {
  return linalg::min_eigenvalue(linalg::real_embedding(gamma, form));
}

PsdCheck is_valid_covariance(const CovarianceMatrix& gamma, double rel_tol) {
  PsdCheck out;
  out.margin = hermitian_margin(gamma.data(), symplectic_form(gamma.n_modes(), gamma.ordering()));
  out.tolerance = rel_tol * symmetric_scale(gamma.data());
  out.ok = out.margin >= -out.tolerance;
  return out;
}

PsdCheck is_valid_covariance(const Matrix& gamma, Ordering ordering, double rel_tol) {
  return is_valid_covariance(CovarianceMatrix(gamma, ordering), rel_tol);
}

CovarianceMatrix partial_transpose(const CovarianceMatrix& gamma, const Bipartition& part) {
  const int n = gamma.n_modes();
  part.validate(n);
  Vector flip = Vector::Ones(2 * n);
  for (int k : part.modes_b) flip(p_index(k, n, gamma.ordering())) = -1.0;
  return CovarianceMatrix(flip.asDiagonal() * gamma.data() * flip.asDiagonal(), gamma.ordering());
}

PsdCheck is_ppt(const CovarianceMatrix& gamma, const Bipartition& part, double rel_tol) {
  return is_valid_covariance(partial_transpose(gamma, part), rel_tol);
}

CovarianceMatrix apply_symplectic(const SymplecticTransform& s, const CovarianceMatrix& gamma) {
  if (s.n_modes() != gamma.n_modes()) {
    throw Error(ErrorCode::DimensionMismatch, "transform and covariance sizes differ");
  }
  if (s.ordering() != gamma.ordering()) {
    throw Error(ErrorCode::OrderingMismatch, "transform and covariance orderings differ");
  }
  return CovarianceMatrix(linalg::symmetrized(s.data() * gamma.data() * s.data().transpose()),
                          gamma.ordering());
}

CovarianceMatrix vacuum_state(int n_modes) {
  return CovarianceMatrix(Matrix::Identity(2 * n_modes, 2 * n_modes));
}

CovarianceMatrix thermal_state(std::span<const double> nbar) {
  const int n = static_cast<int>(nbar.size());
  Matrix g = Matrix::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    if (!(nbar[k] >= 0.0)) {
      std::ostringstream os;
      os << "mode " << k << " has occupation " << nbar[k];
      throw Error(ErrorCode::NegativeOccupation, os.str());
    }
    g(2 * k, 2 * k) = g(2 * k + 1, 2 * k + 1) = 2.0 * nbar[k] + 1.0;
  }
  return CovarianceMatrix(g);
}

CovarianceMatrix two_mode_squeezed_vacuum(double r) {
  const double c = std::cosh(2.0 * r);
  const double s = std::sinh(2.0 * r);
  Matrix g = Matrix::Zero(4, 4);
  g.diagonal().setConstant(c);
  g(0, 2) = g(2, 0) = s;
  g(1, 3) = g(3, 1) = -s;
  return CovarianceMatrix(g);
}

Matrix grouping_permutation(int n_modes) {
  const auto perm = grouping_indices(n_modes);
  Matrix p = Matrix::Zero(2 * n_modes, 2 * n_modes);
  for (int i = 0; i < 2 * n_modes; ++i) p(i, perm[i]) = 1.0;
  return p;
}

CovarianceMatrix reorder(const CovarianceMatrix& gamma, Ordering to) {
  if (gamma.ordering() == to) return gamma;
  const auto perm = grouping_indices(gamma.n_modes());
  return CovarianceMatrix(permute(gamma.data(), perm, to == Ordering::Grouped), to);
}

SymplecticTransform reorder(const SymplecticTransform& s, Ordering to) {
  if (s.ordering() == to) return s;
  const auto perm = grouping_indices(s.n_modes());
  return SymplecticTransform(permute(s.data(), perm, to == Ordering::Grouped), to);
}

namespace {

Matrix block_sum(const Matrix& a, int na, const Matrix& b, int nb, Ordering ordering) {
  const int n = na + nb;
  Matrix out = Matrix::Zero(2 * n, 2 * n);
  // Coordinate lists of each summand inside the joint system.
  auto coords = [&](int offset, int count) {
    std::vector<int> idx(2 * count);
    for (int k = 0; k < count; ++k) {
      idx[q_index(k, count, ordering)] = q_index(offset + k, n, ordering);
      idx[p_index(k, count, ordering)] = p_index(offset + k, n, ordering);
    }
    return idx;
  };
  const auto ia = coords(0, na);
  const auto ib = coords(na, nb);
  for (int i = 0; i < 2 * na; ++i)
    for (int j = 0; j < 2 * na; ++j) out(ia[i], ia[j]) = a(i, j);
  for (int i = 0; i < 2 * nb; ++i)
    for (int j = 0; j < 2 * nb; ++j) out(ib[i], ib[j]) = b(i, j);
  return out;
}

}  // namespace

CovarianceMatrix direct_sum(const CovarianceMatrix& a, const CovarianceMatrix& b) {
  if (a.ordering() != b.ordering()) {
    throw Error(ErrorCode::OrderingMismatch, "direct sum of covariances with different ordering");
  }
  return CovarianceMatrix(block_sum(a.data(), a.n_modes(), b.data(), b.n_modes(), a.ordering()),
                          a.ordering());
}

SymplecticTransform direct_sum(const SymplecticTransform& a, const SymplecticTransform& b) {
  if (a.ordering() != b.ordering()) {
    throw Error(ErrorCode::OrderingMismatch, "direct sum of transforms with different ordering");
  }
  return SymplecticTransform(
      block_sum(a.data(), a.n_modes(), b.data(), b.n_modes(), a.ordering()), a.ordering());
}

CovarianceMatrix reduced_state(const CovarianceMatrix& gamma, std::span<const int> modes) {
  const int n = gamma.n_modes();
  const int m = static_cast<int>(modes.size());
  std::vector<int> idx(2 * m);
  for (int k = 0; k < m; ++k) {
    if (modes[k] < 0 || modes[k] >= n) {
      throw Error(ErrorCode::InvalidPartition, "mode index out of range");
    }
    idx[q_index(k, m, gamma.ordering())] = q_index(modes[k], n, gamma.ordering());
    idx[p_index(k, m, gamma.ordering())] = p_index(modes[k], n, gamma.ordering());
  }
  Matrix out(2 * m, 2 * m);
  for (int i = 0; i < 2 * m; ++i)
    for (int j = 0; j < 2 * m; ++j) out(i, j) = gamma(idx[i], idx[j]);
  return CovarianceMatrix(out, gamma.ordering());
}

}  // namespace gaussbound
