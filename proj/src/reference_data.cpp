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

#include "gaussbound/reference_data.hpp"

#include <cmath>
#include <complex>

namespace gaussbound::reference {
namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

struct Radicals {
  double r3 = std::sqrt(3.0);
  double r7 = std::sqrt(7.0);
  double r13 = std::sqrt(13.0);
  double r17 = std::sqrt(17.0);
  double r39 = std::sqrt(39.0);
  double p = std::sqrt(5.0 + std::sqrt(13.0));
  double m = std::sqrt(5.0 - std::sqrt(13.0));
};

struct LEntries {
  double l12, l14, l16, l18, l51, l53, l55, l57;
};

LEntries l_entries() {
  const Radicals k;
  const double r3 = k.r3, r7 = k.r7, r13 = k.r13, r17 = k.r17, r39 = k.r39, P = k.p, M = k.m;
  LEntries e;
  e.l12 = ((-(21 + 3 * r17) + 3 * (1 - r17) * r13 + (5 - r17) * r39 + (5 - r17) * r3) * P +
           ((21 + 3 * r17) + 3 * (1 - r17) * r13 + (5 - r17) * r39 - (5 - r17) * r3) * M) /
          (48 * r13);
  e.l14 = (((30 - 6 * r17) + (3 + r17) * r39 + (7 * r17 - 3) * r3) * P +
           (-(30 - 6 * r17) + (3 + r17) * r39 - (7 * r17 - 3) * r3) * M) /
          (48 * r13);
  e.l16 = (((35 - 7 * r17) * r13 - (125 - 25 * r17) + (r17 - 1) * r39 + (7 + r17) * r3) * P +
           ((35 - 7 * r17) * r13 + (125 - 25 * r17) + (r17 - 1) * r39 - (7 + r17) * r3) * M) /
          (16 * r7 * r13);
  e.l18 = (((37 - 9 * r17) * r13 + (33 * r17 - 133) + (2 * r17 - 10) * r3) * P +
           ((37 - 9 * r17) * r13 + (133 - 33 * r17) + (10 - 2 * r17) * r3) * M) /
          (16 * r7 * r13);
  e.l51 = (((4 * r17 - 12) * r39 + (10 * r17 - 54) * r3 + (63 - 9 * r17) + (21 - 3 * r17) * r13) * P +
           ((4 * r17 - 12) * r39 - (10 * r17 - 54) * r3 - (63 - 9 * r17) + (21 - 3 * r17) * r13) * M) /
          (96 * r13);
  e.l53 = (((21 * r17 - 51) + (3 * r17 - 21) * r13 + (2 * r17 - 14) * r39 + (8 * r17 - 56) * r3) * P +
           ((-21 * r17 + 51) + (3 * r17 - 21) * r13 + (2 * r17 - 14) * r39 - (8 * r17 - 56) * r3) * M) /
          (96 * r13);
  e.l55 = ((-(106 + 42 * r17) + (12 * r17 + 28) * r13 + (r17 - 7) * r39 + (3 * r17 - 21) * r3) * P +
           ((106 + 42 * r17) + (28 + 12 * r17) * r13 + (21 - 3 * r17) * r3 + (r17 - 7) * r39) * M) /
          (32 * r7 * r13);
  e.l57 = (((-56 + 8 * r17) + (14 - 2 * r17) * r13 + (7 - r17) * r39 + (17 - 7 * r17) * r3) * P +
           ((56 - 8 * r17) + (14 - 2 * r17) * r13 + (7 - r17) * r39 - (17 - 7 * r17) * r3) * M) /
          (32 * r7 * r13);
  return e;
}

CMatrix mat4(std::initializer_list<cd> v) {
  CMatrix out(4, 4);
  auto it = v.begin();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = *it++;
  return out;
}

}  // namespace

double squeezing_tau() { return (std::sqrt(17.0) + 1.0) / 4.0; }

double interferometer_norm() { return std::sqrt(17.0 - 3.0 * std::sqrt(17.0)); }

Matrix williamson_diagonal() {
  Vector d(8);
  d << 1, 1, 1, 1, 3, 3, 3, 3;
  return d.asDiagonal();
}

Matrix williamson_symplectic() {
  const Radicals k;
  const double r3 = k.r3, r7 = k.r7, r13 = k.r13, r39 = k.r39, P = k.p, M = k.m;
  const double s12 = ((-r13 - 3) * P + (3 - r13) * M) / (8 * r13);
  const double s14 = ((r39 + 4 * r3) * P + (r39 - 4 * r3) * M) / (12 * r13);
  const double s16 = ((r39 + 3 * r3) * P + (r39 - 3 * r3) * M) / (8 * r7 * r13);
  const double s18 = ((4 - r13) * P - (4 + r13) * M) / (4 * r7 * r13);
  const double s21 = ((r39 - 3 * r3) * P + (r39 + 3 * r3) * M) / (8 * r13);
  const double s23 = ((4 - r13) * P - (4 + r13) * M) / (4 * r13);
  const double s25 = ((3 - r13) * P - (3 + r13) * M) / (8 * r7 * r13);
  const double s27 = ((r13 + 4) * P + (r13 - 4) * M) / (4 * r3 * r7 * r13);
  const double s52 = ((r39 + r3) * P + (r39 - r3) * M) / (24 * r13);
  const double s54 = (P - M) / (4 * r13);
  const double s56 = ((7 * r13 - 25) * P + (7 * r13 + 25) * M) / (8 * r7 * r13);
  const double s58 = (-r3 * P + r3 * M) / (4 * r7 * r13);
  const double s81 = (-r3 * P + r3 * M) / (4 * r13);
  const double s83 = ((-1 + r13) * P + (1 + r13) * M) / (-8 * r13);
  const double s85 = (P - M) / (4 * r7 * r13);
  const double s87 = ((-25 - 7 * r13) * P + (25 - 7 * r13) * M) / (8 * r3 * r7 * r13);
  Matrix s(8, 8);
  s << 0, s12, 0, s14, 0, s16, 0, s18,
       s21, 0, s23, 0, s25, 0, s27, 0,
       0, s14, 0, -s12, 0, s18, 0, -s16,
       s23, 0, -s21, 0, s27, 0, -s25, 0,
       0, s52, 0, s54, 0, s56, 0, s58,
       s83, 0, -s81, 0, s87, 0, -s85, 0,
       0, -s54, 0, s52, 0, -s58, 0, s56,
       s81, 0, s83, 0, s85, 0, s87, 0;
  return s;
}

Matrix euler_k() {
  const double n = interferometer_norm();
  const double c = (std::sqrt(17.0) - 3.0) / 2.0;
  Matrix k(8, 8);
  k << 2, 0, 0, 0, 0, -c, 0, -c,
       0, 2, 0, 0, c, 0, c, 0,
       0, 0, 2, 0, 0, -c, 0, c,
       0, 0, 0, 2, c, 0, -c, 0,
       c, 0, c, 0, 0, 2, 0, 0,
       0, c, 0, c, -2, 0, 0, 0,
       c, 0, -c, 0, 0, 0, 0, 2,
       0, c, 0, -c, 0, 0, -2, 0;
  return k / n;
}

Matrix euler_l() {
  const LEntries e = l_entries();
  Matrix l(8, 8);
  l << 0, e.l12, 0, e.l14, 0, e.l16, 0, e.l18,
       -e.l12, 0, -e.l14, 0, -e.l16, 0, -e.l18, 0,
       0, e.l14, 0, -e.l12, 0, e.l18, 0, -e.l16,
       -e.l14, 0, e.l12, 0, -e.l18, 0, e.l16, 0,
       e.l51, 0, e.l53, 0, e.l55, 0, e.l57, 0,
       0, e.l51, 0, e.l53, 0, e.l55, 0, e.l57,
       -e.l53, 0, e.l51, 0, -e.l57, 0, e.l55, 0,
       0, -e.l53, 0, e.l51, 0, -e.l57, 0, e.l55;
  return l / interferometer_norm();
}

Matrix squeezer_block() {
  const double t = squeezing_tau();
  Vector d(8);
  d << t, 1 / t, t, 1 / t, t, 1 / t, t, 1 / t;
  return d.asDiagonal();
}

CMatrix unitary_l() {
  const LEntries e = l_entries();
  return mat4({-kI * e.l12, -kI * e.l14, -kI * e.l16, -kI * e.l18,
               -kI * e.l14, kI * e.l12, -kI * e.l18, kI * e.l16,
               e.l51, e.l53, e.l55, e.l57,
               -e.l53, e.l51, -e.l57, e.l55}) /
         interferometer_norm();
}

CMatrix unitary_k() {
  const double c = (std::sqrt(17.0) - 3.0) / 2.0;
  return mat4({2, 0, c * kI, c * kI,
               0, 2, c * kI, -c * kI,
               c, c, -2.0 * kI, 0,
               c, -c, 0, -2.0 * kI}) /
         interferometer_norm();
}

std::array<CMatrix, 5> factors_a() {
  const LEntries e = l_entries();
  const double n = interferometer_norm();
  const double n1 = std::hypot(e.l12, e.l14);
  const double n2 = std::hypot(e.l51, e.l53);
  const double den = std::sqrt((e.l51 * e.l51 + e.l53 * e.l53) * (e.l55 * e.l55 + e.l57 * e.l57));
  std::array<CMatrix, 5> a;
  a[0] = mat4({1, 0, 0, 0,
               0, 1, 0, 0,
               0, 0, (e.l51 * e.l55 + e.l57 * e.l53) / den, (e.l57 * e.l51 - e.l53 * e.l55) / den,
               0, 0, (e.l53 * e.l55 - e.l57 * e.l51) / den, (e.l51 * e.l55 + e.l53 * e.l57) / den});
  a[1] = mat4({n, 0, 0, 0,
               0, -kI * n1, 0, -kI * n2,
               0, 0, n, 0,
               0, -n2, 0, n1}) / n;
  a[2] = mat4({-kI * n1, 0, kI * n2, 0,
               0, n, 0, 0,
               n2, 0, n1, 0,
               0, 0, 0, n}) / n;
  a[3] = mat4({e.l12 / n1, -e.l14 / n1, 0, 0,
               e.l14 / n1, e.l12 / n1, 0, 0,
               0, 0, 1, 0,
               0, 0, 0, 1});
  a[4] = mat4({1, 0, 0, 0,
               0, 1, 0, 0,
               0, 0, e.l51 / n2, e.l53 / n2,
               0, 0, -e.l53 / n2, e.l51 / n2});
  return a;
}

std::array<CMatrix, 4> factors_b() {
  const double n = interferometer_norm();
  const double h = std::sqrt(2.0) / 2.0;
  const double q = (std::sqrt(17.0) - 3.0) / (std::sqrt(2.0) * n);
  const double w = 2.0 / n;
  std::array<CMatrix, 4> b;
  b[0] = mat4({1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -h, h, 0, 0, -h, -h});
  b[1] = mat4({1, 0, 0, 0, 0, w, 0, -q, 0, 0, 1, 0, 0, q, 0, w});
  b[2] = mat4({w, 0, -q, 0, 0, 1, 0, 0, q, 0, w, 0, 0, 0, 0, 1});
  b[3] = mat4({1, 0, 0, 0, 0, 1, 0, 0, 0, 0, h, h, 0, 0, h, -h});
  return b;
}

CMatrix phase_a() {
  Eigen::Vector4cd d(1, -1, 1, 1);
  return d.asDiagonal();
}

CMatrix phase_b() {
  Eigen::Vector4cd d(1, 1, kI, -kI);
  return d.asDiagonal();
}

}  // namespace gaussbound::reference
