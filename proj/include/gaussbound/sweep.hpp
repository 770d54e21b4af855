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

// Entanglement map of the preparation circuit over the thermal scale
// kappa = 2 nbar + 1 and the squeezing tau = e^{-r}, with boundary search
// and large-kappa extrapolation of the bound/free transition.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gaussbound/circuit.hpp"
#include "gaussbound/separability.hpp"

namespace gaussbound {

/// Parses "start:stop:count" into count evenly spaced points (count >= 1;
/// count == 1 requires start == stop). Throws InvalidAxis.
std::vector<double> parse_axis(std::string_view spec);

/// Throws InvalidAxis unless strictly increasing, finite and above `min_value`
/// (or equal to it when `inclusive`).
void validate_axis(const std::vector<double>& axis, double min_value, bool inclusive,
                   std::string_view name);

/// Thread count used when a caller passes 0.
int default_threads();

struct SweepOptions {
  ClassifyOptions classify;
  Fig1Options circuit;
  int threads = 0;  ///< 0: hardware concurrency
};

struct SweepCell {
  std::optional<EntanglementClass> cls;  ///< empty when inconclusive
  double ppt_margin = 0.0;
  std::optional<double> slack;
  std::string note;  ///< reason for an inconclusive cell
};

struct SweepGrid {
  std::vector<double> kappa;
  std::vector<double> tau;
  std::vector<SweepCell> cells;  ///< row-major, |kappa| x |tau|

  const SweepCell& at(std::size_t i, std::size_t j) const { return cells[i * tau.size() + j]; }
  int inconclusive_count() const;
};

/// Classification of one circuit output against the split {0,1} | {2,3}.
/// Inconclusive outcomes are recorded, not thrown.
SweepCell evaluate_cell(double kappa, double tau, const SweepOptions& options = {});

/// Evaluates every cell concurrently; results land in fixed slots so the grid
/// does not depend on scheduling. Throws InvalidAxis.
SweepGrid scan(const std::vector<double>& kappa_axis, const std::vector<double>& tau_axis,
               const SweepOptions& options = {});

/// Throws Inconclusive when more than `max_fraction` of the cells are
/// inconclusive.
void require_conclusive(const SweepGrid& grid, double max_fraction = 1e-3);

struct MonotoneViolation {
  std::size_t kappa_index = 0;
  std::size_t tau_index = 0;
};

/// Cells where the order Separable -> BoundEntangled -> FreeEntangled breaks
/// while moving away from tau = 1 along a row.
std::vector<MonotoneViolation> monotone_violations(const SweepGrid& grid);

enum class BoundaryKind { SepToBound, BoundToFree };

struct BoundaryOptions {
  double tol = 1e-4;
  double tau_min = 1.0;
  double tau_max = 3.0;
  int coarse_steps = 40;
  ClassifyOptions classify;
  Fig1Options circuit;
};

struct Bracket {
  double tau_lo = 0.0;  ///< still on the lower-class side
  double tau_hi = 0.0;
  int evaluations = 0;
};

/// Coarse scan on [tau_min, tau_max], then bisection on the PPT margin
/// (BoundToFree) or on the separability slack (SepToBound). The lower end of
/// a BoundToFree bracket must be bound entangled and the lower end of a
/// SepToBound bracket separable. Throws NoBracket.
Bracket find_boundary(double kappa, BoundaryKind kind, const BoundaryOptions& options = {});

struct BoundaryCurve {
  std::vector<double> kappa;
  std::vector<double> tau_lower;
  std::vector<double> tau_upper;
  std::vector<bool> converged;
};

/// find_boundary for every kappa; unbracketed rows are marked unconverged.
BoundaryCurve boundary_curve(const std::vector<double>& kappa_axis, BoundaryKind kind,
                             const BoundaryOptions& options = {}, int threads = 0);

struct AsymptoteEstimate {
  double value = 0.0;
  double error = 0.0;
  std::vector<double> kappa;     ///< ladder, ascending
  std::vector<double> tau_star;  ///< bracket midpoints
};

/// BoundToFree transitions on the ladder kappa_max / 2^j (j = 0..rungs-1),
/// extrapolated in 1/kappa from the last two rungs. The error is the change
/// of the extrapolation between the last two rung pairs. Throws InvalidKappa
/// (kappa_max < 41) and NotConverged when that error exceeds `tol`.
AsymptoteEstimate estimate_asymptote(double kappa_max = 1281.0, double tol = 0.005, int rungs = 5,
                                     const BoundaryOptions& options = {});

}  // namespace gaussbound
