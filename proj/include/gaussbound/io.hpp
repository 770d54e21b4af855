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

// File formats shared by the command line tool and the fixtures.
//
//   Matrix   {"format_version": 1, "n_modes": n, "ordering": "interleaved"|"grouped",
//             "data": [[...], ...]}
//   Params   {"format_version": 1, "beta": [b1, b2], "alpha": [a1, ..., a8]}
//   Circuit  {"format_version": 1, "n_modes": n, "elements": [
//               {"kind": "bs", "modes": [j, k], "theta": t, "phi": p},
//               {"kind": "phase", "modes": [j], "phi": p},
//               {"kind": "squeezer", "modes": [j], "r": r}]}
//   Verdict  {"format_version": 1, "class": ..., "ppt_margin": ..., "slack": ...|null,
//             "iterations": ...}
//
// Mode numbers in files are one-based. "format_version" may be omitted on
// input. Reals are written with 15 significant digits (parameters with full
// round-trip precision) and fields in a fixed
// order, so output is byte-identical for identical input. Malformed input
// throws Error(Format).

#include <filesystem>
#include <string>
#include <string_view>

#include "gaussbound/bound_family.hpp"
#include "gaussbound/circuit.hpp"
#include "gaussbound/separability.hpp"
#include "gaussbound/sweep.hpp"

namespace gaussbound::io {

/// Rounds to 15 significant digits.
double round15(double v);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

Matrix matrix_from_json(std::string_view text, Ordering* ordering = nullptr);
std::string matrix_to_json(const Matrix& m, Ordering ordering = Ordering::Interleaved);

CovarianceMatrix covariance_from_json(std::string_view text);
std::string covariance_to_json(const CovarianceMatrix& gamma);

BoundFamilyParams params_from_json(std::string_view text);
std::string params_to_json(const BoundFamilyParams& params);

OpticalCircuit circuit_from_json(std::string_view text);
std::string circuit_to_json(const OpticalCircuit& circuit);

std::string verdict_to_json(const EntanglementVerdict& verdict);

/// Columns kappa, tau, class, ppt_margin, slack. Inconclusive cells have
/// class "inconclusive"; missing slacks are empty.
std::string grid_to_csv(const SweepGrid& grid);

/// Columns kappa, kind, tau_lower, tau_upper, converged.
std::string boundaries_to_csv(const BoundaryCurve& sep_to_bound, const BoundaryCurve& bound_to_free);

}  // namespace gaussbound::io
