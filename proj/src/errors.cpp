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

#include "gaussbound/errors.hpp"

namespace gaussbound {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSymmetric: return "NonSymmetric";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::OrderingMismatch: return "OrderingMismatch";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::NegativeOccupation: return "NegativeOccupation";
    case ErrorCode::NotSymplectic: return "NotSymplectic";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::PatternMismatch: return "PatternMismatch";
    case ErrorCode::SingularGamma: return "SingularGamma";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
    case ErrorCode::MaxIter: return "MaxIter";
    case ErrorCode::Inconclusive: return "Inconclusive";
    case ErrorCode::FixtureMismatch: return "FixtureMismatch";
    case ErrorCode::NotPassive: return "NotPassive";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::SqueezerInUnitaryComposition: return "SqueezerInUnitaryComposition";
    case ErrorCode::InvalidCircuit: return "InvalidCircuit";
    case ErrorCode::InvalidKappa: return "InvalidKappa";
    case ErrorCode::InvalidTau: return "InvalidTau";
    case ErrorCode::InvalidAxis: return "InvalidAxis";
    case ErrorCode::NoBracket: return "NoBracket";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::Format: return "Format";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace gaussbound
