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

// End-to-end checks of the reference results, grouped into suites.

#include <filesystem>
#include <string>
#include <vector>

#include "gaussbound/separability.hpp"

namespace gaussbound::tools {

enum class Outcome { Pass, Fail, Inconclusive };

const char* to_string(Outcome o);

struct CheckResult {
  std::string name;
  Outcome outcome = Outcome::Pass;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;
  Outcome outcome() const;
};

struct VerifyConfig {
  std::filesystem::path fixtures_dir;
  ClassifyOptions classify;
  int threads = 0;
};

std::vector<SuiteResult> run_verification(const VerifyConfig& config);

/// 0 if everything passed, 1 on any failure, 2 if only inconclusive checks remain.
int exit_code(const std::vector<SuiteResult>& suites);

std::string report_text(const std::vector<SuiteResult>& suites);
std::string report_json(const std::vector<SuiteResult>& suites);

}  // namespace gaussbound::tools
