// Copyright 2026 The tmes Authors
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

// Verification suite: every checked construction and capacity statement as
// a named claim with a verdict.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace tmes {

enum class Verdict { kPass, kFail, kRecorded };

std::string to_string(Verdict v);

struct ClaimReport {
  std::string claim_id;
  std::string anchor;  // what the claim is about, in one line
  Verdict verdict = Verdict::kFail;
  std::string details;
  nlohmann::json payload = nlohmann::json::object();
};

struct SuiteConfig {
  /// Threshold for fidelities, orthogonality and probabilities. Algebraic
  /// identities are always checked at 1e-12.
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  /// Claim ids to run; empty runs all.
  std::vector<std::string> claims;
  int payload_trials = 20;
  int invariance_trials = 50;
};

/// Every claim id, sorted.
std::vector<std::string> claim_ids();

/// Runs the selected claims and returns them sorted by id. Throws `Error`
/// for an unknown id. A claim that throws is reported as a failure.
std::vector<ClaimReport> run_claim_suite(const SuiteConfig& config);

/// No claim failed.
bool suite_passed(const std::vector<ClaimReport>& reports);

std::string render_table(const std::vector<ClaimReport>& reports);

nlohmann::json report_document(const std::vector<ClaimReport>& reports,
                               const SuiteConfig& config, const std::string& timestamp);

}  // namespace tmes
