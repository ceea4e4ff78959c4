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

#include <gtest/gtest.h>

#include <set>

#include "tmes/claims.hpp"
#include "tmes/statevec.hpp"

namespace tmes {
namespace {

const std::set<std::string> kRecorded = {"eq11-chi", "eq15-w2", "sigma-independence-d2",
                                         "sigma-independence-d3"};

TEST(ClaimSuite, DefaultConfigPasses) {
  const auto reports = run_claim_suite(SuiteConfig{});
  EXPECT_TRUE(suite_passed(reports)) << render_table(reports);
  EXPECT_EQ(reports.size(), claim_ids().size());
  std::set<std::string> seen;
  for (const auto& r : reports) {
    EXPECT_TRUE(seen.insert(r.claim_id).second) << r.claim_id;
    const Verdict want = kRecorded.count(r.claim_id) ? Verdict::kRecorded : Verdict::kPass;
    EXPECT_EQ(r.verdict, want) << r.claim_id << ": " << r.details;
    EXPECT_FALSE(r.anchor.empty());
  }
  EXPECT_TRUE(std::is_sorted(reports.begin(), reports.end(),
                             [](const auto& a, const auto& b) { return a.claim_id < b.claim_id; }));
}

TEST(ClaimSuite, LooseToleranceStillPasses) {
  SuiteConfig c;
  c.tolerance = 1e-2;
  EXPECT_TRUE(suite_passed(run_claim_suite(c)));
}

TEST(ClaimSuite, W2ClaimRecordsObstruction) {
  SuiteConfig c;
  c.claims = {"eq15-w2"};
  const auto reports = run_claim_suite(c);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_EQ(reports[0].verdict, Verdict::kRecorded);
  EXPECT_TRUE(reports[0].payload["exact_placement"].is_null());
  EXPECT_EQ(reports[0].payload["obstructions"].size(), 3u);
  for (const auto& [pair, cuts] : reports[0].payload["obstructions"].items()) {
    EXPECT_FALSE(cuts.empty()) << pair;
  }
}

TEST(ClaimSuite, ChiClaimVerifiesProducedState) {
  SuiteConfig c;
  c.claims = {"eq11-chi"};
  const auto r = run_claim_suite(c).at(0);
  EXPECT_EQ(r.verdict, Verdict::kRecorded);
  EXPECT_TRUE(r.payload["output_is_tmes"].get<bool>());
}

TEST(ClaimSuite, UnknownIdIsRejected) {
  SuiteConfig c;
  c.claims = {"no-such-claim"};
  EXPECT_THROW(run_claim_suite(c), Error);
}

TEST(ClaimSuite, DuplicateSelectionRunsOnce) {
  SuiteConfig c;
  c.claims = {"identity-cluster", "identity-cluster"};
  EXPECT_EQ(run_claim_suite(c).size(), 1u);
}

TEST(ClaimSuite, ReportsAreStableApartFromTimestamp) {
  SuiteConfig c;
  c.seed = 17;
  c.claims = {"teleport-oracle", "sender-invariance", "identity-five-qubit", "family-five-qubit"};
  auto a = report_document(run_claim_suite(c), c, "t0");
  auto b = report_document(run_claim_suite(c), c, "t1");
  EXPECT_NE(a.dump(), b.dump());
  a.erase("generated_at");
  b.erase("generated_at");
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(ClaimSuite, TableListsEveryClaim) {
  SuiteConfig c;
  c.claims = {"identity-cluster", "identity-ghz3"};
  const std::string table = render_table(run_claim_suite(c));
  EXPECT_NE(table.find("identity-cluster"), std::string::npos);
  EXPECT_NE(table.find("identity-ghz3"), std::string::npos);
  EXPECT_NE(table.find("2 pass, 0 fail, 0 recorded"), std::string::npos);
}

TEST(ClaimSuite, SuitePassedTreatsRecordedAsNonFailure) {
  std::vector<ClaimReport> r(2);
  r[0].verdict = Verdict::kRecorded;
  r[1].verdict = Verdict::kPass;
  EXPECT_TRUE(suite_passed(r));
  r[1].verdict = Verdict::kFail;
  EXPECT_FALSE(suite_passed(r));
}

}  // namespace
}  // namespace tmes
