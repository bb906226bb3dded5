// Copyright 2026 The PA-DFD Tools Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "padfd/simulate.h"

#include <algorithm>

#include "gtest/gtest.h"
#include "json.hpp"
#include "padfd/transform.h"
#include "testing/generators.h"

namespace padfd {
namespace {

using ::padfd::testing::AddTestFlow;
using ::padfd::testing::AddTestNode;
using std::chrono::day;
using std::chrono::month;
using std::chrono::year;

Date D(int y, unsigned m, unsigned d) { return Date{year(y), month(m), day(d)}; }

// ext -in-> p -store-> s -read-> q -out-> ext, plus p -delete-> s.
Diagram Pipeline() {
  Diagram d(Stage::kWellformedBdfd);
  AddTestNode(d, "e", NodeType::kExt);
  AddTestNode(d, "p", NodeType::kProc);
  AddTestNode(d, "q", NodeType::kProc);
  AddTestNode(d, "s", NodeType::kDb);
  AddTestFlow(d, "in", "e", "p", FlowType::kIn);
  AddTestFlow(d, "save", "p", "s", FlowType::kStore);
  AddTestFlow(d, "del", "p", "s", FlowType::kDelete);
  AddTestFlow(d, "hand", "p", "q", FlowType::kComp);
  AddTestFlow(d, "read", "s", "q", FlowType::kRead);
  AddTestFlow(d, "out", "q", "e", FlowType::kOut);
  auto pa = Transform(d);
  EXPECT_TRUE(pa.ok()) << pa.status();
  return *pa;
}

FlowMeta Meta(const std::string& flow, const std::string& purpose,
              bool pd = true) {
  return FlowMeta{.flow_id = FlowId(flow), .purpose = purpose, .pd = pd};
}

DataRecord Record(const std::string& id, const std::string& flow,
                  std::vector<std::string> consent, Date expiry) {
  return DataRecord{.d_id = id,
                    .flow_id = FlowId(flow),
                    .dsub = "subject",
                    .consent = std::move(consent),
                    .expiry = expiry};
}

TEST(DateTest, ParseAndFormat) {
  auto d = ParseDate("2020-06-01");
  ASSERT_TRUE(d.ok());
  EXPECT_EQ(*d, D(2020, 6, 1));
  EXPECT_EQ(FormatDate(*d), "2020-06-01");
  EXPECT_TRUE(ParseDate("2020-02-29").ok());
  for (const char* bad : {"2021-02-29", "2020-6-01", "2020/06/01", "",
                          "2020-13-01", "20a0-01-01", "2020-06-01x"}) {
    EXPECT_FALSE(ParseDate(bad).ok()) << bad;
  }
}

TEST(PurposeCompatibilityTest, ExactAndDeclared) {
  PurposeCompatibility c;
  EXPECT_TRUE(c.Compatible("Billing", {"other", "billing"}));
  EXPECT_FALSE(c.Compatible("Billing", {"Marketing"}));
  c.Allow("billing", "Invoicing");
  EXPECT_TRUE(c.Compatible("BILLING", {"invoicing"}));
  EXPECT_FALSE(c.Compatible("Invoicing", {"Billing"}));
}

TEST(EvaluateLimitTest, Decisions) {
  Date clock = D(2020, 6, 1);
  auto ok = EvaluateLimit(Meta("f", "A"), Record("d", "f", {"A"}, clock), clock);
  ASSERT_TRUE(ok.ok());
  EXPECT_TRUE(ok->forwarded);
  EXPECT_FALSE(ok->entry.v);
  EXPECT_EQ(ok->entry.policy.purpose, "A");

  auto expired = EvaluateLimit(Meta("f", "A"),
                               Record("d", "f", {"A"}, D(2020, 5, 31)), clock);
  ASSERT_TRUE(expired.ok());
  EXPECT_FALSE(expired->forwarded);
  EXPECT_TRUE(expired->entry.v);

  auto wrong = EvaluateLimit(Meta("f", "A"),
                             Record("d", "f", {"B"}, D(2030, 1, 1)), clock);
  ASSERT_TRUE(wrong.ok());
  EXPECT_FALSE(wrong->forwarded);
  EXPECT_TRUE(wrong->entry.v);

  auto not_personal = EvaluateLimit(
      Meta("f", "", false), Record("d", "f", {"B"}, D(2000, 1, 1)), clock);
  ASSERT_TRUE(not_personal.ok());
  EXPECT_TRUE(not_personal->forwarded);
  EXPECT_FALSE(not_personal->entry.v);

  EXPECT_FALSE(
      EvaluateLimit(Meta("g", "A"), Record("d", "f", {"A"}, clock), clock)
          .ok());
}

TEST(SimulateTest, BaselineForwardsEverything) {
  EXPECT_TRUE(SimulateBdfd(Meta("f", "A"), Record("d", "f", {"B"}, D(2000, 1, 1))));
}

TEST(SimulateTest, StoresAndDeletes) {
  Diagram pa = Pipeline();
  Date clock = D(2021, 1, 1);
  std::vector<FlowMeta> metas = {Meta("save", "keep"), Meta("del", "erase")};
  auto r = RunSimulation(
      pa, metas,
      {Record("d1", "save", {"keep"}, D(2022, 1, 1)),
       Record("d2", "save", {"keep", "erase"}, D(2022, 1, 1)),
       Record("d3", "save", {"other"}, D(2022, 1, 1)),
       Record("d4", "del", {"erase"}, D(2022, 1, 1))},
      clock);
  ASSERT_TRUE(r.ok()) << r.status();
  EXPECT_EQ(r->log.size(), 4u);
  EXPECT_EQ(r->ViolationCount(), 1u);
  EXPECT_EQ(r->store.StoredIds(), (std::set<std::string>{"d1", "d2"}));
  NodeId s("s");
  NodeId pdb = *pa.FindNode(s)->partner;
  EXPECT_EQ(r->store.policy_store_of.at(s), pdb);
  EXPECT_TRUE(r->store.clean_of.contains(s));
  EXPECT_EQ(r->store.policies.at(pdb).at("d1").purpose, "keep");
  for (const LogEntry& e : r->log) EXPECT_TRUE(e.log_db.has_value());

  // A forwarded delete record removes the stored value with the same D_id.
  auto erased = RunSimulation(
      pa, metas,
      {Record("d1", "save", {"keep"}, D(2022, 1, 1)),
       Record("d2", "save", {"keep"}, D(2022, 1, 1)),
       Record("d1", "del", {"erase"}, D(2022, 1, 1)),
       Record("d2", "del", {"keep"}, D(2022, 1, 1))},
      clock);
  ASSERT_TRUE(erased.ok()) << erased.status();
  EXPECT_EQ(erased->store.StoredIds(), (std::set<std::string>{"d2"}));
  EXPECT_FALSE(erased->store.policies.at(pdb).contains("d1"));
  EXPECT_TRUE(erased->store.policies.at(pdb).contains("d2"));
}

TEST(SimulateTest, ErrorCases) {
  Diagram pa = Pipeline();
  Date clock = D(2021, 1, 1);
  Diagram wf(Stage::kWellformedBdfd);
  EXPECT_EQ(RunSimulation(wf, {}, {}, clock).status().code(),
            absl::StatusCode::kFailedPrecondition);
  EXPECT_EQ(RunSimulation(pa, {Meta("nope", "a")}, {}, clock).status().code(),
            absl::StatusCode::kNotFound);
  EXPECT_EQ(RunSimulation(pa, {Meta("in", "a")},
                          {Record("d", "save", {"a"}, clock)}, clock)
                .status()
                .code(),
            absl::StatusCode::kNotFound);
  EXPECT_TRUE(RunSimulation(pa, {Meta("in", "a"), Meta("out", "a")},
                            {Record("d", "in", {"a"}, clock),
                             Record("d", "out", {"a"}, clock)},
                            clock)
                  .ok());
  EXPECT_EQ(RunSimulation(pa, {Meta("in", "a")},
                          {Record("d", "in", {"a"}, clock),
                           Record("d", "in", {"a"}, clock)},
                          clock)
                .status()
                .code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(RunSimulation(pa, {Meta("in", "a"), Meta("in", "b")}, {}, clock)
                .status()
                .code(),
            absl::StatusCode::kInvalidArgument);
  // Flows created by the transformation are not guarded flows.
  const Flow* guarded = pa.FindFlow(FlowId("in"));
  EXPECT_EQ(RunSimulation(pa, {Meta(guarded->partner->value(), "a")}, {}, clock)
                .status()
                .code(),
            absl::StatusCode::kNotFound);
}

TEST(SimulateTest, MultiHopFollowsProcesses) {
  Diagram pa = Pipeline();
  Date clock = D(2021, 1, 1);
  std::vector<FlowMeta> metas = {Meta("in", "collect"), Meta("save", "collect"),
                                 Meta("hand", "other"), Meta("out", "collect")};
  auto single = RunSimulation(pa, metas,
                              {Record("d", "in", {"collect"}, D(2022, 1, 1))},
                              clock);
  ASSERT_TRUE(single.ok());
  EXPECT_EQ(single->evaluations.size(), 1u);

  auto multi = RunSimulation(pa, metas,
                             {Record("d", "in", {"collect"}, D(2022, 1, 1))},
                             clock, {.multi_hop = true});
  ASSERT_TRUE(multi.ok()) << multi.status();
  // in -> p; from p: save, hand (blocked), del (no metadata). q is never
  // reached, so out is not evaluated.
  std::vector<std::string> flows;
  for (const Evaluation& e : multi->evaluations) {
    flows.push_back(e.flow_id.value());
  }
  EXPECT_EQ(flows, (std::vector<std::string>{"in", "hand", "save"}));
  EXPECT_EQ(multi->records.size(), 1u);
  EXPECT_EQ(multi->log.size(), 3u);
  EXPECT_EQ(multi->ViolationCount(), 1u);
  ASSERT_EQ(multi->skipped.size(), 1u);
  EXPECT_EQ(multi->skipped[0].flow_id, FlowId("del"));
  EXPECT_EQ(multi->store.StoredIds(), (std::set<std::string>{"d"}));
}

TEST(RunCleanTest, RemovesExpiredOnly) {
  Diagram pa = Pipeline();
  auto r = RunSimulation(pa, {Meta("save", "k")},
                         {Record("old", "save", {"k"}, D(2021, 3, 1)),
                          Record("edge", "save", {"k"}, D(2021, 6, 1)),
                          Record("new", "save", {"k"}, D(2022, 1, 1))},
                         D(2021, 1, 1));
  ASSERT_TRUE(r.ok());
  CleanResult c = RunClean(r->store, D(2021, 6, 1));
  EXPECT_EQ(c.state.StoredIds(), (std::set<std::string>{"edge", "new"}));
  ASSERT_EQ(c.events.size(), 1u);
  EXPECT_EQ(c.events[0].d_id, "old");
  EXPECT_EQ(c.events[0].db, NodeId("s"));
  EXPECT_EQ(c.events[0].clean, r->store.clean_of.at(NodeId("s")));
  NodeId pdb = r->store.policy_store_of.at(NodeId("s"));
  EXPECT_FALSE(c.state.policies.at(pdb).contains("old"));
  EXPECT_TRUE(c.state.policies.at(pdb).contains("new"));
}

TEST(ReportTest, JsonAndText) {
  Diagram pa = Pipeline();
  auto r = RunSimulation(pa, {Meta("in", "a")},
                         {Record("d1", "in", {"a"}, D(2022, 1, 1)),
                          Record("d2", "in", {"b"}, D(2022, 1, 1))},
                         D(2021, 1, 1));
  ASSERT_TRUE(r.ok());
  auto j = nlohmann::json::parse(ReportJson(*r));
  EXPECT_EQ(j["clock"], "2021-01-01");
  EXPECT_EQ(j["violations"], 1);
  ASSERT_EQ(j["records"].size(), 2u);
  EXPECT_EQ(j["records"][1]["forwarded_pa"], false);
  EXPECT_EQ(j["log"][1]["policy"]["consent"][0], "b");
  EXPECT_EQ(ReportJson(*r), ReportJson(*r));
  std::string text = ReportText(*r);
  EXPECT_NE(text.find("d2       in       Yes        No         violation"),
            std::string::npos)
      << text;
  EXPECT_NE(text.find("2 log entries, 1 violations"), std::string::npos);
}

// Brute-force oracle for a single limit.
bool OracleForward(const FlowMeta& m, const DataRecord& r, const Date& clock) {
  if (!m.pd) return true;
  std::string want = m.purpose;
  std::transform(want.begin(), want.end(), want.begin(), ::tolower);
  bool consented = false;
  for (std::string c : r.consent) {
    std::transform(c.begin(), c.end(), c.begin(), ::tolower);
    consented = consented || c == want;
  }
  return consented && !(r.expiry < clock);
}

TEST(SimulatePropertyTest, LimitMatchesOracle) {
  std::mt19937 rng(31);
  const std::vector<std::string> purposes = {"a", "B", "c", "Ab"};
  std::uniform_int_distribution<int> pick(0, 3);
  for (int i = 0; i < 2000; ++i) {
    FlowMeta m = Meta("f", purposes[pick(rng)], pick(rng) != 0);
    std::vector<std::string> consent;
    for (int k = 0; k <= pick(rng); ++k) consent.push_back(purposes[pick(rng)]);
    DataRecord r = Record("d", "f", consent, testing::RandomDate(rng));
    Date clock = testing::RandomDate(rng);
    auto got = EvaluateLimit(m, r, clock);
    ASSERT_TRUE(got.ok());
    EXPECT_EQ(got->forwarded, OracleForward(m, r, clock));
    EXPECT_EQ(got->entry.v, m.pd && !got->forwarded);
  }
}

}  // namespace
}  // namespace padfd
