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

#include "padfd/validate.h"

#include <algorithm>

#include "gtest/gtest.h"
#include "padfd/transform.h"
#include "testing/generators.h"

namespace padfd {
namespace {

using ::padfd::testing::AddTestFlow;
using ::padfd::testing::AddTestNode;

bool HasClause(const StageValidity& v, const std::string& clause,
               const std::string& element) {
  return std::any_of(v.violations.begin(), v.violations.end(),
                     [&](const Violation& x) {
                       return x.clause == clause && x.element == element;
                     });
}

TEST(ValidateRawTest, EmptyDiagramIsValid) {
  EXPECT_TRUE(ValidateRaw(Diagram()).valid());
}

TEST(ValidateRawTest, RejectsPaNodeTypes) {
  Diagram d;
  AddTestNode(d, "l", NodeType::kLimit);
  StageValidity v = ValidateRaw(d);
  EXPECT_FALSE(v.valid());
  EXPECT_TRUE(HasClause(v, "node-type", "l"));
}

TEST(ValidateRawTest, RejectsUntypedAndWellformedFlows) {
  Diagram d;
  AddTestNode(d, "a", NodeType::kExt);
  ASSERT_TRUE(d.AddNode(Node{.id = NodeId("b")}).ok());
  AddTestFlow(d, "f1", "a", "b", FlowType::kIn);
  ASSERT_TRUE(d.AddFlow(Flow{.id = FlowId("f2"),
                             .source = NodeId("a"),
                             .target = NodeId("b")})
                  .ok());
  StageValidity v = ValidateRaw(d);
  EXPECT_TRUE(HasClause(v, "node-untyped", "b"));
  EXPECT_TRUE(HasClause(v, "flow-type", "f1"));
  EXPECT_TRUE(HasClause(v, "flow-untyped", "f2"));
  EXPECT_EQ(v.violations.size(), 3u);
}

Diagram SmallWellformed() {
  Diagram d(Stage::kWellformedBdfd);
  AddTestNode(d, "e", NodeType::kExt);
  AddTestNode(d, "p", NodeType::kProc);
  AddTestNode(d, "s", NodeType::kDb);
  AddTestFlow(d, "f1", "e", "p", FlowType::kIn);
  AddTestFlow(d, "f2", "p", "s", FlowType::kStore);
  AddTestFlow(d, "f3", "s", "p", FlowType::kRead);
  AddTestFlow(d, "f4", "p", "e", FlowType::kOut);
  return d;
}

TEST(ValidateWellformedTest, AcceptsSmallDiagram) {
  EXPECT_TRUE(ValidateWellformed(SmallWellformed()).valid());
}

TEST(ValidateWellformedTest, ReportsEndpointMismatch) {
  Diagram d = SmallWellformed();
  ASSERT_TRUE(d.SetFlowType(FlowId("f2"), FlowType::kRead).ok());
  StageValidity v = ValidateWellformed(d);
  EXPECT_TRUE(HasClause(v, "read-endpoints", "f2"));
}

TEST(ValidateWellformedTest, ReportsCompLoop) {
  Diagram d = SmallWellformed();
  AddTestFlow(d, "loop", "p", "p", FlowType::kComp);
  EXPECT_TRUE(HasClause(ValidateWellformed(d), "comp-loop", "loop"));
}

TEST(ValidateWellformedTest, ProcessNeedsInAndOut) {
  Diagram d(Stage::kWellformedBdfd);
  AddTestNode(d, "e", NodeType::kExt);
  AddTestNode(d, "p", NodeType::kProc);
  AddTestFlow(d, "f1", "e", "p", FlowType::kIn);
  StageValidity v = ValidateWellformed(d);
  EXPECT_TRUE(HasClause(v, "proc-io", "p"));
  EXPECT_EQ(v.violations.size(), 1u);
  EXPECT_TRUE(ValidateWellformed(d, {.activator_clauses = false}).valid());
}

TEST(ValidateWellformedTest, IsolatedStoreAndExt) {
  Diagram d = SmallWellformed();
  AddTestNode(d, "lone_db", NodeType::kDb);
  AddTestNode(d, "lone_ext", NodeType::kExt);
  StageValidity v = ValidateWellformed(d);
  EXPECT_TRUE(HasClause(v, "db-isolated", "lone_db"));
  EXPECT_TRUE(HasClause(v, "ext-isolated", "lone_ext"));
  EXPECT_EQ(v.violations.size(), 2u);
}

TEST(ValidateWellformedTest, RejectsRawFlowTypes) {
  Diagram d = SmallWellformed();
  ASSERT_TRUE(d.SetFlowType(FlowId("f1"), FlowType::kPf).ok());
  EXPECT_TRUE(HasClause(ValidateWellformed(d), "flow-type", "f1"));
}

TEST(ValidatePaTest, TransformOutputIsValid) {
  auto pa = Transform(SmallWellformed());
  ASSERT_TRUE(pa.ok()) << pa.status();
  StageValidity v = ValidatePa(*pa);
  EXPECT_TRUE(v.valid()) << v.violations.front().message;
}

TEST(ValidatePaTest, RejectsPlainFlow) {
  auto pa = Transform(SmallWellformed());
  ASSERT_TRUE(pa.ok());
  ASSERT_TRUE(pa->SetFlowType(FlowId("f1"), FlowType::kPf).ok());
  EXPECT_TRUE(HasClause(ValidatePa(*pa), "flow-type", "f1"));
}

TEST(ValidatePaTest, ReqlimFromLogIsInvalid) {
  Diagram d(Stage::kPaDfd);
  AddTestNode(d, "log", NodeType::kLog);
  AddTestNode(d, "lim", NodeType::kLimit);
  AddTestFlow(d, "f", "log", "lim", FlowType::kReqlim);
  StageValidity v = ValidatePa(d);
  EXPECT_TRUE(HasClause(v, "reqlim-endpoints", "f"));
}

TEST(ValidatePaTest, RejectsBdfdOnlyTypes) {
  Diagram d(Stage::kPaDfd);
  AddTestNode(d, "x", NodeType::kExt);
  EXPECT_TRUE(ValidatePa(d).valid());
  Diagram e(Stage::kPaDfd);
  ASSERT_TRUE(e.AddNode(Node{.id = NodeId("u")}).ok());
  EXPECT_TRUE(HasClause(ValidatePa(e), "node-untyped", "u"));
}

TEST(ValidatePaTest, ViolationsAreSorted) {
  Diagram d(Stage::kPaDfd);
  AddTestNode(d, "b", NodeType::kLog);
  AddTestNode(d, "a", NodeType::kLog);
  AddTestFlow(d, "z", "a", "b", FlowType::kIn);
  AddTestFlow(d, "c", "a", "b", FlowType::kReqlim);
  StageValidity v = ValidatePa(d);
  ASSERT_EQ(v.violations.size(), 2u);
  EXPECT_EQ(v.violations[0].element, "c");
  EXPECT_EQ(v.violations[1].element, "z");
}

TEST(ValidatePropertyTest, GeneratedWellformedDiagramsAreValid) {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    auto g = testing::RandomWellformedBdfd(rng);
    EXPECT_TRUE(ValidateRaw(g.raw).valid());
    StageValidity v = ValidateWellformed(g.wellformed);
    ASSERT_TRUE(v.valid()) << v.violations.front().clause << " "
                           << v.violations.front().element;
  }
}

}  // namespace
}  // namespace padfd
