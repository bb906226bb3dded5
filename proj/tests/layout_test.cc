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

#include "padfd/layout.h"

#include <cmath>

#include "gtest/gtest.h"
#include "padfd/transform.h"
#include "testing/generators.h"

namespace padfd {
namespace {

using ::padfd::testing::AddTestFlow;
using ::padfd::testing::AddTestNode;

Position At(const Diagram& d, const std::string& id) {
  return *d.FindNode(NodeId(id))->position;
}

NodeId LimitOf(const Diagram& d, const std::string& flow) {
  return d.FindFlow(FlowId(flow))->source;
}

TEST(LayoutTest, LimitAtMidpointRequestOnNormal) {
  Diagram wf(Stage::kWellformedBdfd);
  AddTestNode(wf, "e", NodeType::kExt);
  AddTestNode(wf, "p", NodeType::kProc);
  AddTestFlow(wf, "f", "e", "p", FlowType::kIn);
  ASSERT_TRUE(wf.SetNodePosition(NodeId("e"), {0, 0}).ok());
  ASSERT_TRUE(wf.SetNodePosition(NodeId("p"), {200, 0}).ok());
  auto pa = Transform(wf, {.excerpt = true});
  ASSERT_TRUE(pa.ok()) << pa.status();
  Diagram d = LayoutGenerated(*pa);

  NodeId limit = LimitOf(d, "f");
  const Node* l = d.FindNode(limit);
  EXPECT_EQ(*l->position, (Position{100, 0}));
  EXPECT_EQ(*d.FindNode(*l->partner)->position, (Position{100, -80}));
  for (const Flow* f : d.FlowsFrom(limit)) {
    if (f->type != FlowType::kLimlog) continue;
    EXPECT_EQ(*d.FindNode(f->target)->position, (Position{100, 80}));
    for (const Flow* g : d.FlowsFrom(f->target)) {
      EXPECT_EQ(*d.FindNode(g->target)->position, (Position{100, 160}));
    }
  }
  NodeId reason = *d.FindNode(NodeId("p"))->partner;
  EXPECT_EQ(*d.FindNode(reason)->position, (Position{280, 0}));
}

TEST(LayoutTest, PolicyStoreAndCleanBesideDb) {
  Diagram wf(Stage::kWellformedBdfd);
  AddTestNode(wf, "p", NodeType::kProc);
  AddTestNode(wf, "s", NodeType::kDb);
  AddTestNode(wf, "e", NodeType::kExt);
  AddTestFlow(wf, "f1", "e", "p", FlowType::kIn);
  AddTestFlow(wf, "f2", "p", "s", FlowType::kStore);
  AddTestFlow(wf, "f3", "p", "e", FlowType::kOut);
  ASSERT_TRUE(wf.SetNodePosition(NodeId("s"), {0, 400}).ok());
  auto pa = Transform(wf);
  ASSERT_TRUE(pa.ok());
  Diagram d = LayoutGenerated(*pa);
  const Node* s = d.FindNode(NodeId("s"));
  EXPECT_EQ(*d.FindNode(*s->partner)->position, (Position{80, 400}));
  for (const Flow* f : d.FlowsInto(NodeId("s"))) {
    if (f->type == FlowType::kCledbDel) {
      EXPECT_EQ(*d.FindNode(f->source)->position, (Position{160, 400}));
    }
  }
}

TEST(LayoutTest, KeepsExistingPositionsAndFillsAll) {
  std::mt19937 rng(4);
  for (int i = 0; i < 50; ++i) {
    auto g = testing::RandomWellformedBdfd(rng, 10);
    Diagram wf = testing::Decorate(g.wellformed, rng);
    auto pa = Transform(wf);
    ASSERT_TRUE(pa.ok());
    Diagram d = LayoutGenerated(*pa);
    for (const auto& [id, n] : pa->nodes()) {
      const Node* m = d.FindNode(id);
      ASSERT_TRUE(m->position.has_value());
      ASSERT_TRUE(m->size.has_value());
      if (n.position) EXPECT_EQ(*m->position, *n.position);
      if (n.size) EXPECT_EQ(*m->size, *n.size);
    }
    EXPECT_EQ(LayoutGenerated(d), d);
  }
}

TEST(LayoutTest, CollisionsAreNudged) {
  Diagram wf(Stage::kWellformedBdfd);
  AddTestNode(wf, "e", NodeType::kExt);
  AddTestNode(wf, "p", NodeType::kProc);
  AddTestNode(wf, "blocker", NodeType::kExt);
  AddTestFlow(wf, "f", "e", "p", FlowType::kIn);
  AddTestFlow(wf, "g", "blocker", "p", FlowType::kIn);
  ASSERT_TRUE(wf.SetNodePosition(NodeId("e"), {0, 0}).ok());
  ASSERT_TRUE(wf.SetNodePosition(NodeId("p"), {200, 0}).ok());
  ASSERT_TRUE(wf.SetNodePosition(NodeId("blocker"), {100, 0}).ok());
  auto pa = Transform(wf, {.excerpt = true});
  ASSERT_TRUE(pa.ok()) << pa.status();
  Diagram d = LayoutGenerated(*pa);
  EXPECT_EQ(*d.FindNode(LimitOf(d, "f"))->position, (Position{100, 80}));
  std::vector<Position> seen;
  for (const auto& [id, n] : d.nodes()) {
    for (const Position& p : seen) {
      EXPECT_FALSE(std::abs(p.x - n.position->x) < 40 &&
                   std::abs(p.y - n.position->y) < 40)
          << id.value();
    }
    seen.push_back(*n.position);
  }
}

TEST(LayoutTest, DefaultSizes) {
  EXPECT_EQ(DefaultSize(NodeType::kProc), (Size{120, 80}));
  EXPECT_EQ(DefaultSize(NodeType::kLimit), (Size{80, 50}));
}

}  // namespace
}  // namespace padfd
