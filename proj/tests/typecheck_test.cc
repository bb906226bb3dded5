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

#include "padfd/typecheck.h"

#include <set>
#include <tuple>

#include "gtest/gtest.h"
#include "padfd/validate.h"
#include "testing/generators.h"

namespace padfd {
namespace {

using ::padfd::testing::AddTestFlow;
using ::padfd::testing::AddTestNode;

// Independent table of the inference rules, indexed by
// (source, target, raw type, loop).
std::optional<FlowType> OracleType(NodeType s, NodeType t, FlowType raw,
                                   bool loop) {
  using N = NodeType;
  using F = FlowType;
  static const std::map<std::tuple<N, N, F>, F> kRules = {
      {{N::kExt, N::kProc, F::kPf}, F::kIn},
      {{N::kProc, N::kExt, F::kPf}, F::kOut},
      {{N::kProc, N::kProc, F::kPf}, F::kComp},
      {{N::kProc, N::kDb, F::kPf}, F::kStore},
      {{N::kDb, N::kProc, F::kPf}, F::kRead},
      {{N::kProc, N::kDb, F::kDf}, F::kDelete},
  };
  auto it = kRules.find({s, t, raw});
  if (it == kRules.end()) return std::nullopt;
  if (it->second == F::kComp && loop) return std::nullopt;
  return it->second;
}

// Expected (element, clause) pairs for a raw diagram.
std::set<std::pair<std::string, std::string>> OracleDiagnostics(
    const Diagram& d) {
  std::set<std::pair<std::string, std::string>> out;
  std::set<NodeId> sources, targets;
  for (const auto& [id, f] : d.flows()) {
    sources.insert(f.source);
    targets.insert(f.target);
    NodeType s = *d.FindNode(f.source)->type;
    NodeType t = *d.FindNode(f.target)->type;
    bool loop = f.source == f.target;
    if (OracleType(s, t, *f.type, loop)) continue;
    std::string clause = *f.type == FlowType::kDf ? "df-no-rule"
                         : (loop && s == NodeType::kProc && t == s)
                             ? "pf-proc-loop"
                             : "pf-no-rule";
    out.insert({id.value(), clause});
  }
  for (const auto& [id, n] : d.nodes()) {
    bool src = sources.contains(id);
    bool tgt = targets.contains(id);
    if (n.type == NodeType::kProc && !(src && tgt)) {
      out.insert({id.value(), "proc-io"});
    } else if (n.type == NodeType::kExt && !src && !tgt) {
      out.insert({id.value(), "ext-isolated"});
    } else if (n.type == NodeType::kDb && !src && !tgt) {
      out.insert({id.value(), "db-isolated"});
    }
  }
  return out;
}

TEST(InferFlowTypeTest, RuleTable) {
  EXPECT_EQ(InferFlowType(NodeType::kExt, NodeType::kProc, FlowType::kPf,
                          false),
            FlowType::kIn);
  EXPECT_EQ(InferFlowType(NodeType::kProc, NodeType::kProc, FlowType::kPf,
                          true),
            std::nullopt);
  EXPECT_EQ(InferFlowType(NodeType::kProc, NodeType::kDb, FlowType::kDf,
                          false),
            FlowType::kDelete);
  EXPECT_EQ(InferFlowType(NodeType::kExt, NodeType::kExt, FlowType::kPf,
                          false),
            std::nullopt);
}

TEST(InferFlowTypeTest, MatchesOracleExhaustively) {
  constexpr NodeType kTypes[] = {NodeType::kExt, NodeType::kProc,
                                 NodeType::kDb};
  for (NodeType s : kTypes) {
    for (NodeType t : kTypes) {
      for (FlowType raw : {FlowType::kPf, FlowType::kDf}) {
        for (bool loop : {false, true}) {
          if (loop && s != t) continue;
          EXPECT_EQ(InferFlowType(s, t, raw, loop),
                    OracleType(s, t, raw, loop))
              << NodeTypeName(s) << "->" << NodeTypeName(t) << " "
              << FlowTypeName(raw) << " loop=" << loop;
        }
      }
    }
  }
}

TEST(CheckActivatorTest, Rules) {
  Node proc{.id = NodeId("p"), .type = NodeType::kProc};
  Node ext{.id = NodeId("e"), .type = NodeType::kExt};
  Node db{.id = NodeId("s"), .type = NodeType::kDb};
  EXPECT_FALSE(CheckActivator(proc, true, true).has_value());
  auto d = CheckActivator(proc, true, false);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->kind, DiagnosticKind::kIllFormedActivator);
  EXPECT_EQ(d->clause, kClauseProcIo);
  EXPECT_EQ(CheckActivator(ext, false, false)->clause, kClauseExtIsolated);
  EXPECT_FALSE(CheckActivator(ext, false, true).has_value());
  EXPECT_EQ(CheckActivator(db, false, false)->clause, kClauseDbIsolated);
  EXPECT_FALSE(CheckActivator(db, true, false).has_value());
}

TEST(TypecheckTest, RejectsNonRawInput) {
  Diagram d;
  AddTestNode(d, "l", NodeType::kLimit);
  EXPECT_EQ(Typecheck(d).status().code(),
            absl::StatusCode::kFailedPrecondition);
}

TEST(TypecheckTest, DbToDbIsOneDiagnostic) {
  Diagram d;
  AddTestNode(d, "a", NodeType::kDb);
  AddTestNode(d, "b", NodeType::kDb);
  AddTestFlow(d, "f", "a", "b", FlowType::kPf);
  auto r = Typecheck(d);
  ASSERT_TRUE(r.ok());
  ASSERT_EQ(r->diagnostics.size(), 1u);
  EXPECT_EQ(r->diagnostics[0].kind, DiagnosticKind::kIllFormedFlow);
  EXPECT_EQ(r->diagnostics[0].element, "f");
  EXPECT_FALSE(r->ok());
}

TEST(TypecheckTest, TwoIndependentErrors) {
  Diagram d;
  AddTestNode(d, "a", NodeType::kExt);
  AddTestNode(d, "b", NodeType::kExt);
  AddTestNode(d, "s", NodeType::kDb);
  AddTestFlow(d, "f", "a", "b", FlowType::kPf);
  auto r = Typecheck(d);
  ASSERT_TRUE(r.ok());
  ASSERT_EQ(r->diagnostics.size(), 2u);
  EXPECT_EQ(r->diagnostics[0].element, "f");
  EXPECT_EQ(r->diagnostics[1].element, "s");
  EXPECT_EQ(r->diagnostics[1].clause, kClauseDbIsolated);
}

TEST(TypecheckTest, ExcerptDowngradesActivatorDiagnostics) {
  Diagram d;
  AddTestNode(d, "e", NodeType::kExt);
  AddTestNode(d, "p", NodeType::kProc);
  AddTestFlow(d, "f", "e", "p", FlowType::kPf);
  auto strict = Typecheck(d);
  ASSERT_TRUE(strict.ok());
  EXPECT_FALSE(strict->ok());
  auto excerpt = Typecheck(d, {.excerpt = true});
  ASSERT_TRUE(excerpt.ok());
  ASSERT_TRUE(excerpt->ok());
  ASSERT_EQ(excerpt->diagnostics.size(), 1u);
  EXPECT_EQ(excerpt->diagnostics[0].severity, Severity::kWarning);
  EXPECT_EQ(excerpt->diagram->FindFlow(FlowId("f"))->type, FlowType::kIn);
}

TEST(TypecheckTest, FormatDiagnosticLine) {
  Diagnostic d{.kind = DiagnosticKind::kIllFormedFlow,
               .severity = Severity::kError,
               .element = "f1",
               .clause = "pf-no-rule",
               .message = "no rule"};
  EXPECT_EQ(FormatDiagnostic(d), "error f1 pf-no-rule: no rule");
}

// Random raw diagrams: diagnostics equal the oracle, success implies a
// valid well-formed result with unchanged topology.
TEST(TypecheckPropertyTest, MatchesOracleOnRandomDiagrams) {
  std::mt19937 rng(3);
  int successes = 0;
  for (int i = 0; i < 2000; ++i) {
    Diagram raw = testing::RandomRawBdfd(rng);
    auto r = Typecheck(raw);
    ASSERT_TRUE(r.ok());
    std::set<std::pair<std::string, std::string>> got;
    for (const Diagnostic& d : r->diagnostics) {
      got.insert({d.element, d.clause});
      EXPECT_EQ(d.severity, Severity::kError);
    }
    ASSERT_EQ(got, OracleDiagnostics(raw)) << "case " << i;
    ASSERT_EQ(got.size(), r->diagnostics.size());
    EXPECT_TRUE(std::is_sorted(
        r->diagnostics.begin(), r->diagnostics.end(),
        [](const Diagnostic& a, const Diagnostic& b) {
          return std::tie(a.element, a.clause) < std::tie(b.element, b.clause);
        }));
    EXPECT_EQ(r->ok(), got.empty());
    if (!r->ok()) continue;
    ++successes;
    const Diagram& wf = *r->diagram;
    EXPECT_EQ(wf.stage(), Stage::kWellformedBdfd);
    EXPECT_TRUE(ValidateWellformed(wf).valid());
    ASSERT_EQ(wf.nodes(), raw.nodes());
    ASSERT_EQ(wf.flows().size(), raw.flows().size());
    for (const auto& [id, f] : raw.flows()) {
      const Flow* g = wf.FindFlow(id);
      ASSERT_NE(g, nullptr);
      EXPECT_EQ(g->source, f.source);
      EXPECT_EQ(g->target, f.target);
      EXPECT_EQ(g->type, OracleType(*raw.FindNode(f.source)->type,
                                    *raw.FindNode(f.target)->type, *f.type,
                                    f.source == f.target));
    }
  }
  EXPECT_GT(successes, 0);
}

TEST(TypecheckPropertyTest, GeneratedBdfdsTypeAsIntended) {
  std::mt19937 rng(5);
  for (int i = 0; i < 500; ++i) {
    auto g = testing::RandomWellformedBdfd(rng);
    auto r = Typecheck(g.raw);
    ASSERT_TRUE(r.ok());
    ASSERT_TRUE(r->ok()) << FormatDiagnostic(r->diagnostics.front());
    EXPECT_EQ(*r->diagram, g.wellformed);
  }
}

TEST(TypecheckPropertyTest, Deterministic) {
  std::mt19937 rng(9);
  for (int i = 0; i < 100; ++i) {
    Diagram raw = testing::RandomRawBdfd(rng);
    auto a = Typecheck(raw);
    auto b = Typecheck(raw);
    ASSERT_TRUE(a.ok() && b.ok());
    EXPECT_EQ(a->diagnostics, b->diagnostics);
  }
}

}  // namespace
}  // namespace padfd
