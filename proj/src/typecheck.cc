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

#include <algorithm>
#include <tuple>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "padfd/validate.h"

namespace padfd {

std::string FormatDiagnostic(const Diagnostic& diagnostic) {
  return absl::StrCat(
      diagnostic.severity == Severity::kError ? "error" : "warning", " ",
      diagnostic.element, " ", diagnostic.clause, ": ", diagnostic.message);
}

std::optional<FlowType> InferFlowType(NodeType source, NodeType target,
                                      FlowType raw, bool is_loop) {
  using N = NodeType;
  if (raw == FlowType::kPf) {
    if (source == N::kExt && target == N::kProc) return FlowType::kIn;
    if (source == N::kProc && target == N::kExt) return FlowType::kOut;
    if (source == N::kProc && target == N::kProc && !is_loop) {
      return FlowType::kComp;
    }
    if (source == N::kProc && target == N::kDb) return FlowType::kStore;
    if (source == N::kDb && target == N::kProc) return FlowType::kRead;
    return std::nullopt;
  }
  if (raw == FlowType::kDf && source == N::kProc && target == N::kDb) {
    return FlowType::kDelete;
  }
  return std::nullopt;
}

std::optional<Diagnostic> CheckActivator(const Node& node, bool in_sources,
                                         bool in_targets) {
  Diagnostic d;
  d.kind = DiagnosticKind::kIllFormedActivator;
  d.element = node.id.value();
  if (node.type == NodeType::kProc) {
    if (in_sources && in_targets) return std::nullopt;
    d.clause = kClauseProcIo;
    if (!in_sources && !in_targets) {
      d.message = "process has neither incoming nor outgoing flows";
    } else if (!in_sources) {
      d.message = "process has no outgoing flow";
    } else {
      d.message = "process has no incoming flow";
    }
    return d;
  }
  if (in_sources || in_targets) return std::nullopt;
  if (node.type == NodeType::kExt) {
    d.clause = kClauseExtIsolated;
    d.message = "external entity is not connected to any flow";
    return d;
  }
  if (node.type == NodeType::kDb) {
    d.clause = kClauseDbIsolated;
    d.message = "data store is not connected to any flow";
    return d;
  }
  return std::nullopt;
}

namespace {

Diagnostic FlowDiagnostic(const Flow& f, NodeType source, NodeType target) {
  Diagnostic d;
  d.kind = DiagnosticKind::kIllFormedFlow;
  d.element = f.id.value();
  std::string shape = absl::StrCat(NodeTypeName(source), " -> ",
                                   NodeTypeName(target));
  if (*f.type == FlowType::kDf) {
    d.clause = kClauseDfNoRule;
    d.message = absl::StrCat("data deletion must run proc -> db, found ",
                             shape);
  } else if (source == NodeType::kProc && target == NodeType::kProc) {
    d.clause = kClausePfProcLoop;
    d.message = "flow loops on a single process";
  } else {
    d.clause = kClausePfNoRule;
    d.message = absl::StrCat("no flow rule accepts a plain flow ", shape,
                             f.source == f.target ? " (loop)" : "");
  }
  return d;
}

}  // namespace

absl::StatusOr<TypecheckResult> Typecheck(const Diagram& d,
                                          const TypecheckOptions& options) {
  StageValidity raw = ValidateRaw(d);
  if (!raw.valid()) {
    std::vector<std::string> parts;
    for (const Violation& v : raw.violations) {
      parts.push_back(absl::StrCat(v.element, " ", v.clause));
    }
    return absl::FailedPreconditionError(absl::StrCat(
        "input is not a raw B-DFD: ", absl::StrJoin(parts, ", ")));
  }

  TypecheckResult result;
  Diagram out = d;
  for (const auto& [id, f] : d.flows()) {
    NodeType src = *d.FindNode(f.source)->type;
    NodeType tgt = *d.FindNode(f.target)->type;
    std::optional<FlowType> inferred =
        InferFlowType(src, tgt, *f.type, f.source == f.target);
    if (inferred) {
      (void)out.SetFlowType(id, *inferred);
    } else {
      result.diagnostics.push_back(FlowDiagnostic(f, src, tgt));
    }
  }

  std::set<NodeId> sources = d.Sources();
  std::set<NodeId> targets = d.Targets();
  for (const auto& [id, n] : d.nodes()) {
    std::optional<Diagnostic> diag =
        CheckActivator(n, sources.contains(id), targets.contains(id));
    if (!diag) continue;
    if (options.excerpt) diag->severity = Severity::kWarning;
    result.diagnostics.push_back(*std::move(diag));
  }

  std::sort(result.diagnostics.begin(), result.diagnostics.end(),
            [](const Diagnostic& a, const Diagnostic& b) {
              return std::tie(a.element, a.clause) <
                     std::tie(b.element, b.clause);
            });
  bool blocked = std::any_of(
      result.diagnostics.begin(), result.diagnostics.end(),
      [](const Diagnostic& x) { return x.severity == Severity::kError; });
  if (!blocked) {
    out.set_stage(Stage::kWellformedBdfd);
    result.diagram = std::move(out);
  }
  return result;
}

}  // namespace padfd
