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

#ifndef PADFD_TYPECHECK_H_
#define PADFD_TYPECHECK_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "padfd/graph.h"

namespace padfd {

enum class DiagnosticKind { kIllFormedFlow, kIllFormedActivator };
enum class Severity { kError, kWarning };

// Clause identifiers carried by diagnostics.
inline constexpr char kClausePfNoRule[] = "pf-no-rule";
inline constexpr char kClausePfProcLoop[] = "pf-proc-loop";
inline constexpr char kClauseDfNoRule[] = "df-no-rule";
inline constexpr char kClauseProcIo[] = "proc-io";
inline constexpr char kClauseExtIsolated[] = "ext-isolated";
inline constexpr char kClauseDbIsolated[] = "db-isolated";

struct Diagnostic {
  DiagnosticKind kind = DiagnosticKind::kIllFormedFlow;
  Severity severity = Severity::kError;
  std::string element;
  std::string clause;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

// "LEVEL elementId clause: message", LEVEL being "error" or "warning".
std::string FormatDiagnostic(const Diagnostic& diagnostic);

// Well-formed type of a raw flow from its endpoint types, or nullopt when no
// rule applies (the flow is ill-formed).
std::optional<FlowType> InferFlowType(NodeType source, NodeType target,
                                      FlowType raw, bool is_loop);

// Connectivity rule for one activator given its membership in S(G), T(G).
std::optional<Diagnostic> CheckActivator(const Node& node, bool in_sources,
                                         bool in_targets);

struct TypecheckOptions {
  // Treat the input as an excerpt of a larger diagram: activator
  // connectivity findings become warnings and do not block the result.
  bool excerpt = false;
};

struct TypecheckResult {
  // Present iff no diagnostic has error severity.
  std::optional<Diagram> diagram;
  // Sorted by (element, clause).
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return diagram.has_value(); }
};

// Infers well-formed flow types for a raw B-DFD and reports every
// ill-formed flow and activator. Returns FailedPrecondition if the input is
// not a raw B-DFD.
absl::StatusOr<TypecheckResult> Typecheck(const Diagram& d,
                                          const TypecheckOptions& options = {});

}  // namespace padfd

#endif  // PADFD_TYPECHECK_H_
