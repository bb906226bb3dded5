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

#ifndef PADFD_VALIDATE_H_
#define PADFD_VALIDATE_H_

#include <string>
#include <vector>

#include "padfd/graph.h"

namespace padfd {

// One failed clause of a stage definition.
struct Violation {
  std::string clause;
  std::string element;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

// Every violated clause for a stage, sorted by (element, clause). An empty
// list means the diagram satisfies the stage definition.
struct StageValidity {
  Stage stage = Stage::kRawBdfd;
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
};

// Raw B-DFD: every element typed, nodes in {ext, proc, db}, flows in
// {pf, df}.
StageValidity ValidateRaw(const Diagram& d);

struct WellformedOptions {
  // The connectivity clauses on activators (proc has in and out flows, ext
  // and db are not isolated). Disabled only to work on diagram excerpts.
  bool activator_clauses = true;
};

// Well-formed B-DFD: node types in {ext, proc, db}, well-formed flow types
// with their endpoint clauses, no comp loops, plus activator connectivity.
StageValidity ValidateWellformed(const Diagram& d,
                                 const WellformedOptions& options = {});

// PA-DFD: node types from the data/policy/admin families, one of the 18 PA
// flow types per flow, partners that exist and are mutual, and the endpoint
// table returned by PaFlowEndpoints().
StageValidity ValidatePa(const Diagram& d);

}  // namespace padfd

#endif  // PADFD_VALIDATE_H_
