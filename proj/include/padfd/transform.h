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

#ifndef PADFD_TRANSFORM_H_
#define PADFD_TRANSFORM_H_

#include <optional>
#include <utility>

#include "absl/status/statusor.h"
#include "padfd/graph.h"
#include "padfd/validate.h"

namespace padfd {

// The privacy gadget built around one original flow.
struct GadgetAllocation {
  FlowId guarded;  // the original flow, retyped and re-sourced at the limit
  NodeId limit;
  NodeId request;
  NodeId log;
  NodeId log_db;
  FlowId reqlim;
  FlowId limlog;
  FlowId logging;
  // Set by the per-kind rewrites. data_in feeds the limit from the original
  // source; policy_in feeds the request; policy_out carries the policy on
  // towards the original target (or its partner).
  std::optional<FlowId> data_in;
  std::optional<FlowId> policy_in;
  std::optional<FlowId> policy_out;
};

struct TransformOptions {
  // Accept diagram excerpts whose activators fail the connectivity clauses.
  // Flow typing clauses are always enforced.
  bool excerpt = false;
  // Merge every log_db into one shared log store after the rewrite.
  bool shared_log_store = false;
};

// Phase 1: a reason partner per process; a policy_db partner plus a clean
// node (policy_db -pdbcle-> clean -cledb_del-> db) per data store.
absl::StatusOr<Diagram> AddPartners(const Diagram& d,
                                    const WellformedOptions& options = {});

// Adds limit, request, log and log_db for flow `f`, partners limit with
// request and wires reqlim, limlog and logging.
absl::StatusOr<std::pair<Diagram, GadgetAllocation>> AddCommonElems(
    Diagram d, const FlowId& f);

// Per-kind rewrites. Each expects `f` to carry the matching well-formed
// type and the phase-1 partners to exist; each adds 4 nodes and 6 flows.
absl::StatusOr<Diagram> TransformInFlow(Diagram d, const FlowId& f);
absl::StatusOr<Diagram> TransformOutFlow(Diagram d, const FlowId& f);
absl::StatusOr<Diagram> TransformCompFlow(Diagram d, const FlowId& f);
absl::StatusOr<Diagram> TransformStoreFlow(Diagram d, const FlowId& f);
absl::StatusOr<Diagram> TransformReadFlow(Diagram d, const FlowId& f);
absl::StatusOr<Diagram> TransformDeleteFlow(Diagram d, const FlowId& f);

// Dispatches on the flow's type and reports the allocation.
absl::StatusOr<std::pair<Diagram, GadgetAllocation>> TransformFlow(
    Diagram d, const FlowId& f);

// Full B-DFD -> PA-DFD rewrite. For input with P processes, D stores and F
// flows the result has |N| + P + 2D + 4F nodes and 7F + 2D flows (before
// any log store merge).
absl::StatusOr<Diagram> Transform(const Diagram& d,
                                  const TransformOptions& options = {});

// Redirects every logging flow to the log_db with the smallest id and drops
// the rest.
absl::StatusOr<Diagram> MergeLogStores(Diagram d);

}  // namespace padfd

#endif  // PADFD_TRANSFORM_H_
