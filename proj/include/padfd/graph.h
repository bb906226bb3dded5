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

#ifndef PADFD_GRAPH_H_
#define PADFD_GRAPH_H_

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "padfd/types.h"

namespace padfd {

// Opaque, non-empty element identifier. The tag keeps node and flow ids
// from being mixed up.
template <typename Tag>
class Id {
 public:
  Id() = default;
  explicit Id(std::string value) : value_(std::move(value)) {}

  const std::string& value() const { return value_; }
  bool empty() const { return value_.empty(); }

  friend auto operator<=>(const Id&, const Id&) = default;
  friend bool operator==(const Id&, const Id&) = default;

 private:
  std::string value_;
};

struct NodeTag {};
struct FlowTag {};
using NodeId = Id<NodeTag>;
using FlowId = Id<FlowTag>;

enum class Stage { kRawBdfd, kWellformedBdfd, kPaDfd };

absl::string_view StageName(Stage stage);
std::optional<Stage> ParseStage(absl::string_view name);

struct Position {
  double x = 0;
  double y = 0;
  friend bool operator==(const Position&, const Position&) = default;
};

struct Size {
  double width = 0;
  double height = 0;
  friend bool operator==(const Size&, const Size&) = default;
};

// Attributes outside the fixed schema, echoed verbatim on output.
using Attributes = std::map<std::string, std::string>;

struct Node {
  NodeId id;
  std::optional<NodeType> type;
  std::optional<std::string> label;
  std::optional<NodeId> partner;
  std::optional<Position> position;
  std::optional<Size> size;
  Attributes attributes;

  friend bool operator==(const Node&, const Node&) = default;
};

struct Flow {
  FlowId id;
  std::optional<FlowType> type;
  std::optional<std::string> label;
  NodeId source;
  NodeId target;
  std::optional<FlowId> partner;
  Attributes attributes;

  friend bool operator==(const Flow&, const Flow&) = default;
};

// Attributed multigraph shared by every diagram stage. Elements are kept
// sorted by id so iteration order (and everything derived from it) is
// deterministic.
//
// Invariants maintained by every mutator:
//   - flow endpoints reference existing nodes;
//   - partnering is a symmetric involution, separately on nodes and flows.
class Diagram {
 public:
  explicit Diagram(Stage stage = Stage::kRawBdfd) : stage_(stage) {}

  Stage stage() const { return stage_; }
  void set_stage(Stage stage) { stage_ = stage; }

  const std::map<NodeId, Node>& nodes() const { return nodes_; }
  const std::map<FlowId, Flow>& flows() const { return flows_; }

  const Node* FindNode(const NodeId& id) const;
  const Flow* FindFlow(const FlowId& id) const;

  // Errors: AlreadyExists on duplicate id, InvalidArgument on an empty id or
  // a preset partner (partners are established with LinkPartners).
  absl::Status AddNode(Node node);
  // Additionally NotFound when an endpoint is absent.
  absl::Status AddFlow(Flow flow);

  // Errors: InvalidArgument when a == b, NotFound for unknown elements,
  // FailedPrecondition when either side is already partnered.
  absl::Status LinkPartners(const NodeId& a, const NodeId& b);
  absl::Status LinkPartners(const FlowId& a, const FlowId& b);

  // Fails when flows are still attached to the node or it is partnered.
  absl::Status RemoveNode(const NodeId& id);
  // Unlinks the flow's partner (if any) before removing it.
  absl::Status RemoveFlow(const FlowId& id);

  absl::Status SetNodeType(const NodeId& id, NodeType type);
  absl::Status SetNodePosition(const NodeId& id, Position position);
  absl::Status SetNodeSize(const NodeId& id, Size size);
  absl::Status SetFlowType(const FlowId& id, FlowType type);
  absl::Status SetFlowSource(const FlowId& id, const NodeId& source);
  absl::Status SetFlowTarget(const FlowId& id, const NodeId& target);

  // Smallest "gen-{k}" not used by any node or flow.
  std::string FreshId();

  bool ContainsId(absl::string_view id) const;

  // S(G) and T(G).
  std::set<NodeId> Sources() const;
  std::set<NodeId> Targets() const;

  std::vector<const Flow*> FlowsFrom(const NodeId& node) const;
  std::vector<const Flow*> FlowsInto(const NodeId& node) const;

  // Re-verifies the structural invariants from scratch.
  absl::Status CheckIntegrity() const;

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.stage_ == b.stage_ && a.nodes_ == b.nodes_ && a.flows_ == b.flows_;
  }

 private:
  Stage stage_;
  std::map<NodeId, Node> nodes_;
  std::map<FlowId, Flow> flows_;
  // Every "gen-{j}" with j < next_generated_ is taken.
  std::size_t next_generated_ = 0;
};

// Value-returning forms of the mutators above.
absl::StatusOr<Diagram> AddNode(Diagram d, Node node);
absl::StatusOr<Diagram> AddFlow(Diagram d, Flow flow);
absl::StatusOr<Diagram> LinkPartners(Diagram d, const NodeId& a,
                                     const NodeId& b);
absl::StatusOr<Diagram> LinkPartners(Diagram d, const FlowId& a,
                                     const FlowId& b);

std::set<NodeId> Sources(const Diagram& d);
std::set<NodeId> Targets(const Diagram& d);

}  // namespace padfd

#endif  // PADFD_GRAPH_H_
