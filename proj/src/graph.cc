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

#include "padfd/graph.h"

#include "absl/strings/str_cat.h"

namespace padfd {

absl::string_view StageName(Stage stage) {
  switch (stage) {
    case Stage::kRawBdfd: return "raw-bdfd";
    case Stage::kWellformedBdfd: return "wellformed-bdfd";
    case Stage::kPaDfd: return "pa-dfd";
  }
  return "?";
}

std::optional<Stage> ParseStage(absl::string_view name) {
  for (Stage s : {Stage::kRawBdfd, Stage::kWellformedBdfd, Stage::kPaDfd}) {
    if (StageName(s) == name) return s;
  }
  return std::nullopt;
}

const Node* Diagram::FindNode(const NodeId& id) const {
  auto it = nodes_.find(id);
  return it == nodes_.end() ? nullptr : &it->second;
}

const Flow* Diagram::FindFlow(const FlowId& id) const {
  auto it = flows_.find(id);
  return it == flows_.end() ? nullptr : &it->second;
}

absl::Status Diagram::AddNode(Node node) {
  if (node.id.empty()) return absl::InvalidArgumentError("empty node id");
  if (node.partner) {
    return absl::InvalidArgumentError(
        absl::StrCat("node ", node.id.value(),
                     " carries a partner; use LinkPartners"));
  }
  if (nodes_.contains(node.id)) {
    return absl::AlreadyExistsError(
        absl::StrCat("duplicate node id ", node.id.value()));
  }
  NodeId id = node.id;
  nodes_.emplace(std::move(id), std::move(node));
  return absl::OkStatus();
}

absl::Status Diagram::AddFlow(Flow flow) {
  if (flow.id.empty()) return absl::InvalidArgumentError("empty flow id");
  if (flow.partner) {
    return absl::InvalidArgumentError(
        absl::StrCat("flow ", flow.id.value(),
                     " carries a partner; use LinkPartners"));
  }
  if (flows_.contains(flow.id)) {
    return absl::AlreadyExistsError(
        absl::StrCat("duplicate flow id ", flow.id.value()));
  }
  for (const NodeId* end : {&flow.source, &flow.target}) {
    if (!nodes_.contains(*end)) {
      return absl::NotFoundError(absl::StrCat("flow ", flow.id.value(),
                                              " references unknown node ",
                                              end->value()));
    }
  }
  FlowId id = flow.id;
  flows_.emplace(std::move(id), std::move(flow));
  return absl::OkStatus();
}

namespace {

template <typename Key, typename Element>
absl::Status LinkIn(std::map<Key, Element>& elements, const Key& a,
                    const Key& b, absl::string_view kind) {
  if (a == b) {
    return absl::InvalidArgumentError(
        absl::StrCat("cannot partner ", kind, " ", a.value(), " with itself"));
  }
  auto ia = elements.find(a);
  auto ib = elements.find(b);
  if (ia == elements.end() || ib == elements.end()) {
    return absl::NotFoundError(absl::StrCat(
        "unknown ", kind, " ", (ia == elements.end() ? a : b).value()));
  }
  for (const auto* e : {&ia->second, &ib->second}) {
    if (e->partner) {
      return absl::FailedPreconditionError(
          absl::StrCat(kind, " ", e->id.value(), " is already partnered with ",
                       e->partner->value()));
    }
  }
  ia->second.partner = b;
  ib->second.partner = a;
  return absl::OkStatus();
}

}  // namespace

absl::Status Diagram::LinkPartners(const NodeId& a, const NodeId& b) {
  return LinkIn(nodes_, a, b, "node");
}

absl::Status Diagram::LinkPartners(const FlowId& a, const FlowId& b) {
  return LinkIn(flows_, a, b, "flow");
}

absl::Status Diagram::RemoveNode(const NodeId& id) {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) {
    return absl::NotFoundError(absl::StrCat("unknown node ", id.value()));
  }
  if (it->second.partner) {
    return absl::FailedPreconditionError(
        absl::StrCat("node ", id.value(), " is partnered"));
  }
  for (const auto& [fid, f] : flows_) {
    if (f.source == id || f.target == id) {
      return absl::FailedPreconditionError(absl::StrCat(
          "node ", id.value(), " still has attached flow ", fid.value()));
    }
  }
  nodes_.erase(it);
  return absl::OkStatus();
}

absl::Status Diagram::RemoveFlow(const FlowId& id) {
  auto it = flows_.find(id);
  if (it == flows_.end()) {
    return absl::NotFoundError(absl::StrCat("unknown flow ", id.value()));
  }
  if (it->second.partner) flows_.at(*it->second.partner).partner.reset();
  flows_.erase(it);
  return absl::OkStatus();
}

absl::Status Diagram::SetNodeType(const NodeId& id, NodeType type) {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) {
    return absl::NotFoundError(absl::StrCat("unknown node ", id.value()));
  }
  it->second.type = type;
  return absl::OkStatus();
}

absl::Status Diagram::SetNodePosition(const NodeId& id, Position position) {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) {
    return absl::NotFoundError(absl::StrCat("unknown node ", id.value()));
  }
  it->second.position = position;
  return absl::OkStatus();
}

absl::Status Diagram::SetNodeSize(const NodeId& id, Size size) {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) {
    return absl::NotFoundError(absl::StrCat("unknown node ", id.value()));
  }
  it->second.size = size;
  return absl::OkStatus();
}

absl::Status Diagram::SetFlowType(const FlowId& id, FlowType type) {
  auto it = flows_.find(id);
  if (it == flows_.end()) {
    return absl::NotFoundError(absl::StrCat("unknown flow ", id.value()));
  }
  it->second.type = type;
  return absl::OkStatus();
}

absl::Status Diagram::SetFlowSource(const FlowId& id, const NodeId& source) {
  auto it = flows_.find(id);
  if (it == flows_.end()) {
    return absl::NotFoundError(absl::StrCat("unknown flow ", id.value()));
  }
  if (!nodes_.contains(source)) {
    return absl::NotFoundError(absl::StrCat("unknown node ", source.value()));
  }
  it->second.source = source;
  return absl::OkStatus();
}

absl::Status Diagram::SetFlowTarget(const FlowId& id, const NodeId& target) {
  auto it = flows_.find(id);
  if (it == flows_.end()) {
    return absl::NotFoundError(absl::StrCat("unknown flow ", id.value()));
  }
  if (!nodes_.contains(target)) {
    return absl::NotFoundError(absl::StrCat("unknown node ", target.value()));
  }
  it->second.target = target;
  return absl::OkStatus();
}

bool Diagram::ContainsId(absl::string_view id) const {
  std::string key(id);
  return nodes_.contains(NodeId(key)) || flows_.contains(FlowId(key));
}

std::string Diagram::FreshId() {
  for (;; ++next_generated_) {
    std::string candidate = absl::StrCat("gen-", next_generated_);
    if (!ContainsId(candidate)) {
      ++next_generated_;
      return candidate;
    }
  }
}

std::set<NodeId> Diagram::Sources() const {
  std::set<NodeId> out;
  for (const auto& [id, f] : flows_) out.insert(f.source);
  return out;
}

std::set<NodeId> Diagram::Targets() const {
  std::set<NodeId> out;
  for (const auto& [id, f] : flows_) out.insert(f.target);
  return out;
}

std::vector<const Flow*> Diagram::FlowsFrom(const NodeId& node) const {
  std::vector<const Flow*> out;
  for (const auto& [id, f] : flows_) {
    if (f.source == node) out.push_back(&f);
  }
  return out;
}

std::vector<const Flow*> Diagram::FlowsInto(const NodeId& node) const {
  std::vector<const Flow*> out;
  for (const auto& [id, f] : flows_) {
    if (f.target == node) out.push_back(&f);
  }
  return out;
}

absl::Status Diagram::CheckIntegrity() const {
  for (const auto& [id, f] : flows_) {
    if (!nodes_.contains(f.source) || !nodes_.contains(f.target)) {
      return absl::InternalError(
          absl::StrCat("flow ", id.value(), " has a dangling endpoint"));
    }
    if (f.partner) {
      const Flow* p = FindFlow(*f.partner);
      if (p == nullptr || p->partner != id || *f.partner == id) {
        return absl::InternalError(
            absl::StrCat("flow ", id.value(), " has an asymmetric partner"));
      }
    }
  }
  for (const auto& [id, n] : nodes_) {
    if (n.partner) {
      const Node* p = FindNode(*n.partner);
      if (p == nullptr || p->partner != id || *n.partner == id) {
        return absl::InternalError(
            absl::StrCat("node ", id.value(), " has an asymmetric partner"));
      }
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<Diagram> AddNode(Diagram d, Node node) {
  if (absl::Status s = d.AddNode(std::move(node)); !s.ok()) return s;
  return d;
}

absl::StatusOr<Diagram> AddFlow(Diagram d, Flow flow) {
  if (absl::Status s = d.AddFlow(std::move(flow)); !s.ok()) return s;
  return d;
}

absl::StatusOr<Diagram> LinkPartners(Diagram d, const NodeId& a,
                                     const NodeId& b) {
  if (absl::Status s = d.LinkPartners(a, b); !s.ok()) return s;
  return d;
}

absl::StatusOr<Diagram> LinkPartners(Diagram d, const FlowId& a,
                                     const FlowId& b) {
  if (absl::Status s = d.LinkPartners(a, b); !s.ok()) return s;
  return d;
}

std::set<NodeId> Sources(const Diagram& d) { return d.Sources(); }
std::set<NodeId> Targets(const Diagram& d) { return d.Targets(); }

}  // namespace padfd
