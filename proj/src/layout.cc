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
#include <vector>

namespace padfd {

Size DefaultSize(NodeType type) {
  switch (type) {
    case NodeType::kExt: return {120, 60};
    case NodeType::kProc: return {120, 80};
    case NodeType::kDb:
    case NodeType::kPolicyDb:
    case NodeType::kLogDb: return {120, 40};
    default: return {80, 50};
  }
}

namespace {

class Placer {
 public:
  explicit Placer(Diagram& d) : d_(d) {
    for (const auto& [id, n] : d_.nodes()) {
      if (n.position) taken_.push_back(*n.position);
    }
  }

  std::optional<Position> At(const NodeId& id) const {
    const Node* n = d_.FindNode(id);
    return n == nullptr ? std::nullopt : n->position;
  }

  // Places `id` at `want` (nudged off occupied spots) unless already placed.
  Position Place(const NodeId& id, Position want) {
    if (auto p = At(id)) return *p;
    while (Taken(want)) want.y += kGridStep;
    (void)d_.SetNodePosition(id, want);
    taken_.push_back(want);
    return want;
  }

 private:
  bool Taken(const Position& p) const {
    for (const Position& q : taken_) {
      if (std::abs(q.x - p.x) < kGridStep / 2 &&
          std::abs(q.y - p.y) < kGridStep / 2) {
        return true;
      }
    }
    return false;
  }

  Diagram& d_;
  std::vector<Position> taken_;
};

bool IsGuardedType(FlowType t) {
  return t == FlowType::kLimpro || t == FlowType::kLimext ||
         t == FlowType::kLimdb || t == FlowType::kLimdbDel;
}

bool IsLimitInput(FlowType t) {
  return t == FlowType::kProlim || t == FlowType::kExtlim ||
         t == FlowType::kDblim;
}

const Flow* FirstOfType(const std::vector<const Flow*>& flows,
                        bool (*pred)(FlowType)) {
  for (const Flow* f : flows) {
    if (f->type && pred(*f->type)) return f;
  }
  return nullptr;
}

}  // namespace

Diagram LayoutGenerated(Diagram d) {
  Placer placer(d);

  // Original activators without coordinates go on the top row.
  double column = 0;
  for (const auto& [id, n] : d.nodes()) {
    if (!n.position && n.type && IsBdfdNodeType(*n.type)) {
      placer.Place(id, {column, 0});
      column += 2 * kGridStep;
    }
  }

  for (const auto& [id, n] : d.nodes()) {
    if (n.type == NodeType::kReason || n.type == NodeType::kPolicyDb) {
      if (n.partner) {
        if (auto p = placer.At(*n.partner)) {
          placer.Place(id, {p->x + kGridStep, p->y});
        }
      }
    } else if (n.type == NodeType::kClean) {
      for (const Flow* f : d.FlowsFrom(id)) {
        if (f->type != FlowType::kCledbDel) continue;
        if (auto p = placer.At(f->target)) {
          placer.Place(id, {p->x + 2 * kGridStep, p->y});
          break;
        }
      }
    }
  }

  for (const auto& [id, n] : d.nodes()) {
    if (n.type != NodeType::kLimit) continue;
    std::optional<Position> limit = placer.At(id);
    if (!limit) {
      const Flow* out = FirstOfType(d.FlowsFrom(id), IsGuardedType);
      const Flow* in = FirstOfType(d.FlowsInto(id), IsLimitInput);
      if (out == nullptr || in == nullptr) continue;
      auto a = placer.At(in->source);
      auto b = placer.At(out->target);
      if (!a || !b) continue;
      limit = placer.Place(id, {(a->x + b->x) / 2, (a->y + b->y) / 2});
      double dx = b->x - a->x;
      double dy = b->y - a->y;
      double len = std::hypot(dx, dy);
      Position normal = len > 0 ? Position{dy / len, -dx / len}
                                : Position{0, -1};
      if (n.partner) {
        placer.Place(*n.partner, {limit->x + normal.x * kGridStep,
                                  limit->y + normal.y * kGridStep});
      }
    } else if (n.partner) {
      placer.Place(*n.partner, {limit->x, limit->y - kGridStep});
    }
    for (const Flow* f : d.FlowsFrom(id)) {
      if (f->type != FlowType::kLimlog) continue;
      Position log = placer.Place(f->target, {limit->x, limit->y + kGridStep});
      for (const Flow* g : d.FlowsFrom(f->target)) {
        if (g->type == FlowType::kLogging) {
          placer.Place(g->target, {log.x, log.y + kGridStep});
        }
      }
    }
  }

  // Leftovers (e.g. generated nodes whose anchors were missing).
  column = 0;
  std::vector<NodeId> rest;
  for (const auto& [id, n] : d.nodes()) {
    if (!n.position) rest.push_back(id);
  }
  for (const NodeId& id : rest) {
    placer.Place(id, {column, 4 * kGridStep});
    column += kGridStep;
  }

  std::vector<std::pair<NodeId, NodeType>> unsized;
  for (const auto& [id, n] : d.nodes()) {
    if (!n.size) unsized.emplace_back(id, n.type.value_or(NodeType::kExt));
  }
  for (const auto& [id, type] : unsized) {
    (void)d.SetNodeSize(id, DefaultSize(type));
  }
  return d;
}

}  // namespace padfd
