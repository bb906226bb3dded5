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
#include <tuple>

#include "absl/strings/str_cat.h"

namespace padfd {
namespace {

class Collector {
 public:
  explicit Collector(Stage stage) { result_.stage = stage; }

  void Add(std::string clause, const std::string& element,
           std::string message) {
    result_.violations.push_back(
        Violation{std::move(clause), element, std::move(message)});
  }

  StageValidity Finish() && {
    std::sort(result_.violations.begin(), result_.violations.end(),
              [](const Violation& a, const Violation& b) {
                return std::tie(a.element, a.clause, a.message) <
                       std::tie(b.element, b.clause, b.message);
              });
    return std::move(result_);
  }

 private:
  StageValidity result_;
};

std::string TypeOf(const Node* n) {
  if (n == nullptr) return "<missing>";
  return n->type ? std::string(NodeTypeName(*n->type)) : "<untyped>";
}

bool HasType(const Node* n, NodeType t) {
  return n != nullptr && n->type == t;
}

}  // namespace

StageValidity ValidateRaw(const Diagram& d) {
  Collector out(Stage::kRawBdfd);
  for (const auto& [id, n] : d.nodes()) {
    if (!n.type) {
      out.Add("node-untyped", id.value(), "activator has no type");
    } else if (!IsBdfdNodeType(*n.type)) {
      out.Add("node-type", id.value(),
              absl::StrCat("activator type ", NodeTypeName(*n.type),
                           " is not allowed in a B-DFD"));
    }
  }
  for (const auto& [id, f] : d.flows()) {
    if (!f.type) {
      out.Add("flow-untyped", id.value(), "flow has no type");
    } else if (!IsRawFlowType(*f.type)) {
      out.Add("flow-type", id.value(),
              absl::StrCat("flow type ", FlowTypeName(*f.type),
                           " is not a raw flow type (pf, df)"));
    }
  }
  return std::move(out).Finish();
}

StageValidity ValidateWellformed(const Diagram& d,
                                 const WellformedOptions& options) {
  Collector out(Stage::kWellformedBdfd);
  for (const auto& [id, n] : d.nodes()) {
    if (!n.type || !IsBdfdNodeType(*n.type)) {
      out.Add("node-type", id.value(),
              absl::StrCat("activator type ", TypeOf(&n),
                           " is not one of ext, proc, db"));
    }
  }
  for (const auto& [id, f] : d.flows()) {
    if (!f.type || !IsWellformedFlowType(*f.type)) {
      out.Add("flow-type", id.value(),
              absl::StrCat("flow type ",
                           f.type ? FlowTypeName(*f.type) : "<untyped>",
                           " is not a well-formed flow type"));
      continue;
    }
    const Node* src = d.FindNode(f.source);
    const Node* tgt = d.FindNode(f.target);
    NodeType want_src = NodeType::kProc;
    NodeType want_tgt = NodeType::kProc;
    switch (*f.type) {
      case FlowType::kIn: want_src = NodeType::kExt; break;
      case FlowType::kOut: want_tgt = NodeType::kExt; break;
      case FlowType::kComp: break;
      case FlowType::kStore:
      case FlowType::kDelete: want_tgt = NodeType::kDb; break;
      case FlowType::kRead: want_src = NodeType::kDb; break;
      default: break;
    }
    std::string name(FlowTypeName(*f.type));
    if (!HasType(src, want_src) || !HasType(tgt, want_tgt)) {
      out.Add(absl::StrCat(name, "-endpoints"), id.value(),
              absl::StrCat(name, " flow must run ", NodeTypeName(want_src),
                           " -> ", NodeTypeName(want_tgt), ", found ",
                           TypeOf(src), " -> ", TypeOf(tgt)));
    }
    if (*f.type == FlowType::kComp && f.source == f.target) {
      out.Add("comp-loop", id.value(),
              "comp flow must connect two distinct processes");
    }
  }
  if (options.activator_clauses) {
    std::set<NodeId> sources = d.Sources();
    std::set<NodeId> targets = d.Targets();
    for (const auto& [id, n] : d.nodes()) {
      bool is_src = sources.contains(id);
      bool is_tgt = targets.contains(id);
      if (n.type == NodeType::kProc && !(is_src && is_tgt)) {
        out.Add("proc-io", id.value(),
                "processes must have at least one incoming and one outgoing "
                "flow");
      } else if ((n.type == NodeType::kExt || n.type == NodeType::kDb) &&
                 !is_src && !is_tgt) {
        out.Add(absl::StrCat(NodeTypeName(*n.type), "-isolated"), id.value(),
                "activator is not connected to any flow");
      }
    }
  }
  return std::move(out).Finish();
}

StageValidity ValidatePa(const Diagram& d) {
  Collector out(Stage::kPaDfd);
  for (const auto& [id, n] : d.nodes()) {
    if (!n.type) {
      out.Add("node-untyped", id.value(), "activator has no type");
    } else if (!IsDataNodeType(*n.type) && !IsPolicyNodeType(*n.type) &&
               !IsAdminNodeType(*n.type)) {
      out.Add("node-type", id.value(), "activator type outside PA families");
    }
    if (n.partner) {
      const Node* p = d.FindNode(*n.partner);
      if (p == nullptr) {
        out.Add("partner-missing", id.value(),
                absl::StrCat("partner ", n.partner->value(), " does not exist"));
      } else if (p->partner != id) {
        out.Add("partner-asymmetric", id.value(),
                absl::StrCat("partner ", n.partner->value(),
                             " does not point back"));
      }
    }
  }
  for (const auto& [id, f] : d.flows()) {
    if (!f.type || !IsPaFlowType(*f.type)) {
      out.Add("flow-type", id.value(),
              absl::StrCat("flow type ",
                           f.type ? FlowTypeName(*f.type) : "<untyped>",
                           " is not one of the PA flow types"));
    } else {
      Endpoints want = *PaFlowEndpoints(*f.type);
      const Node* src = d.FindNode(f.source);
      const Node* tgt = d.FindNode(f.target);
      if (!HasType(src, want.source) || !HasType(tgt, want.target)) {
        std::string name(FlowTypeName(*f.type));
        out.Add(absl::StrCat(name, "-endpoints"), id.value(),
                absl::StrCat(name, " flow must run ", NodeTypeName(want.source),
                             " -> ", NodeTypeName(want.target), ", found ",
                             TypeOf(src), " -> ", TypeOf(tgt)));
      }
    }
    if (f.partner) {
      const Flow* p = d.FindFlow(*f.partner);
      if (p == nullptr) {
        out.Add("partner-missing", id.value(),
                absl::StrCat("partner ", f.partner->value(), " does not exist"));
      } else if (p->partner != id) {
        out.Add("partner-asymmetric", id.value(),
                absl::StrCat("partner ", f.partner->value(),
                             " does not point back"));
      }
    }
  }
  return std::move(out).Finish();
}

}  // namespace padfd
