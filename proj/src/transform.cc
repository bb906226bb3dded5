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

#include "padfd/transform.h"

#include <string>
#include <vector>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace padfd {
namespace {

#define PADFD_RETURN_IF_ERROR(expr)          \
  do {                                       \
    if (absl::Status _s = (expr); !_s.ok()) { \
      return _s;                             \
    }                                        \
  } while (0)

NodeId NewNode(Diagram& d, NodeType type, std::string label) {
  Node n;
  n.id = NodeId(d.FreshId());
  n.type = type;
  n.label = std::move(label);
  NodeId id = n.id;
  (void)d.AddNode(std::move(n));
  return id;
}

absl::StatusOr<FlowId> NewFlow(Diagram& d, FlowType type,
                               std::optional<std::string> label,
                               const NodeId& source, const NodeId& target) {
  Flow f;
  f.id = FlowId(d.FreshId());
  f.type = type;
  f.label = std::move(label);
  f.source = source;
  f.target = target;
  FlowId id = f.id;
  PADFD_RETURN_IF_ERROR(d.AddFlow(std::move(f)));
  return id;
}

absl::Status CheckPreconditions(const Diagram& d,
                                const WellformedOptions& options) {
  if (d.stage() == Stage::kPaDfd) {
    return absl::FailedPreconditionError("diagram is already a PA-DFD");
  }
  StageValidity v = ValidateWellformed(d, options);
  if (v.valid()) return absl::OkStatus();
  std::vector<std::string> parts;
  for (const Violation& x : v.violations) {
    parts.push_back(absl::StrCat(x.element, " ", x.clause));
  }
  return absl::FailedPreconditionError(absl::StrCat(
      "input is not a well-formed B-DFD: ", absl::StrJoin(parts, ", ")));
}

void AddPartnersInPlace(Diagram& d) {
  std::vector<std::pair<NodeId, NodeType>> targets;
  for (const auto& [id, n] : d.nodes()) {
    if (n.type == NodeType::kProc || n.type == NodeType::kDb) {
      targets.emplace_back(id, *n.type);
    }
  }
  for (const auto& [id, type] : targets) {
    if (type == NodeType::kProc) {
      NodeId reason = NewNode(d, NodeType::kReason, "Reason");
      (void)d.LinkPartners(id, reason);
      continue;
    }
    NodeId pdb = NewNode(d, NodeType::kPolicyDb, "Policy store");
    (void)d.LinkPartners(id, pdb);
    NodeId clean = NewNode(d, NodeType::kClean, "Clean");
    (void)NewFlow(d, FlowType::kPdbcle, "expired pol", pdb, clean);
    (void)NewFlow(d, FlowType::kCledbDel, "delete", clean, id);
  }
}

absl::StatusOr<GadgetAllocation> AddCommonInPlace(Diagram& d,
                                                  const FlowId& f) {
  if (d.FindFlow(f) == nullptr) {
    return absl::NotFoundError(absl::StrCat("unknown flow ", f.value()));
  }
  GadgetAllocation g;
  g.guarded = f;
  g.limit = NewNode(d, NodeType::kLimit, "Limit");
  g.request = NewNode(d, NodeType::kRequest, "Request");
  PADFD_RETURN_IF_ERROR(d.LinkPartners(g.limit, g.request));
  g.log = NewNode(d, NodeType::kLog, "Log");
  g.log_db = NewNode(d, NodeType::kLogDb, "Log store");
  auto reqlim = NewFlow(d, FlowType::kReqlim, "pol", g.request, g.limit);
  auto limlog = NewFlow(d, FlowType::kLimlog, "d, pol, v", g.limit, g.log);
  auto logging = NewFlow(d, FlowType::kLogging, "log", g.log, g.log_db);
  if (!reqlim.ok()) return reqlim.status();
  if (!limlog.ok()) return limlog.status();
  if (!logging.ok()) return logging.status();
  g.reqlim = *reqlim;
  g.limlog = *limlog;
  g.logging = *logging;
  return g;
}

// Where a gadget flow attaches relative to the original flow.
enum class Anchor { kSource, kSourcePartner, kTarget, kTargetPartner };

// Wiring of one flow kind. Every kind follows the same skeleton:
//   data_in:    anchor -> limit
//   policy_in:  anchor -> request      (partnered with data_in)
//   policy_out: request -> anchor      (partnered with the original flow)
//   original:   limit -> target, retyped
struct KindRule {
  FlowType kind;
  FlowType data_in;
  FlowType policy_in;
  Anchor policy_in_from;
  FlowType policy_out;
  Anchor policy_out_to;
  FlowType retyped;
};

constexpr KindRule kInRule{FlowType::kIn,      FlowType::kExtlim,
                           FlowType::kExtreq,  Anchor::kSource,
                           FlowType::kReqrea,  Anchor::kTargetPartner,
                           FlowType::kLimpro};
constexpr KindRule kOutRule{FlowType::kOut,     FlowType::kProlim,
                            FlowType::kReareq,  Anchor::kSourcePartner,
                            FlowType::kReqext,  Anchor::kTarget,
                            FlowType::kLimext};
constexpr KindRule kCompRule{FlowType::kComp,    FlowType::kProlim,
                             FlowType::kReareq,  Anchor::kSourcePartner,
                             FlowType::kReqrea,  Anchor::kTargetPartner,
                             FlowType::kLimpro};
constexpr KindRule kStoreRule{FlowType::kStore,   FlowType::kProlim,
                              FlowType::kReareq,  Anchor::kSourcePartner,
                              FlowType::kReqpdb,  Anchor::kTargetPartner,
                              FlowType::kLimdb};
constexpr KindRule kReadRule{FlowType::kRead,    FlowType::kDblim,
                             FlowType::kPdbreq,  Anchor::kSourcePartner,
                             FlowType::kReqrea,  Anchor::kTargetPartner,
                             FlowType::kLimpro};
constexpr KindRule kDeleteRule{FlowType::kDelete,  FlowType::kProlim,
                               FlowType::kReareq,  Anchor::kSourcePartner,
                               FlowType::kReqpdb,  Anchor::kTargetPartner,
                               FlowType::kLimdbDel};

const KindRule* RuleFor(FlowType t) {
  for (const KindRule* r : {&kInRule, &kOutRule, &kCompRule, &kStoreRule,
                            &kReadRule, &kDeleteRule}) {
    if (r->kind == t) return r;
  }
  return nullptr;
}

absl::StatusOr<NodeId> Resolve(const Diagram& d, const Flow& f, Anchor a) {
  const NodeId& end =
      (a == Anchor::kSource || a == Anchor::kSourcePartner) ? f.source
                                                             : f.target;
  if (a == Anchor::kSource || a == Anchor::kTarget) return end;
  const Node* n = d.FindNode(end);
  if (n == nullptr || !n->partner) {
    return absl::FailedPreconditionError(
        absl::StrCat("missing-partner: activator ", end.value(), " of flow ",
                     f.id.value(), " has no partner"));
  }
  return *n->partner;
}

absl::StatusOr<GadgetAllocation> RewriteInPlace(Diagram& d, const FlowId& id,
                                                const KindRule& rule) {
  const Flow* found = d.FindFlow(id);
  if (found == nullptr) {
    return absl::NotFoundError(absl::StrCat("unknown flow ", id.value()));
  }
  if (found->type != rule.kind) {
    return absl::InvalidArgumentError(absl::StrCat(
        "wrong-flow-type: flow ", id.value(), " is ",
        found->type ? FlowTypeName(*found->type) : "<untyped>", ", expected ",
        FlowTypeName(rule.kind)));
  }
  const Flow original = *found;
  auto policy_from = Resolve(d, original, rule.policy_in_from);
  auto policy_to = Resolve(d, original, rule.policy_out_to);
  if (!policy_from.ok()) return policy_from.status();
  if (!policy_to.ok()) return policy_to.status();

  auto g = AddCommonInPlace(d, id);
  if (!g.ok()) return g.status();

  auto data_in =
      NewFlow(d, rule.data_in, original.label, original.source, g->limit);
  if (!data_in.ok()) return data_in.status();
  auto policy_in = NewFlow(d, rule.policy_in, "pol", *policy_from, g->request);
  if (!policy_in.ok()) return policy_in.status();
  PADFD_RETURN_IF_ERROR(d.LinkPartners(*data_in, *policy_in));
  auto policy_out = NewFlow(d, rule.policy_out, "pol", g->request, *policy_to);
  if (!policy_out.ok()) return policy_out.status();

  PADFD_RETURN_IF_ERROR(d.SetFlowType(id, rule.retyped));
  PADFD_RETURN_IF_ERROR(d.SetFlowSource(id, g->limit));
  PADFD_RETURN_IF_ERROR(d.LinkPartners(id, *policy_out));

  g->data_in = *data_in;
  g->policy_in = *policy_in;
  g->policy_out = *policy_out;
  return g;
}

absl::StatusOr<Diagram> RewriteKind(Diagram d, const FlowId& f,
                                    const KindRule& rule) {
  auto g = RewriteInPlace(d, f, rule);
  if (!g.ok()) return g.status();
  return d;
}

}  // namespace

absl::StatusOr<Diagram> AddPartners(const Diagram& d,
                                    const WellformedOptions& options) {
  PADFD_RETURN_IF_ERROR(CheckPreconditions(d, options));
  Diagram out = d;
  AddPartnersInPlace(out);
  return out;
}

absl::StatusOr<std::pair<Diagram, GadgetAllocation>> AddCommonElems(
    Diagram d, const FlowId& f) {
  auto g = AddCommonInPlace(d, f);
  if (!g.ok()) return g.status();
  return std::make_pair(std::move(d), *std::move(g));
}

absl::StatusOr<Diagram> TransformInFlow(Diagram d, const FlowId& f) {
  return RewriteKind(std::move(d), f, kInRule);
}
absl::StatusOr<Diagram> TransformOutFlow(Diagram d, const FlowId& f) {
  return RewriteKind(std::move(d), f, kOutRule);
}
absl::StatusOr<Diagram> TransformCompFlow(Diagram d, const FlowId& f) {
  return RewriteKind(std::move(d), f, kCompRule);
}
absl::StatusOr<Diagram> TransformStoreFlow(Diagram d, const FlowId& f) {
  return RewriteKind(std::move(d), f, kStoreRule);
}
absl::StatusOr<Diagram> TransformReadFlow(Diagram d, const FlowId& f) {
  return RewriteKind(std::move(d), f, kReadRule);
}
absl::StatusOr<Diagram> TransformDeleteFlow(Diagram d, const FlowId& f) {
  return RewriteKind(std::move(d), f, kDeleteRule);
}

absl::StatusOr<std::pair<Diagram, GadgetAllocation>> TransformFlow(
    Diagram d, const FlowId& f) {
  const Flow* flow = d.FindFlow(f);
  if (flow == nullptr) {
    return absl::NotFoundError(absl::StrCat("unknown flow ", f.value()));
  }
  const KindRule* rule = flow->type ? RuleFor(*flow->type) : nullptr;
  if (rule == nullptr) {
    return absl::InvalidArgumentError(absl::StrCat(
        "wrong-flow-type: flow ", f.value(), " has no well-formed type"));
  }
  auto g = RewriteInPlace(d, f, *rule);
  if (!g.ok()) return g.status();
  return std::make_pair(std::move(d), *std::move(g));
}

absl::StatusOr<Diagram> Transform(const Diagram& d,
                                  const TransformOptions& options) {
  PADFD_RETURN_IF_ERROR(CheckPreconditions(
      d, WellformedOptions{.activator_clauses = !options.excerpt}));
  Diagram out = d;
  std::vector<FlowId> originals;
  for (const auto& [id, f] : d.flows()) originals.push_back(id);

  AddPartnersInPlace(out);
  for (const FlowId& id : originals) {
    auto g = RewriteInPlace(out, id, *RuleFor(*out.FindFlow(id)->type));
    if (!g.ok()) return g.status();
  }
  out.set_stage(Stage::kPaDfd);
  if (options.shared_log_store) return MergeLogStores(std::move(out));
  return out;
}

absl::StatusOr<Diagram> MergeLogStores(Diagram d) {
  std::vector<NodeId> stores;
  for (const auto& [id, n] : d.nodes()) {
    if (n.type == NodeType::kLogDb) stores.push_back(id);
  }
  if (stores.size() <= 1) return d;
  const NodeId& keeper = stores.front();
  std::vector<FlowId> rewire;
  for (const auto& [id, f] : d.flows()) {
    if (f.target != keeper && d.FindNode(f.target)->type == NodeType::kLogDb) {
      rewire.push_back(id);
    }
  }
  for (const FlowId& id : rewire) {
    PADFD_RETURN_IF_ERROR(d.SetFlowTarget(id, keeper));
  }
  for (size_t i = 1; i < stores.size(); ++i) {
    PADFD_RETURN_IF_ERROR(d.RemoveNode(stores[i]));
  }
  return d;
}

}  // namespace padfd
