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

#ifndef PADFD_TYPES_H_
#define PADFD_TYPES_H_

#include <array>
#include <optional>
#include <string>

#include "absl/strings/string_view.h"

namespace padfd {

// Activator types across all diagram stages.
enum class NodeType {
  kExt,
  kProc,
  kDb,
  kLimit,
  kRequest,
  kReason,
  kPolicyDb,
  kLog,
  kLogDb,
  kClean,
};

inline constexpr std::array<NodeType, 10> kAllNodeTypes = {
    NodeType::kExt,     NodeType::kProc,   NodeType::kDb,
    NodeType::kLimit,   NodeType::kRequest, NodeType::kReason,
    NodeType::kPolicyDb, NodeType::kLog,   NodeType::kLogDb,
    NodeType::kClean,
};

// Flow types. The five families (raw, well-formed, PA data, PA policy,
// PA admin) are pairwise disjoint.
enum class FlowType {
  // raw B-DFD
  kPf,
  kDf,
  // well-formed B-DFD
  kIn,
  kOut,
  kComp,
  kStore,
  kRead,
  kDelete,
  // PA data flows
  kProlim,
  kExtlim,
  kDblim,
  kLimpro,
  kLimext,
  kLimdb,
  kLimdbDel,
  // PA policy flows
  kReqlim,
  kReqrea,
  kReqpdb,
  kReareq,
  kExtreq,
  kReqext,
  kPdbreq,
  // PA admin flows
  kLimlog,
  kLogging,
  kPdbcle,
  kCledbDel,
};

inline constexpr std::array<FlowType, 26> kAllFlowTypes = {
    FlowType::kPf,      FlowType::kDf,      FlowType::kIn,
    FlowType::kOut,     FlowType::kComp,    FlowType::kStore,
    FlowType::kRead,    FlowType::kDelete,  FlowType::kProlim,
    FlowType::kExtlim,  FlowType::kDblim,   FlowType::kLimpro,
    FlowType::kLimext,  FlowType::kLimdb,   FlowType::kLimdbDel,
    FlowType::kReqlim,  FlowType::kReqrea,  FlowType::kReqpdb,
    FlowType::kReareq,  FlowType::kExtreq,  FlowType::kReqext,
    FlowType::kPdbreq,  FlowType::kLimlog,  FlowType::kLogging,
    FlowType::kPdbcle,  FlowType::kCledbDel,
};

// Node type families. `limit` is both a data and a policy node type.
bool IsBdfdNodeType(NodeType t);
bool IsDataNodeType(NodeType t);
bool IsPolicyNodeType(NodeType t);
bool IsAdminNodeType(NodeType t);

// Flow type families; exactly one holds for every FlowType.
bool IsRawFlowType(FlowType t);
bool IsWellformedFlowType(FlowType t);
bool IsPaDataFlowType(FlowType t);
bool IsPaPolicyFlowType(FlowType t);
bool IsPaAdminFlowType(FlowType t);
bool IsPaFlowType(FlowType t);

// Canonical lower-case names ("policy_db", "limdb_del", ...).
absl::string_view NodeTypeName(NodeType t);
absl::string_view FlowTypeName(FlowType t);
std::optional<NodeType> ParseNodeType(absl::string_view name);
std::optional<FlowType> ParseFlowType(absl::string_view name);

// Endpoint shape of each PA flow type: the flow name encodes it
// ("reqlim" runs request -> limit). Defined for PA flow types only.
struct Endpoints {
  NodeType source;
  NodeType target;
};
std::optional<Endpoints> PaFlowEndpoints(FlowType t);

}  // namespace padfd

#endif  // PADFD_TYPES_H_
