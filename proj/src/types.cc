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

#include "padfd/types.h"

namespace padfd {

bool IsBdfdNodeType(NodeType t) {
  return t == NodeType::kExt || t == NodeType::kProc || t == NodeType::kDb;
}

bool IsDataNodeType(NodeType t) {
  return IsBdfdNodeType(t) || t == NodeType::kLimit;
}

bool IsPolicyNodeType(NodeType t) {
  switch (t) {
    case NodeType::kLimit:
    case NodeType::kRequest:
    case NodeType::kReason:
    case NodeType::kPolicyDb:
      return true;
    default:
      return false;
  }
}

bool IsAdminNodeType(NodeType t) {
  return t == NodeType::kLog || t == NodeType::kLogDb ||
         t == NodeType::kClean;
}

bool IsRawFlowType(FlowType t) {
  return t == FlowType::kPf || t == FlowType::kDf;
}

bool IsWellformedFlowType(FlowType t) {
  switch (t) {
    case FlowType::kIn:
    case FlowType::kOut:
    case FlowType::kComp:
    case FlowType::kStore:
    case FlowType::kRead:
    case FlowType::kDelete:
      return true;
    default:
      return false;
  }
}

bool IsPaDataFlowType(FlowType t) {
  switch (t) {
    case FlowType::kProlim:
    case FlowType::kExtlim:
    case FlowType::kDblim:
    case FlowType::kLimpro:
    case FlowType::kLimext:
    case FlowType::kLimdb:
    case FlowType::kLimdbDel:
      return true;
    default:
      return false;
  }
}

bool IsPaPolicyFlowType(FlowType t) {
  switch (t) {
    case FlowType::kReqlim:
    case FlowType::kReqrea:
    case FlowType::kReqpdb:
    case FlowType::kReareq:
    case FlowType::kExtreq:
    case FlowType::kReqext:
    case FlowType::kPdbreq:
      return true;
    default:
      return false;
  }
}

bool IsPaAdminFlowType(FlowType t) {
  switch (t) {
    case FlowType::kLimlog:
    case FlowType::kLogging:
    case FlowType::kPdbcle:
    case FlowType::kCledbDel:
      return true;
    default:
      return false;
  }
}

bool IsPaFlowType(FlowType t) {
  return IsPaDataFlowType(t) || IsPaPolicyFlowType(t) || IsPaAdminFlowType(t);
}

absl::string_view NodeTypeName(NodeType t) {
  switch (t) {
    case NodeType::kExt: return "ext";
    case NodeType::kProc: return "proc";
    case NodeType::kDb: return "db";
    case NodeType::kLimit: return "limit";
    case NodeType::kRequest: return "request";
    case NodeType::kReason: return "reason";
    case NodeType::kPolicyDb: return "policy_db";
    case NodeType::kLog: return "log";
    case NodeType::kLogDb: return "log_db";
    case NodeType::kClean: return "clean";
  }
  return "?";
}

absl::string_view FlowTypeName(FlowType t) {
  switch (t) {
    case FlowType::kPf: return "pf";
    case FlowType::kDf: return "df";
    case FlowType::kIn: return "in";
    case FlowType::kOut: return "out";
    case FlowType::kComp: return "comp";
    case FlowType::kStore: return "store";
    case FlowType::kRead: return "read";
    case FlowType::kDelete: return "delete";
    case FlowType::kProlim: return "prolim";
    case FlowType::kExtlim: return "extlim";
    case FlowType::kDblim: return "dblim";
    case FlowType::kLimpro: return "limpro";
    case FlowType::kLimext: return "limext";
    case FlowType::kLimdb: return "limdb";
    case FlowType::kLimdbDel: return "limdb_del";
    case FlowType::kReqlim: return "reqlim";
    case FlowType::kReqrea: return "reqrea";
    case FlowType::kReqpdb: return "reqpdb";
    case FlowType::kReareq: return "reareq";
    case FlowType::kExtreq: return "extreq";
    case FlowType::kReqext: return "reqext";
    case FlowType::kPdbreq: return "pdbreq";
    case FlowType::kLimlog: return "limlog";
    case FlowType::kLogging: return "logging";
    case FlowType::kPdbcle: return "pdbcle";
    case FlowType::kCledbDel: return "cledb_del";
  }
  return "?";
}

std::optional<NodeType> ParseNodeType(absl::string_view name) {
  for (NodeType t : kAllNodeTypes) {
    if (NodeTypeName(t) == name) return t;
  }
  return std::nullopt;
}

std::optional<FlowType> ParseFlowType(absl::string_view name) {
  for (FlowType t : kAllFlowTypes) {
    if (FlowTypeName(t) == name) return t;
  }
  return std::nullopt;
}

std::optional<Endpoints> PaFlowEndpoints(FlowType t) {
  using N = NodeType;
  switch (t) {
    case FlowType::kProlim: return Endpoints{N::kProc, N::kLimit};
    case FlowType::kExtlim: return Endpoints{N::kExt, N::kLimit};
    case FlowType::kDblim: return Endpoints{N::kDb, N::kLimit};
    case FlowType::kLimpro: return Endpoints{N::kLimit, N::kProc};
    case FlowType::kLimext: return Endpoints{N::kLimit, N::kExt};
    case FlowType::kLimdb: return Endpoints{N::kLimit, N::kDb};
    case FlowType::kLimdbDel: return Endpoints{N::kLimit, N::kDb};
    case FlowType::kReqlim: return Endpoints{N::kRequest, N::kLimit};
    case FlowType::kReqrea: return Endpoints{N::kRequest, N::kReason};
    case FlowType::kReqpdb: return Endpoints{N::kRequest, N::kPolicyDb};
    case FlowType::kReareq: return Endpoints{N::kReason, N::kRequest};
    case FlowType::kExtreq: return Endpoints{N::kExt, N::kRequest};
    case FlowType::kReqext: return Endpoints{N::kRequest, N::kExt};
    case FlowType::kPdbreq: return Endpoints{N::kPolicyDb, N::kRequest};
    case FlowType::kLimlog: return Endpoints{N::kLimit, N::kLog};
    case FlowType::kLogging: return Endpoints{N::kLog, N::kLogDb};
    case FlowType::kPdbcle: return Endpoints{N::kPolicyDb, N::kClean};
    case FlowType::kCledbDel: return Endpoints{N::kClean, N::kDb};
    default:
      return std::nullopt;
  }
}

}  // namespace padfd
