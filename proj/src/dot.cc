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

#include "absl/strings/str_cat.h"
#include "padfd/formats.h"

namespace padfd {
namespace {

std::string Quote(absl::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
      out += c;
    } else if (c == '\n') {
      out += "\\n";
    } else {
      out += c;
    }
  }
  out += '"';
  return out;
}

absl::string_view Shape(std::optional<NodeType> type) {
  if (!type) return "plaintext";
  switch (*type) {
    case NodeType::kExt: return "box";
    case NodeType::kProc: return "ellipse";
    case NodeType::kDb: return "cylinder";
    case NodeType::kLimit: return "octagon";
    case NodeType::kRequest: return "diamond";
    case NodeType::kReason: return "hexagon";
    case NodeType::kPolicyDb: return "cylinder";
    case NodeType::kLog: return "note";
    case NodeType::kLogDb: return "folder";
    case NodeType::kClean: return "trapezium";
  }
  return "plaintext";
}

}  // namespace

std::string EmitDot(const Diagram& d) {
  std::string out = "digraph padfd {\n  rankdir=LR;\n";
  for (const auto& [id, n] : d.nodes()) {
    std::string label = n.label.value_or(id.value());
    if (n.type) absl::StrAppend(&label, "\n(", NodeTypeName(*n.type), ")");
    absl::StrAppend(&out, "  ", Quote(id.value()), " [label=", Quote(label),
                    ", shape=", Shape(n.type), "];\n");
  }
  for (const auto& [id, f] : d.flows()) {
    std::string label = f.type ? std::string(FlowTypeName(*f.type)) : "?";
    if (f.label) absl::StrAppend(&label, ": ", *f.label);
    absl::StrAppend(&out, "  ", Quote(f.source.value()), " -> ",
                    Quote(f.target.value()), " [label=", Quote(label),
                    f.type == FlowType::kLimdbDel ||
                            f.type == FlowType::kCledbDel ||
                            f.type == FlowType::kDelete ||
                            f.type == FlowType::kDf
                        ? ", style=dashed"
                        : "",
                    "];\n");
  }
  out += "}\n";
  return out;
}

}  // namespace padfd
