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

#include "padfd/styles.h"

#include <algorithm>

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "json.hpp"

namespace padfd {
namespace {

constexpr char kVertexBase[] = "whiteSpace=wrap;html=1;";
constexpr char kStoreShape[] = "shape=partialRectangle;left=0;right=0;";

std::string Tag(absl::string_view name) {
  return absl::StrCat("padfd=", name, ";");
}

template <typename Type>
std::optional<Type> Match(const std::vector<StyleRule<Type>>& rules,
                          absl::string_view style) {
  std::vector<std::string> tokens = StyleTokens(style);
  for (const StyleRule<Type>& rule : rules) {
    bool all = std::all_of(
        rule.tokens.begin(), rule.tokens.end(), [&](const std::string& t) {
          return std::find(tokens.begin(), tokens.end(), t) != tokens.end();
        });
    if (all && !rule.tokens.empty()) return rule.type;
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::string> StyleTokens(absl::string_view style) {
  std::vector<std::string> out;
  for (absl::string_view part :
       absl::StrSplit(absl::string_view(style.data(), style.size()), ';')) {
    absl::string_view t = absl::StripAsciiWhitespace(part);
    if (!t.empty()) out.emplace_back(t);
  }
  return out;
}

StyleMap StyleMap::Default() {
  StyleMap m;
  for (NodeType t : kAllNodeTypes) {
    m.vertex_rules_.push_back(
        {{absl::StrCat("padfd=", NodeTypeName(t))}, t});
  }
  m.vertex_rules_.push_back({{"ellipse"}, NodeType::kProc});
  m.vertex_rules_.push_back({{"shape=partialRectangle"}, NodeType::kDb});
  m.vertex_rules_.push_back({{"shape=datastore"}, NodeType::kDb});
  m.vertex_rules_.push_back({{"shape=cylinder3"}, NodeType::kDb});
  m.vertex_rules_.push_back({{"shape=cylinder"}, NodeType::kDb});
  m.vertex_rules_.push_back({{"rounded=0"}, NodeType::kExt});
  m.vertex_rules_.push_back({{"rounded=1"}, NodeType::kExt});
  m.vertex_rules_.push_back({{"rectangle"}, NodeType::kExt});

  for (FlowType t : kAllFlowTypes) {
    m.edge_rules_.push_back({{absl::StrCat("padfd=", FlowTypeName(t))}, t});
  }
  m.edge_rules_.push_back({{"dashed=1"}, FlowType::kDf});

  auto vertex = [&](NodeType t, absl::string_view shape,
                    absl::string_view colors) {
    m.vertex_styles_[t] =
        absl::StrCat(shape, kVertexBase, colors, Tag(NodeTypeName(t)));
  };
  vertex(NodeType::kExt, "rounded=0;", "");
  vertex(NodeType::kProc, "ellipse;", "");
  vertex(NodeType::kDb, kStoreShape, "");
  vertex(NodeType::kLimit, "ellipse;",
         "fillColor=#f8cecc;strokeColor=#b85450;");
  vertex(NodeType::kRequest, "ellipse;",
         "fillColor=#dae8fc;strokeColor=#6c8ebf;");
  vertex(NodeType::kReason, "ellipse;",
         "fillColor=#d5e8d4;strokeColor=#82b366;");
  vertex(NodeType::kPolicyDb, kStoreShape,
         "fillColor=#dae8fc;strokeColor=#6c8ebf;");
  vertex(NodeType::kLog, "ellipse;",
         "fillColor=#fff2cc;strokeColor=#d6b656;");
  vertex(NodeType::kLogDb, kStoreShape,
         "fillColor=#fff2cc;strokeColor=#d6b656;");
  vertex(NodeType::kClean, "ellipse;",
         "fillColor=#e1d5e7;strokeColor=#9673a6;");

  for (FlowType t : kAllFlowTypes) {
    std::string extra;
    if (t == FlowType::kDf || t == FlowType::kDelete ||
        t == FlowType::kLimdbDel || t == FlowType::kCledbDel) {
      extra = "dashed=1;";
    } else if (IsPaPolicyFlowType(t)) {
      extra = "strokeColor=#6c8ebf;";
    } else if (IsPaAdminFlowType(t)) {
      extra = "strokeColor=#d6b656;";
    }
    m.edge_styles_[t] = absl::StrCat("endArrow=classic;html=1;", extra,
                                     Tag(FlowTypeName(t)));
  }
  return m;
}

absl::StatusOr<StyleMap> StyleMap::FromJson(absl::string_view text) {
  using nlohmann::json;
  json doc = json::parse(text.begin(), text.end(), nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    return absl::InvalidArgumentError("style map: not a JSON object");
  }
  for (const auto& [key, value] : doc.items()) {
    if (key != "vertex_rules" && key != "edge_rules" &&
        key != "vertex_styles" && key != "edge_styles" &&
        key != "replace_rules") {
      return absl::InvalidArgumentError(
          absl::StrCat("style map: unknown key ", key));
    }
  }
  if (doc.contains("replace_rules") && !doc["replace_rules"].is_boolean()) {
    return absl::InvalidArgumentError(
        "style map: replace_rules must be true or false");
  }
  StyleMap m = Default();
  bool replace = doc.value("replace_rules", false);

  auto read_rules = [&](const char* key, auto parse_type, auto& rules,
                        size_t tag_rules) -> absl::Status {
    if (!doc.contains(key)) return absl::OkStatus();
    const json& list = doc[key];
    if (!list.is_array()) {
      return absl::InvalidArgumentError(
          absl::StrCat("style map: ", key, " must be an array"));
    }
    std::decay_t<decltype(rules)> parsed;
    for (const json& r : list) {
      if (!r.is_object() || !r.contains("match") || !r.contains("type") ||
          !r["match"].is_array() || !r["type"].is_string()) {
        return absl::InvalidArgumentError(absl::StrCat(
            "style map: ", key, " entries need \"match\" and \"type\""));
      }
      auto type = parse_type(r["type"].template get<std::string>());
      if (!type) {
        return absl::InvalidArgumentError(absl::StrCat(
            "style map: unknown type ", r["type"].template get<std::string>()));
      }
      if (r["match"].empty()) {
        return absl::InvalidArgumentError(
            absl::StrCat("style map: empty match list in ", key));
      }
      typename std::decay_t<decltype(rules)>::value_type rule{{}, *type};
      for (const json& t : r["match"]) {
        if (!t.is_string()) {
          return absl::InvalidArgumentError("style map: tokens are strings");
        }
        rule.tokens.push_back(t.get<std::string>());
      }
      parsed.push_back(std::move(rule));
    }
    // The padfd= tag rules lead the defaults and always survive.
    size_t keep = replace ? tag_rules : rules.size();
    parsed.insert(parsed.end(), rules.begin(), rules.begin() + keep);
    rules = std::move(parsed);
    return absl::OkStatus();
  };
  if (absl::Status s = read_rules("vertex_rules", ParseNodeType,
                                  m.vertex_rules_, kAllNodeTypes.size());
      !s.ok()) {
    return s;
  }
  if (absl::Status s = read_rules("edge_rules", ParseFlowType, m.edge_rules_,
                                  kAllFlowTypes.size());
      !s.ok()) {
    return s;
  }

  auto read_styles = [&](const char* key, auto parse_type,
                         auto& styles) -> absl::Status {
    if (!doc.contains(key)) return absl::OkStatus();
    if (!doc[key].is_object()) {
      return absl::InvalidArgumentError(
          absl::StrCat("style map: ", key, " must be an object"));
    }
    for (const auto& [name, style] : doc[key].items()) {
      auto type = parse_type(name);
      if (!type || !style.is_string()) {
        return absl::InvalidArgumentError(
            absl::StrCat("style map: bad entry ", name, " in ", key));
      }
      styles[*type] = style.template get<std::string>();
    }
    return absl::OkStatus();
  };
  if (absl::Status s = read_styles("vertex_styles", ParseNodeType,
                                   m.vertex_styles_);
      !s.ok()) {
    return s;
  }
  if (absl::Status s = read_styles("edge_styles", ParseFlowType,
                                   m.edge_styles_);
      !s.ok()) {
    return s;
  }
  if (absl::Status s = m.CheckConsistent(); !s.ok()) return s;
  return m;
}

absl::Status StyleMap::CheckConsistent() const {
  for (NodeType t : kAllNodeTypes) {
    if (MatchVertex(VertexStyle(t)) != t) {
      return absl::InvalidArgumentError(
          absl::StrCat("style map: emitted style for ", NodeTypeName(t),
                       " does not parse back to ", NodeTypeName(t)));
    }
  }
  for (FlowType t : kAllFlowTypes) {
    FlowType parsed = MatchEdge(EdgeStyle(t)).value_or(FlowType::kPf);
    if (parsed != t) {
      return absl::InvalidArgumentError(
          absl::StrCat("style map: emitted style for ", FlowTypeName(t),
                       " does not parse back to ", FlowTypeName(t)));
    }
  }
  return absl::OkStatus();
}

std::optional<NodeType> StyleMap::MatchVertex(absl::string_view style) const {
  return Match(vertex_rules_, style);
}

std::optional<FlowType> StyleMap::MatchEdge(absl::string_view style) const {
  return Match(edge_rules_, style);
}

const std::string& StyleMap::VertexStyle(NodeType type) const {
  return vertex_styles_.at(type);
}

const std::string& StyleMap::EdgeStyle(FlowType type) const {
  return edge_styles_.at(type);
}

}  // namespace padfd
