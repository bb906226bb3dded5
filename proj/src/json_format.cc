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

#include "padfd/formats.h"

#include "absl/strings/str_cat.h"
#include "json.hpp"

namespace padfd {
namespace {

using nlohmann::json;

absl::Status SchemaError(absl::string_view what) {
  return absl::InvalidArgumentError(absl::StrCat("schema-violation: ", what));
}

json AttributesJson(const Attributes& attrs) {
  json out = json::object();
  for (const auto& [k, v] : attrs) out[k] = v;
  return out;
}

absl::Status CheckKeys(const json& obj, std::initializer_list<const char*> keys,
                       absl::string_view where) {
  for (const auto& [k, v] : obj.items()) {
    bool known = false;
    for (const char* allowed : keys) known = known || k == allowed;
    if (!known) {
      return SchemaError(absl::StrCat("unknown key \"", k, "\" in ", where));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<std::string> RequiredString(const json& obj, const char* key,
                                           absl::string_view where) {
  if (!obj.contains(key) || !obj[key].is_string()) {
    return SchemaError(absl::StrCat(where, " needs string \"", key, "\""));
  }
  return obj[key].get<std::string>();
}

absl::StatusOr<std::optional<std::string>> OptionalString(
    const json& obj, const char* key, absl::string_view where) {
  if (!obj.contains(key)) return std::optional<std::string>();
  if (!obj[key].is_string()) {
    return SchemaError(absl::StrCat(where, ": \"", key, "\" must be a string"));
  }
  return std::optional<std::string>(obj[key].get<std::string>());
}

absl::StatusOr<Attributes> ReadAttributes(const json& obj,
                                          absl::string_view where) {
  Attributes out;
  if (!obj.contains("attributes")) return out;
  const json& a = obj["attributes"];
  if (!a.is_object()) {
    return SchemaError(absl::StrCat(where, ": attributes must be an object"));
  }
  for (const auto& [k, v] : a.items()) {
    if (!v.is_string()) {
      return SchemaError(
          absl::StrCat(where, ": attribute ", k, " must be a string"));
    }
    out[k] = v.get<std::string>();
  }
  return out;
}

absl::StatusOr<std::pair<double, double>> ReadPair(const json& obj,
                                                   const char* key,
                                                   const char* first,
                                                   const char* second,
                                                   absl::string_view where) {
  const json& p = obj[key];
  if (!p.is_object() || p.size() != 2 || !p.contains(first) ||
      !p.contains(second) || !p[first].is_number() || !p[second].is_number()) {
    return SchemaError(absl::StrCat(where, ": \"", key, "\" must be {\"",
                                    first, "\": number, \"", second,
                                    "\": number}"));
  }
  return std::make_pair(p[first].get<double>(), p[second].get<double>());
}

// Links each declared pair once, after checking that both sides name each
// other.
template <typename IdT>
absl::Status LinkDeclaredPartners(
    Diagram& d, const std::vector<std::pair<IdT, IdT>>& declared) {
  std::map<IdT, IdT> by_id(declared.begin(), declared.end());
  for (const auto& [a, b] : declared) {
    auto back = by_id.find(b);
    if (a == b || back == by_id.end() || back->second != a) {
      return SchemaError(absl::StrCat("partner of ", a.value(),
                                      " is missing or not mutual"));
    }
    if (a < b) {
      if (absl::Status s = d.LinkPartners(a, b); !s.ok()) {
        return SchemaError(s.message());
      }
    }
  }
  return absl::OkStatus();
}

}  // namespace

std::string EmitJson(const Diagram& d) {
  json nodes = json::array();
  for (const auto& [id, n] : d.nodes()) {
    json j = {{"id", id.value()}};
    if (n.type) j["type"] = NodeTypeName(*n.type);
    if (n.label) j["label"] = *n.label;
    if (n.partner) j["partner"] = n.partner->value();
    if (n.position) j["position"] = {{"x", n.position->x}, {"y", n.position->y}};
    if (n.size) {
      j["size"] = {{"width", n.size->width}, {"height", n.size->height}};
    }
    if (!n.attributes.empty()) j["attributes"] = AttributesJson(n.attributes);
    nodes.push_back(std::move(j));
  }
  json flows = json::array();
  for (const auto& [id, f] : d.flows()) {
    json j = {{"id", id.value()},
              {"source", f.source.value()},
              {"target", f.target.value()}};
    if (f.type) j["type"] = FlowTypeName(*f.type);
    if (f.label) j["label"] = *f.label;
    if (f.partner) j["partner"] = f.partner->value();
    if (!f.attributes.empty()) j["attributes"] = AttributesJson(f.attributes);
    flows.push_back(std::move(j));
  }
  json doc = {{"schema", kCanonicalSchema},
              {"stage", StageName(d.stage())},
              {"nodes", std::move(nodes)},
              {"flows", std::move(flows)}};
  return doc.dump(2) + "\n";
}

absl::StatusOr<Diagram> ParseJson(absl::string_view text) {
  json doc = json::parse(text.begin(), text.end(), nullptr, false);
  if (doc.is_discarded()) return SchemaError("not valid JSON");
  if (!doc.is_object()) return SchemaError("top level must be an object");
  if (absl::Status s = CheckKeys(doc, {"schema", "stage", "nodes", "flows"},
                                 "document");
      !s.ok()) {
    return s;
  }
  auto schema = RequiredString(doc, "schema", "document");
  if (!schema.ok()) return schema.status();
  if (*schema != kCanonicalSchema) {
    return SchemaError(absl::StrCat("unsupported schema ", *schema));
  }
  auto stage_name = RequiredString(doc, "stage", "document");
  if (!stage_name.ok()) return stage_name.status();
  std::optional<Stage> stage = ParseStage(*stage_name);
  if (!stage) return SchemaError(absl::StrCat("unknown stage ", *stage_name));
  if (!doc.contains("nodes") || !doc["nodes"].is_array() ||
      !doc.contains("flows") || !doc["flows"].is_array()) {
    return SchemaError("\"nodes\" and \"flows\" must be arrays");
  }

  Diagram d(*stage);
  std::vector<std::pair<NodeId, NodeId>> node_partners;
  for (const json& j : doc["nodes"]) {
    if (!j.is_object()) return SchemaError("node entries must be objects");
    if (absl::Status s = CheckKeys(j, {"id", "type", "label", "partner",
                                       "position", "size", "attributes"},
                                   "node");
        !s.ok()) {
      return s;
    }
    auto id = RequiredString(j, "id", "node");
    if (!id.ok()) return id.status();
    std::string where = absl::StrCat("node ", *id);
    Node n;
    n.id = NodeId(*id);
    auto type = OptionalString(j, "type", where);
    if (!type.ok()) return type.status();
    if (*type) {
      n.type = ParseNodeType(**type);
      if (!n.type) return SchemaError(absl::StrCat(where, ": unknown type ", **type));
    }
    auto label = OptionalString(j, "label", where);
    if (!label.ok()) return label.status();
    n.label = *label;
    auto partner = OptionalString(j, "partner", where);
    if (!partner.ok()) return partner.status();
    if (*partner) node_partners.emplace_back(n.id, NodeId(**partner));
    if (j.contains("position")) {
      auto p = ReadPair(j, "position", "x", "y", where);
      if (!p.ok()) return p.status();
      n.position = Position{p->first, p->second};
    }
    if (j.contains("size")) {
      auto p = ReadPair(j, "size", "width", "height", where);
      if (!p.ok()) return p.status();
      n.size = Size{p->first, p->second};
    }
    auto attrs = ReadAttributes(j, where);
    if (!attrs.ok()) return attrs.status();
    n.attributes = *std::move(attrs);
    if (absl::Status s = d.AddNode(std::move(n)); !s.ok()) {
      return SchemaError(s.message());
    }
  }

  std::vector<std::pair<FlowId, FlowId>> flow_partners;
  for (const json& j : doc["flows"]) {
    if (!j.is_object()) return SchemaError("flow entries must be objects");
    if (absl::Status s = CheckKeys(j, {"id", "type", "label", "partner",
                                       "source", "target", "attributes"},
                                   "flow");
        !s.ok()) {
      return s;
    }
    auto id = RequiredString(j, "id", "flow");
    if (!id.ok()) return id.status();
    std::string where = absl::StrCat("flow ", *id);
    Flow f;
    f.id = FlowId(*id);
    auto source = RequiredString(j, "source", where);
    if (!source.ok()) return source.status();
    auto target = RequiredString(j, "target", where);
    if (!target.ok()) return target.status();
    f.source = NodeId(*source);
    f.target = NodeId(*target);
    auto type = OptionalString(j, "type", where);
    if (!type.ok()) return type.status();
    if (*type) {
      f.type = ParseFlowType(**type);
      if (!f.type) return SchemaError(absl::StrCat(where, ": unknown type ", **type));
    }
    auto label = OptionalString(j, "label", where);
    if (!label.ok()) return label.status();
    f.label = *label;
    auto partner = OptionalString(j, "partner", where);
    if (!partner.ok()) return partner.status();
    if (*partner) flow_partners.emplace_back(f.id, FlowId(**partner));
    auto attrs = ReadAttributes(j, where);
    if (!attrs.ok()) return attrs.status();
    f.attributes = *std::move(attrs);
    if (absl::Status s = d.AddFlow(std::move(f)); !s.ok()) {
      return SchemaError(s.message());
    }
  }

  if (absl::Status s = LinkDeclaredPartners(d, node_partners); !s.ok()) {
    return s;
  }
  if (absl::Status s = LinkDeclaredPartners(d, flow_partners); !s.ok()) {
    return s;
  }
  return d;
}

}  // namespace padfd
