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

#include <charconv>
#include <cstring>
#include <memory>
#include <vector>

#include <expat.h>
#include <zlib.h>

#include "absl/strings/ascii.h"
#include "absl/strings/escaping.h"
#include "absl/strings/str_cat.h"
#include "padfd/formats.h"
#include "padfd/layout.h"

namespace padfd {
namespace {

// Minimal element tree built from expat callbacks.
struct XmlElement {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<std::unique_ptr<XmlElement>> children;
  std::string text;

  const std::string* Attr(absl::string_view key) const {
    for (const auto& [k, v] : attributes) {
      if (k == key) return &v;
    }
    return nullptr;
  }

  const XmlElement* Child(absl::string_view child_name) const {
    for (const auto& c : children) {
      if (c->name == child_name) return c.get();
    }
    return nullptr;
  }
};

struct TreeBuilder {
  std::unique_ptr<XmlElement> root;
  std::vector<XmlElement*> stack;

  static void Start(void* data, const XML_Char* name, const XML_Char** atts) {
    auto* self = static_cast<TreeBuilder*>(data);
    auto element = std::make_unique<XmlElement>();
    element->name = name;
    for (int i = 0; atts[i] != nullptr; i += 2) {
      element->attributes.emplace_back(atts[i], atts[i + 1]);
    }
    XmlElement* raw = element.get();
    if (self->stack.empty()) {
      self->root = std::move(element);
    } else {
      self->stack.back()->children.push_back(std::move(element));
    }
    self->stack.push_back(raw);
  }

  static void End(void* data, const XML_Char*) {
    static_cast<TreeBuilder*>(data)->stack.pop_back();
  }

  static void Text(void* data, const XML_Char* s, int len) {
    auto* self = static_cast<TreeBuilder*>(data);
    if (!self->stack.empty()) self->stack.back()->text.append(s, len);
  }
};

absl::Status Error(absl::string_view kind, absl::string_view what) {
  return absl::InvalidArgumentError(absl::StrCat(kind, ": ", what));
}

absl::StatusOr<std::unique_ptr<XmlElement>> ParseXml(absl::string_view xml) {
  std::unique_ptr<XML_ParserStruct, decltype(&XML_ParserFree)> parser(
      XML_ParserCreate("UTF-8"), &XML_ParserFree);
  TreeBuilder builder;
  XML_SetUserData(parser.get(), &builder);
  XML_SetElementHandler(parser.get(), &TreeBuilder::Start, &TreeBuilder::End);
  XML_SetCharacterDataHandler(parser.get(), &TreeBuilder::Text);
  if (XML_Parse(parser.get(), xml.data(), static_cast<int>(xml.size()), 1) ==
      XML_STATUS_ERROR) {
    return Error("xml-syntax",
                 absl::StrCat("line ", XML_GetCurrentLineNumber(parser.get()),
                              ": ",
                              XML_ErrorString(XML_GetErrorCode(parser.get()))));
  }
  if (!builder.root) return Error("xml-syntax", "empty document");
  return std::move(builder.root);
}

std::string UrlDecode(absl::string_view in) {
  std::string out;
  out.reserve(in.size());
  for (size_t i = 0; i < in.size(); ++i) {
    if (in[i] == '%' && i + 2 < in.size() &&
        absl::ascii_isxdigit(in[i + 1]) && absl::ascii_isxdigit(in[i + 2])) {
      int value = 0;
      std::from_chars(in.data() + i + 1, in.data() + i + 3, value, 16);
      out.push_back(static_cast<char>(value));
      i += 2;
    } else {
      out.push_back(in[i]);
    }
  }
  return out;
}

// Compressed draw.io pages: base64(raw-deflate(encodeURIComponent(xml))).
absl::StatusOr<std::string> InflatePage(absl::string_view encoded) {
  std::string compressed;
  std::string trimmed(absl::StripAsciiWhitespace(
      absl::string_view(encoded.data(), encoded.size())));
  if (!absl::Base64Unescape(trimmed, &compressed)) {
    return Error("bad-document", "compressed page is not base64");
  }
  z_stream zs{};
  if (inflateInit2(&zs, -MAX_WBITS) != Z_OK) {
    return Error("bad-document", "cannot initialise inflate");
  }
  zs.next_in = reinterpret_cast<Bytef*>(compressed.data());
  zs.avail_in = static_cast<uInt>(compressed.size());
  std::string out;
  char buffer[16384];
  int rc = Z_OK;
  while (rc == Z_OK) {
    zs.next_out = reinterpret_cast<Bytef*>(buffer);
    zs.avail_out = sizeof(buffer);
    rc = inflate(&zs, Z_NO_FLUSH);
    out.append(buffer, sizeof(buffer) - zs.avail_out);
    if (rc == Z_BUF_ERROR && zs.avail_in == 0) break;
  }
  inflateEnd(&zs);
  if (rc != Z_STREAM_END && rc != Z_BUF_ERROR) {
    return Error("bad-document", "compressed page does not inflate");
  }
  return UrlDecode(out);
}

absl::StatusOr<double> ParseNumber(const std::string& text,
                                   absl::string_view where) {
  double value = 0;
  const char* begin = text.data();
  if (!text.empty() && text[0] == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    return Error("bad-document",
                 absl::StrCat(where, ": \"", text, "\" is not a number"));
  }
  return value;
}

std::string FormatNumber(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

constexpr char kPartnerAttr[] = "padfd_partner";
constexpr char kStageAttr[] = "padfd_stage";

bool IsCellAttr(absl::string_view k) {
  for (const char* known : {"id", "value", "style", "vertex", "edge", "source",
                            "target", "parent"}) {
    if (k == known) return true;
  }
  return false;
}

// One vertex/edge after unwrapping <object>/<UserObject> containers.
struct RawCell {
  const XmlElement* cell = nullptr;
  std::string id;
  std::optional<std::string> label;
  std::optional<std::string> partner;
  Attributes extra;
};

absl::StatusOr<RawCell> Unwrap(const XmlElement& e) {
  RawCell out;
  if (e.name == "mxCell") {
    out.cell = &e;
    if (const std::string* v = e.Attr("value")) out.label = *v;
    for (const auto& [k, v] : e.attributes) {
      if (IsCellAttr(k)) continue;
      if (k == kPartnerAttr) {
        out.partner = v;
      } else {
        out.extra[k] = v;
      }
    }
  } else {
    out.cell = e.Child("mxCell");
    if (out.cell == nullptr) {
      return Error("bad-document",
                   absl::StrCat("<", e.name, "> without an mxCell child"));
    }
    if (const std::string* v = e.Attr("label")) out.label = *v;
    for (const auto& [k, v] : e.attributes) {
      if (k == "id" || k == "label") continue;
      if (k == kPartnerAttr) {
        out.partner = v;
      } else {
        out.extra[k] = v;
      }
    }
  }
  const std::string* id = e.Attr("id");
  if (id == nullptr || id->empty()) {
    return Error("bad-document", "cell without an id");
  }
  out.id = *id;
  return out;
}

absl::StatusOr<Diagram> ReadModel(const XmlElement& model,
                                  const StyleMap& styles) {
  const XmlElement* root = model.Child("root");
  if (root == nullptr) return Error("bad-document", "mxGraphModel has no root");

  std::vector<RawCell> vertices;
  std::vector<RawCell> edges;
  std::set<std::string> seen;
  for (const auto& child : root->children) {
    if (child->name != "mxCell" && child->name != "object" &&
        child->name != "UserObject") {
      continue;
    }
    auto cell = Unwrap(*child);
    if (!cell.ok()) return cell.status();
    if (!seen.insert(cell->id).second) {
      return Error("duplicate-id", absl::StrCat("cell id ", cell->id));
    }
    const std::string* vertex = cell->cell->Attr("vertex");
    const std::string* edge = cell->cell->Attr("edge");
    if (vertex != nullptr && *vertex == "1") {
      vertices.push_back(*std::move(cell));
    } else if (edge != nullptr && *edge == "1") {
      edges.push_back(*std::move(cell));
    }
  }

  Diagram d;
  bool any_pa = false;
  bool any_wellformed = false;
  std::vector<std::pair<NodeId, NodeId>> node_partners;
  for (const RawCell& c : vertices) {
    const std::string* style = c.cell->Attr("style");
    std::string style_text = style ? *style : "";
    std::optional<NodeType> type = styles.MatchVertex(style_text);
    if (!type) {
      return Error("unknown-style", absl::StrCat("cell ", c.id, " style \"",
                                                 style_text,
                                                 "\" matches no rule"));
    }
    any_pa = any_pa || !IsBdfdNodeType(*type);
    Node n;
    n.id = NodeId(c.id);
    n.type = type;
    n.label = c.label;
    n.attributes = c.extra;
    if (const XmlElement* geo = c.cell->Child("mxGeometry")) {
      std::string where = absl::StrCat("geometry of ", c.id);
      Position p;
      if (const std::string* x = geo->Attr("x")) {
        auto v = ParseNumber(*x, where);
        if (!v.ok()) return v.status();
        p.x = *v;
      }
      if (const std::string* y = geo->Attr("y")) {
        auto v = ParseNumber(*y, where);
        if (!v.ok()) return v.status();
        p.y = *v;
      }
      n.position = p;
      const std::string* w = geo->Attr("width");
      const std::string* h = geo->Attr("height");
      if (w != nullptr && h != nullptr) {
        auto wv = ParseNumber(*w, where);
        auto hv = ParseNumber(*h, where);
        if (!wv.ok()) return wv.status();
        if (!hv.ok()) return hv.status();
        n.size = Size{*wv, *hv};
      }
    }
    if (c.partner) node_partners.emplace_back(n.id, NodeId(*c.partner));
    if (absl::Status s = d.AddNode(std::move(n)); !s.ok()) return s;
  }

  std::vector<std::pair<FlowId, FlowId>> flow_partners;
  for (const RawCell& c : edges) {
    const std::string* src = c.cell->Attr("source");
    const std::string* tgt = c.cell->Attr("target");
    if (src == nullptr || tgt == nullptr || src->empty() || tgt->empty()) {
      return Error("missing-endpoint",
                   absl::StrCat("edge ", c.id, " lacks a ",
                                src == nullptr || src->empty() ? "source"
                                                               : "target"));
    }
    for (const std::string* end : {src, tgt}) {
      if (d.FindNode(NodeId(*end)) == nullptr) {
        return Error("missing-endpoint",
                     absl::StrCat("edge ", c.id, " references ", *end,
                                  ", which is not a vertex"));
      }
    }
    const std::string* style = c.cell->Attr("style");
    FlowType type =
        styles.MatchEdge(style ? *style : "").value_or(FlowType::kPf);
    any_pa = any_pa || IsPaFlowType(type);
    any_wellformed = any_wellformed || IsWellformedFlowType(type);
    Flow f;
    f.id = FlowId(c.id);
    f.type = type;
    f.label = c.label;
    f.source = NodeId(*src);
    f.target = NodeId(*tgt);
    f.attributes = c.extra;
    if (c.partner) flow_partners.emplace_back(f.id, FlowId(*c.partner));
    if (absl::Status s = d.AddFlow(std::move(f)); !s.ok()) return s;
  }

  auto link = [&](const auto& pairs) -> absl::Status {
    std::map<std::decay_t<decltype(pairs.front().first)>,
             std::decay_t<decltype(pairs.front().first)>>
        by_id(pairs.begin(), pairs.end());
    for (const auto& [a, b] : pairs) {
      auto back = by_id.find(b);
      if (a == b || back == by_id.end() || back->second != a) {
        return Error("bad-document", absl::StrCat("partner of ", a.value(),
                                                  " is missing or not mutual"));
      }
      if (a < b) {
        if (absl::Status s = d.LinkPartners(a, b); !s.ok()) return s;
      }
    }
    return absl::OkStatus();
  };
  if (!node_partners.empty()) {
    if (absl::Status s = link(node_partners); !s.ok()) return s;
  }
  if (!flow_partners.empty()) {
    if (absl::Status s = link(flow_partners); !s.ok()) return s;
  }

  if (const std::string* stage = model.Attr(kStageAttr)) {
    std::optional<Stage> parsed = ParseStage(*stage);
    if (!parsed) {
      return Error("bad-document", absl::StrCat("unknown stage ", *stage));
    }
    d.set_stage(*parsed);
  } else if (any_pa) {
    d.set_stage(Stage::kPaDfd);
  } else if (any_wellformed) {
    d.set_stage(Stage::kWellformedBdfd);
  }
  return d;
}

void AppendEscaped(std::string& out, absl::string_view text) {
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\n': out += "&#xa;"; break;
      case '\r': out += "&#xd;"; break;
      case '\t': out += "&#x9;"; break;
      default: out += c;
    }
  }
}

void AppendAttr(std::string& out, absl::string_view key,
                absl::string_view value) {
  absl::StrAppend(&out, " ", key, "=\"");
  AppendEscaped(out, value);
  out += '"';
}

bool IsXmlName(absl::string_view name) {
  if (name.empty()) return false;
  auto start_ok = [](char c) {
    return absl::ascii_isalpha(c) || c == '_' ||
           static_cast<unsigned char>(c) >= 0x80;
  };
  if (!start_ok(name[0])) return false;
  for (char c : name) {
    if (!start_ok(c) && !absl::ascii_isdigit(c) && c != '-' && c != '.') {
      return false;
    }
  }
  return true;
}

absl::Status CheckExtra(const Attributes& attrs, absl::string_view owner) {
  for (const auto& [k, v] : attrs) {
    if (!IsXmlName(k) || k == "id" || k == "label" || k == kPartnerAttr ||
        k.starts_with("xml") || k.starts_with("XML")) {
      return absl::InvalidArgumentError(absl::StrCat(
          "attribute name \"", k, "\" of ", owner, " cannot be written"));
    }
  }
  return absl::OkStatus();
}

// Writes one cell; wrapped in <object> when it carries extra attributes or
// a partner, which is where draw.io keeps custom properties.
void AppendCell(std::string& out, const std::string& id,
                const std::optional<std::string>& label,
                const std::optional<std::string>& partner,
                const Attributes& extra, absl::string_view cell_attrs,
                absl::string_view geometry, absl::string_view layer) {
  bool wrap = partner.has_value() || !extra.empty();
  if (wrap) {
    out += "        <object";
    AppendAttr(out, "id", id);
    if (label) AppendAttr(out, "label", *label);
    if (partner) AppendAttr(out, kPartnerAttr, *partner);
    for (const auto& [k, v] : extra) AppendAttr(out, k, v);
    out += ">\n          <mxCell";
  } else {
    out += "        <mxCell";
    AppendAttr(out, "id", id);
    if (label) AppendAttr(out, "value", *label);
  }
  absl::StrAppend(&out, cell_attrs);
  AppendAttr(out, "parent", layer);
  absl::StrAppend(&out, ">\n", wrap ? "            " : "          ", geometry,
                  "\n", wrap ? "          " : "        ", "</mxCell>\n");
  if (wrap) out += "        </object>\n";
}

}  // namespace

absl::StatusOr<Diagram> ParseDrawio(absl::string_view xml,
                                    const StyleMap& styles) {
  auto doc = ParseXml(xml);
  if (!doc.ok()) return doc.status();
  const XmlElement* model = nullptr;
  std::unique_ptr<XmlElement> inflated;
  if ((*doc)->name == "mxGraphModel") {
    model = doc->get();
  } else if ((*doc)->name == "mxfile") {
    std::vector<const XmlElement*> pages;
    for (const auto& c : (*doc)->children) {
      if (c->name == "diagram") pages.push_back(c.get());
    }
    if (pages.empty()) return Error("bad-document", "mxfile has no diagram");
    if (pages.size() > 1) {
      return Error("multi-page",
                   absl::StrCat("document has ", pages.size(),
                                " pages; only single-page files are supported"));
    }
    model = pages[0]->Child("mxGraphModel");
    if (model == nullptr) {
      auto page = InflatePage(pages[0]->text);
      if (!page.ok()) return page.status();
      auto parsed = ParseXml(*page);
      if (!parsed.ok()) return parsed.status();
      inflated = *std::move(parsed);
      if (inflated->name != "mxGraphModel") {
        return Error("bad-document", "compressed page is not an mxGraphModel");
      }
      model = inflated.get();
    }
  } else {
    return Error("bad-document",
                 absl::StrCat("unexpected root element <", (*doc)->name, ">"));
  }
  return ReadModel(*model, styles);
}

absl::StatusOr<std::string> EmitDrawio(const Diagram& input,
                                       const StyleMap& styles) {
  for (const auto& [id, f] : input.flows()) {
    if (input.FindNode(NodeId(id.value())) != nullptr) {
      return absl::InvalidArgumentError(absl::StrCat(
          "duplicate-id: ", id.value(), " names both a node and a flow"));
    }
    if (absl::Status s = CheckExtra(f.attributes, id.value()); !s.ok()) {
      return s;
    }
    if (!f.type) {
      return absl::InvalidArgumentError(
          absl::StrCat("flow ", id.value(), " has no type"));
    }
  }
  for (const auto& [id, n] : input.nodes()) {
    if (absl::Status s = CheckExtra(n.attributes, id.value()); !s.ok()) {
      return s;
    }
    if (!n.type) {
      return absl::InvalidArgumentError(
          absl::StrCat("node ", id.value(), " has no type"));
    }
  }
  Diagram d = LayoutGenerated(input);

  std::string root_id = "0";
  std::string layer_id = "1";
  if (d.ContainsId(root_id)) root_id = "padfd-root";
  if (d.ContainsId(layer_id)) layer_id = "padfd-layer";

  std::string out = "<mxfile host=\"padfd\">\n  <diagram id=\"padfd\" name=\"Page-1\">\n    <mxGraphModel";
  AppendAttr(out, kStageAttr, StageName(d.stage()));
  out += ">\n      <root>\n        <mxCell";
  AppendAttr(out, "id", root_id);
  out += " />\n        <mxCell";
  AppendAttr(out, "id", layer_id);
  AppendAttr(out, "parent", root_id);
  out += " />\n";

  for (const auto& [id, n] : d.nodes()) {
    std::string cell;
    AppendAttr(cell, "style", styles.VertexStyle(*n.type));
    cell += " vertex=\"1\"";
    std::string geometry = "<mxGeometry";
    AppendAttr(geometry, "x", FormatNumber(n.position->x));
    AppendAttr(geometry, "y", FormatNumber(n.position->y));
    AppendAttr(geometry, "width", FormatNumber(n.size->width));
    AppendAttr(geometry, "height", FormatNumber(n.size->height));
    geometry += " as=\"geometry\" />";
    std::optional<std::string> partner;
    if (n.partner) partner = n.partner->value();
    AppendCell(out, id.value(), n.label, partner, n.attributes, cell, geometry,
               layer_id);
  }
  for (const auto& [id, f] : d.flows()) {
    std::string cell;
    AppendAttr(cell, "style", styles.EdgeStyle(*f.type));
    cell += " edge=\"1\"";
    AppendAttr(cell, "source", f.source.value());
    AppendAttr(cell, "target", f.target.value());
    std::optional<std::string> partner;
    if (f.partner) partner = f.partner->value();
    AppendCell(out, id.value(), f.label, partner, f.attributes, cell,
               "<mxGeometry relative=\"1\" as=\"geometry\" />", layer_id);
  }
  out += "      </root>\n    </mxGraphModel>\n  </diagram>\n</mxfile>\n";
  return out;
}

}  // namespace padfd
