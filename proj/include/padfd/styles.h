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

#ifndef PADFD_STYLES_H_
#define PADFD_STYLES_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "padfd/types.h"

namespace padfd {

// A parse rule fires when every listed token occurs in the cell's style.
// Tokens are the `;`-separated entries of a draw.io style string, compared
// exactly after trimming ("ellipse", "shape=datastore", "padfd=limit").
template <typename Type>
struct StyleRule {
  std::vector<std::string> tokens;
  Type type;
};

// Maps draw.io cell styles to activator/flow types (first match wins) and
// types back to the style emitted for them.
//
// The default map recognises the generic draw.io shapes used for hand-drawn
// DFDs (rectangle -> ext, ellipse -> proc, open-sided rectangle / datastore /
// cylinder -> db, dashed edge -> df) and tags every emitted style with a
// `padfd=<type>` token so that all diagram stages survive a round trip.
class StyleMap {
 public:
  static StyleMap Default();

  // Layers a JSON override on top of the defaults:
  //   {"vertex_rules": [{"match": ["shape=x"], "type": "db"}, ...],
  //    "edge_rules":   [{"match": ["dashed=1"], "type": "df"}],
  //    "vertex_styles": {"proc": "ellipse;..."},
  //    "edge_styles":   {"pf": "..."},
  //    "replace_rules": false}
  // Override rules are tried before the default ones. With `replace_rules`
  // only the default padfd=<type> tag rules are kept behind them. Fails if
  // an emitted style no longer parses back to its own type.
  static absl::StatusOr<StyleMap> FromJson(absl::string_view text);

  std::optional<NodeType> MatchVertex(absl::string_view style) const;
  // nullopt means no rule fired; callers treat the edge as a plain flow.
  std::optional<FlowType> MatchEdge(absl::string_view style) const;

  const std::string& VertexStyle(NodeType type) const;
  const std::string& EdgeStyle(FlowType type) const;

 private:
  absl::Status CheckConsistent() const;

  std::vector<StyleRule<NodeType>> vertex_rules_;
  std::vector<StyleRule<FlowType>> edge_rules_;
  std::map<NodeType, std::string> vertex_styles_;
  std::map<FlowType, std::string> edge_styles_;
};

// Splits a style string into trimmed, non-empty tokens.
std::vector<std::string> StyleTokens(absl::string_view style);

}  // namespace padfd

#endif  // PADFD_STYLES_H_
