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

#ifndef PADFD_FORMATS_H_
#define PADFD_FORMATS_H_

#include <string>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "padfd/graph.h"
#include "padfd/styles.h"

namespace padfd {

inline constexpr char kCanonicalSchema[] = "padfd-canonical/1";

// Canonical JSON: keys sorted, nodes and flows sorted by id, two-space
// indentation, LF line endings, trailing newline. Absent attributes are
// omitted rather than written as null.
std::string EmitJson(const Diagram& d);
// Errors are InvalidArgument with a "schema-violation:" message prefix.
absl::StatusOr<Diagram> ParseJson(absl::string_view text);

// Parses a draw.io document: either an <mxfile> with a single <diagram>
// page (plain or compressed) or a bare <mxGraphModel>. Error messages are
// prefixed with the error kind: "xml-syntax:", "unknown-style:",
// "missing-endpoint:", "multi-page:", "duplicate-id:", "bad-document:".
absl::StatusOr<Diagram> ParseDrawio(absl::string_view xml,
                                    const StyleMap& styles);

// Emits an uncompressed single-page draw.io document. Missing positions
// and sizes are filled in by LayoutGenerated() first. Fails when a node and
// a flow share an id (draw.io cells share one namespace) or when an extra
// attribute name is not a valid XML name.
absl::StatusOr<std::string> EmitDrawio(const Diagram& d,
                                       const StyleMap& styles);

// Graphviz export: one digraph, node shape by activator type, edge label
// "<flow type>: <label>".
std::string EmitDot(const Diagram& d);

}  // namespace padfd

#endif  // PADFD_FORMATS_H_
