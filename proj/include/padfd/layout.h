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

#ifndef PADFD_LAYOUT_H_
#define PADFD_LAYOUT_H_

#include "padfd/graph.h"

namespace padfd {

inline constexpr double kGridStep = 80.0;

Size DefaultSize(NodeType type);

// Assigns positions (and default sizes) to every node that lacks them;
// nodes that already have a position keep it.
//
// Placement policy: a limit sits at the midpoint of its guarded flow, its
// request one grid step perpendicular to the flow, the log one step below
// the limit and the log store one step below the log. A reason sits one
// step right of its process; a policy store one step and a clean node two
// steps right of their data store. Anything else is placed on a row. A spot
// already taken (another node within half a step on both axes) is resolved
// by moving down one step at a time.
Diagram LayoutGenerated(Diagram d);

}  // namespace padfd

#endif  // PADFD_LAYOUT_H_
