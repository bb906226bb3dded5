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

// Subcommand bodies of the padfd tool, kept separate from argument parsing
// so they can be driven from tests.

#ifndef PADFD_CLI_H_
#define PADFD_CLI_H_

#include <optional>
#include <ostream>
#include <string>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "padfd/graph.h"
#include "padfd/styles.h"

namespace padfd::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitIllFormed = 1,  // ill-formed model or bad input data
  kExitParse = 2,      // unreadable or unparsable input, usage errors
  kExitViolation = 3,  // --fail-on-violation and a violation was logged
};

enum class Format { kDrawio, kJson, kDot };

absl::StatusOr<Format> ParseFormat(absl::string_view name);
// Format implied by a file extension (.drawio/.xml, .json, .dot/.gv).
std::optional<Format> FormatFromPath(absl::string_view path);

struct Config {
  std::string input;  // "-" reads stdin
  std::optional<Format> in_format;
  std::optional<Format> out_format;
  std::string output;  // empty or "-" writes stdout
  std::string styles;  // style override file, empty for defaults
  bool excerpt = false;
  bool shared_log_store = false;

  // simulate
  std::string static_table;
  std::string dynamic_table;
  std::string compat_table;
  std::string clock;
  std::string report = "text";
  bool fail_on_violation = false;
  bool multi_hop = false;
};

int RunCheck(const Config& config, std::ostream& out, std::ostream& err);
int RunTransform(const Config& config, std::ostream& out, std::ostream& err);
int RunSimulate(const Config& config, std::ostream& out, std::ostream& err);
int RunExport(const Config& config, std::ostream& out, std::ostream& err);

}  // namespace padfd::cli

#endif  // PADFD_CLI_H_
