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

// padfd: type-check B-DFDs, transform them into PA-DFDs, simulate PA-DFDs
// against run-time data and convert between diagram formats.

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "padfd/cli.h"

namespace {

using padfd::cli::Config;
using padfd::cli::Format;

const std::map<std::string, Format> kFormats = {
    {"drawio", Format::kDrawio}, {"json", Format::kJson}, {"dot", Format::kDot}};

void AddModelOptions(CLI::App* cmd, Config& config) {
  cmd->add_option("input", config.input, "Model file, or - for stdin")
      ->required();
  cmd->add_option("--in-format", config.in_format, "Input format")
      ->transform(CLI::CheckedTransformer(kFormats));
  cmd->add_option("--styles", config.styles,
                  "JSON style map overriding the defaults")
      ->envname("PADFD_STYLES");
  cmd->add_flag("--excerpt", config.excerpt,
                "Accept diagram fragments whose activators lack in or out "
                "flows");
}

void AddOutputOptions(CLI::App* cmd, Config& config) {
  cmd->add_option("-o,--output", config.output, "Output file (default stdout)");
  cmd->add_option("--format,--out-format", config.out_format, "Output format")
      ->transform(CLI::CheckedTransformer(kFormats));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Privacy-aware data flow diagram tools"};
  app.require_subcommand(1);
  Config config;

  CLI::App* check = app.add_subcommand(
      "check", "Type-check a B-DFD or validate a PA-DFD");
  AddModelOptions(check, config);
  AddOutputOptions(check, config);

  CLI::App* transform =
      app.add_subcommand("transform", "Transform a B-DFD into a PA-DFD");
  AddModelOptions(transform, config);
  AddOutputOptions(transform, config);
  transform->add_flag("--shared-log-store", config.shared_log_store,
                      "Use one log store for every limit");

  CLI::App* simulate = app.add_subcommand(
      "simulate", "Run data records through a PA-DFD's limits");
  AddModelOptions(simulate, config);
  simulate->add_option("-o,--output", config.output, "Report file");
  simulate->add_option("--static", config.static_table,
                       "Flow metadata (CSV or JSON)")
      ->required();
  simulate->add_option("--dynamic", config.dynamic_table,
                       "Data records (CSV or JSON)")
      ->required();
  simulate->add_option("--clock", config.clock, "Evaluation date YYYY-MM-DD")
      ->required();
  simulate->add_option("--compat", config.compat_table,
                       "Purpose compatibility CSV");
  simulate->add_option("--report", config.report, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  simulate->add_flag("--fail-on-violation", config.fail_on_violation,
                     "Exit with status 3 when a violation is logged");
  simulate->add_flag("--multi-hop", config.multi_hop,
                     "Propagate forwarded records along downstream flows");

  CLI::App* exporter =
      app.add_subcommand("export", "Convert a model to another format");
  AddModelOptions(exporter, config);
  AddOutputOptions(exporter, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : padfd::cli::kExitParse;
  }

  if (*check) return padfd::cli::RunCheck(config, std::cout, std::cerr);
  if (*transform) return padfd::cli::RunTransform(config, std::cout, std::cerr);
  if (*simulate) return padfd::cli::RunSimulate(config, std::cout, std::cerr);
  return padfd::cli::RunExport(config, std::cout, std::cerr);
}
