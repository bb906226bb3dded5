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

#include "padfd/cli.h"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "absl/strings/ascii.h"
#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "padfd/formats.h"
#include "padfd/simulate.h"
#include "padfd/tables.h"
#include "padfd/transform.h"
#include "padfd/typecheck.h"
#include "padfd/validate.h"

namespace padfd::cli {

absl::StatusOr<Format> ParseFormat(absl::string_view name) {
  if (name == "drawio") return Format::kDrawio;
  if (name == "json") return Format::kJson;
  if (name == "dot") return Format::kDot;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown format \"", name, "\" (drawio, json or dot)"));
}

std::optional<Format> FormatFromPath(absl::string_view path) {
  std::string ext =
      absl::AsciiStrToLower(std::filesystem::path(std::string(path)).extension().string());
  if (ext == ".drawio" || ext == ".xml") return Format::kDrawio;
  if (ext == ".json") return Format::kJson;
  if (ext == ".dot" || ext == ".gv") return Format::kDot;
  return std::nullopt;
}

namespace {

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot read ", path));
  return std::string(std::istreambuf_iterator<char>(in), {});
}

// Writes through a sibling temporary so readers never see a partial file.
absl::Status WriteFile(const std::string& path, const std::string& text,
                       std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return absl::OkStatus();
  }
  std::string tmp = absl::StrCat(path, ".tmp");
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) return absl::PermissionDeniedError(absl::StrCat("cannot write ", path));
    f << text;
    if (!f.flush()) {
      return absl::DataLossError(absl::StrCat("write failed for ", path));
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    return absl::PermissionDeniedError(absl::StrCat("cannot replace ", path));
  }
  return absl::OkStatus();
}

int Fail(std::ostream& err, const absl::Status& status, int code) {
  err << "padfd: " << status.message() << "\n";
  return code;
}

absl::StatusOr<StyleMap> LoadStyles(const Config& config) {
  if (config.styles.empty()) return StyleMap::Default();
  auto text = ReadFile(config.styles);
  if (!text.ok()) return text.status();
  return StyleMap::FromJson(*text);
}

absl::StatusOr<Diagram> LoadModel(const Config& config,
                                  const StyleMap& styles) {
  std::optional<Format> format = config.in_format;
  if (!format) format = FormatFromPath(config.input);
  if (!format) {
    return absl::InvalidArgumentError(absl::StrCat(
        "cannot tell the format of ", config.input, "; pass --in-format"));
  }
  auto text = ReadFile(config.input);
  if (!text.ok()) return text.status();
  switch (*format) {
    case Format::kDrawio:
      return ParseDrawio(*text, styles);
    case Format::kJson:
      return ParseJson(*text);
    case Format::kDot:
      return absl::InvalidArgumentError("dot is an export-only format");
  }
  return absl::InternalError("unreachable");
}

absl::StatusOr<std::string> Render(const Diagram& d, Format format,
                                   const StyleMap& styles) {
  switch (format) {
    case Format::kDrawio:
      return EmitDrawio(d, styles);
    case Format::kJson:
      return EmitJson(d);
    case Format::kDot:
      return EmitDot(d);
  }
  return absl::InternalError("unreachable");
}

Format OutputFormat(const Config& config, Format fallback) {
  if (config.out_format) return *config.out_format;
  if (auto f = FormatFromPath(config.output)) return *f;
  return fallback;
}

int Emit(const Config& config, const Diagram& d, const StyleMap& styles,
         Format fallback, std::ostream& out, std::ostream& err) {
  auto text = Render(d, OutputFormat(config, fallback), styles);
  if (!text.ok()) return Fail(err, text.status(), kExitIllFormed);
  if (auto s = WriteFile(config.output, *text, out); !s.ok()) {
    return Fail(err, s, kExitParse);
  }
  return kExitOk;
}

void PrintViolations(const StageValidity& validity, std::ostream& err) {
  for (const Violation& v : validity.violations) {
    err << "error " << v.element << " " << v.clause << ": " << v.message
        << "\n";
  }
}

// Brings a raw or well-formed model to the well-formed stage, reporting
// diagnostics on `err`. Returns nullopt when the model is ill-formed.
std::optional<Diagram> ToWellformed(const Diagram& d, bool excerpt,
                                    std::ostream& err) {
  switch (d.stage()) {
    case Stage::kRawBdfd: {
      auto result = Typecheck(d, TypecheckOptions{.excerpt = excerpt});
      if (!result.ok()) {
        err << "padfd: " << result.status().message() << "\n";
        return std::nullopt;
      }
      for (const Diagnostic& diag : result->diagnostics) {
        err << FormatDiagnostic(diag) << "\n";
      }
      return result->diagram;
    }
    case Stage::kWellformedBdfd: {
      StageValidity v = ValidateWellformed(
          d, WellformedOptions{.activator_clauses = !excerpt});
      if (!v.valid()) {
        PrintViolations(v, err);
        return std::nullopt;
      }
      return d;
    }
    case Stage::kPaDfd:
      err << "padfd: model is already a pa-dfd\n";
      return std::nullopt;
  }
  return std::nullopt;
}

absl::StatusOr<std::vector<FlowMeta>> LoadMetas(const std::string& path) {
  auto text = ReadFile(path);
  if (!text.ok()) return text.status();
  if (FormatFromPath(path) == Format::kJson) return ParseFlowMetaJson(*text);
  return ParseFlowMetaCsv(*text);
}

absl::StatusOr<std::vector<DataRecord>> LoadRecords(const std::string& path) {
  auto text = ReadFile(path);
  if (!text.ok()) return text.status();
  if (FormatFromPath(path) == Format::kJson) return ParseRecordsJson(*text);
  return ParseRecordsCsv(*text);
}

}  // namespace

int RunCheck(const Config& config, std::ostream& out, std::ostream& err) {
  auto styles = LoadStyles(config);
  if (!styles.ok()) return Fail(err, styles.status(), kExitParse);
  auto model = LoadModel(config, *styles);
  if (!model.ok()) return Fail(err, model.status(), kExitParse);

  if (model->stage() == Stage::kPaDfd) {
    StageValidity v = ValidatePa(*model);
    PrintViolations(v, err);
    return v.valid() ? kExitOk : kExitIllFormed;
  }
  std::optional<Diagram> wellformed =
      ToWellformed(*model, config.excerpt, err);
  if (!wellformed) return kExitIllFormed;
  if (config.output.empty()) return kExitOk;
  return Emit(config, *wellformed, *styles, Format::kJson, out, err);
}

int RunTransform(const Config& config, std::ostream& out, std::ostream& err) {
  auto styles = LoadStyles(config);
  if (!styles.ok()) return Fail(err, styles.status(), kExitParse);
  auto model = LoadModel(config, *styles);
  if (!model.ok()) return Fail(err, model.status(), kExitParse);
  std::optional<Diagram> wellformed =
      ToWellformed(*model, config.excerpt, err);
  if (!wellformed) return kExitIllFormed;
  auto pa = Transform(*wellformed,
                      TransformOptions{.excerpt = config.excerpt,
                                       .shared_log_store =
                                           config.shared_log_store});
  if (!pa.ok()) return Fail(err, pa.status(), kExitIllFormed);
  return Emit(config, *pa, *styles, Format::kDrawio, out, err);
}

int RunSimulate(const Config& config, std::ostream& out, std::ostream& err) {
  auto styles = LoadStyles(config);
  if (!styles.ok()) return Fail(err, styles.status(), kExitParse);
  auto model = LoadModel(config, *styles);
  if (!model.ok()) return Fail(err, model.status(), kExitParse);
  auto clock = ParseDate(config.clock);
  if (!clock.ok()) return Fail(err, clock.status(), kExitParse);

  Diagram pa = *model;
  if (model->stage() != Stage::kPaDfd) {
    std::optional<Diagram> wellformed =
        ToWellformed(*model, config.excerpt, err);
    if (!wellformed) return kExitIllFormed;
    auto transformed =
        Transform(*wellformed, TransformOptions{.excerpt = config.excerpt});
    if (!transformed.ok()) {
      return Fail(err, transformed.status(), kExitIllFormed);
    }
    pa = *std::move(transformed);
  } else if (StageValidity v = ValidatePa(pa); !v.valid()) {
    PrintViolations(v, err);
    return kExitIllFormed;
  }

  auto metas = LoadMetas(config.static_table);
  if (!metas.ok()) return Fail(err, metas.status(), kExitIllFormed);
  auto records = LoadRecords(config.dynamic_table);
  if (!records.ok()) return Fail(err, records.status(), kExitIllFormed);
  SimulationOptions options;
  options.multi_hop = config.multi_hop;
  if (!config.compat_table.empty()) {
    auto text = ReadFile(config.compat_table);
    if (!text.ok()) return Fail(err, text.status(), kExitIllFormed);
    auto compat = ParseCompatibilityCsv(*text);
    if (!compat.ok()) return Fail(err, compat.status(), kExitIllFormed);
    options.compatibility = *std::move(compat);
  }

  auto report = RunSimulation(pa, *metas, *records, *clock, options);
  if (!report.ok()) return Fail(err, report.status(), kExitIllFormed);
  std::string text;
  if (config.report == "json") {
    text = ReportJson(*report);
  } else if (config.report == "text") {
    text = ReportText(*report);
  } else {
    return Fail(err,
                absl::InvalidArgumentError(absl::StrCat(
                    "unknown report format \"", config.report, "\"")),
                kExitParse);
  }
  if (auto s = WriteFile(config.output, text, out); !s.ok()) {
    return Fail(err, s, kExitParse);
  }
  if (config.fail_on_violation && report->ViolationCount() > 0) {
    return kExitViolation;
  }
  return kExitOk;
}

int RunExport(const Config& config, std::ostream& out, std::ostream& err) {
  auto styles = LoadStyles(config);
  if (!styles.ok()) return Fail(err, styles.status(), kExitParse);
  auto model = LoadModel(config, *styles);
  if (!model.ok()) return Fail(err, model.status(), kExitParse);
  return Emit(config, *model, *styles, Format::kDot, out, err);
}

}  // namespace padfd::cli
