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

#include "padfd/tables.h"

#include <map>

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "json.hpp"

namespace padfd {

absl::StatusOr<std::vector<CsvRow>> ParseCsv(absl::string_view text) {
  std::vector<CsvRow> rows;
  CsvRow row;
  std::string field;
  bool quoted = false;
  bool was_quoted = false;  // current row has a quoted field
  bool closed = false;      // current field's closing quote was seen
  int line = 1;
  auto end_row = [&] {
    row.push_back(std::move(field));
    field.clear();
    bool blank = row.size() == 1 && row[0].empty() && !was_quoted;
    if (!blank) rows.push_back(std::move(row));
    row.clear();
    was_quoted = false;
    closed = false;
  };
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
          closed = true;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty() || closed) {
          return absl::InvalidArgumentError(
              absl::StrCat("csv line ", line, ": stray quote"));
        }
        quoted = true;
        was_quoted = true;
        break;
      case ',':
        row.push_back(std::move(field));
        field.clear();
        closed = false;
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') break;
        field += c;
        break;
      case '\n':
        end_row();
        ++line;
        break;
      default:
        if (closed) {
          return absl::InvalidArgumentError(
              absl::StrCat("csv line ", line, ": text after closing quote"));
        }
        field += c;
    }
  }
  if (quoted) {
    return absl::InvalidArgumentError("csv: unterminated quoted field");
  }
  if (!field.empty() || !row.empty() || was_quoted) end_row();
  return rows;
}

namespace {

// Maps header names to column indices and checks the expected set.
absl::StatusOr<std::map<std::string, size_t>> Header(
    const std::vector<CsvRow>& rows, const std::vector<std::string>& want,
    absl::string_view what) {
  if (rows.empty()) {
    return absl::InvalidArgumentError(absl::StrCat(what, ": missing header"));
  }
  std::map<std::string, size_t> columns;
  for (size_t i = 0; i < rows[0].size(); ++i) {
    std::string name(absl::StripAsciiWhitespace(rows[0][i]));
    columns[absl::AsciiStrToLower(name)] = i;
  }
  for (const std::string& w : want) {
    if (!columns.contains(absl::AsciiStrToLower(w))) {
      return absl::InvalidArgumentError(
          absl::StrCat(what, ": missing column ", w));
    }
  }
  return columns;
}

class RowReader {
 public:
  RowReader(const CsvRow& row, const std::map<std::string, size_t>& columns)
      : row_(row), columns_(columns) {}
  std::string Get(const std::string& name) const {
    size_t i = columns_.at(absl::AsciiStrToLower(name));
    return i < row_.size() ? std::string(absl::StripAsciiWhitespace(row_[i]))
                           : std::string();
  }

 private:
  const CsvRow& row_;
  const std::map<std::string, size_t>& columns_;
};

absl::StatusOr<bool> ParseBool(absl::string_view text, absl::string_view where) {
  std::string lower = absl::AsciiStrToLower(std::string(text));
  if (lower == "true") return true;
  if (lower == "false") return false;
  return absl::InvalidArgumentError(
      absl::StrCat(where, ": expected true or false, got \"", text, "\""));
}

absl::Status CheckMeta(const FlowMeta& m, absl::string_view where) {
  if (m.flow_id.empty()) {
    return absl::InvalidArgumentError(absl::StrCat(where, ": empty F_id"));
  }
  if (m.pd && m.purpose.empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat(where, ": personal data flow without a purpose"));
  }
  return absl::OkStatus();
}

absl::Status CheckRecord(const DataRecord& r, absl::string_view where) {
  if (r.d_id.empty() || r.flow_id.empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat(where, ": empty D_id or F_id"));
  }
  if (r.consent.empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat(where, ": record ", r.d_id, " has no consent"));
  }
  return absl::OkStatus();
}

std::vector<std::string> SplitConsent(absl::string_view text) {
  std::vector<std::string> out;
  for (absl::string_view part :
       absl::StrSplit(absl::string_view(text.data(), text.size()), ';')) {
    part = absl::StripAsciiWhitespace(part);
    if (!part.empty()) out.emplace_back(part);
  }
  return out;
}

absl::StatusOr<nlohmann::json> ParseArray(absl::string_view text,
                                          absl::string_view what) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_array()) {
    return absl::InvalidArgumentError(
        absl::StrCat(what, ": expected a JSON array"));
  }
  return doc;
}

template <typename T>
absl::StatusOr<T> Field(const nlohmann::json& obj, const char* key,
                        absl::string_view where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    return absl::InvalidArgumentError(
        absl::StrCat(where, ": missing \"", key, "\""));
  }
  try {
    return it->get<T>();
  } catch (const nlohmann::json::exception&) {
    return absl::InvalidArgumentError(
        absl::StrCat(where, ": wrong type for \"", key, "\""));
  }
}

#define PADFD_ASSIGN(lhs, expr)            \
  do {                                     \
    auto padfd_value = (expr);             \
    if (!padfd_value.ok()) return padfd_value.status(); \
    lhs = *std::move(padfd_value);         \
  } while (0)

}  // namespace

absl::StatusOr<std::vector<FlowMeta>> ParseFlowMetaCsv(absl::string_view text) {
  auto rows = ParseCsv(text);
  if (!rows.ok()) return rows.status();
  auto columns =
      Header(*rows, {"F_id", "Label", "Purpose", "PD", "Data_type"}, "metadata");
  if (!columns.ok()) return columns.status();
  std::vector<FlowMeta> out;
  for (size_t i = 1; i < rows->size(); ++i) {
    RowReader r((*rows)[i], *columns);
    std::string where = absl::StrCat("metadata row ", i + 1);
    FlowMeta m;
    m.flow_id = FlowId(r.Get("F_id"));
    m.label = r.Get("Label");
    m.purpose = r.Get("Purpose");
    PADFD_ASSIGN(m.pd, ParseBool(r.Get("PD"), where));
    m.data_type = r.Get("Data_type");
    if (auto s = CheckMeta(m, where); !s.ok()) return s;
    out.push_back(std::move(m));
  }
  return out;
}

absl::StatusOr<std::vector<FlowMeta>> ParseFlowMetaJson(absl::string_view text) {
  auto doc = ParseArray(text, "metadata");
  if (!doc.ok()) return doc.status();
  std::vector<FlowMeta> out;
  for (size_t i = 0; i < doc->size(); ++i) {
    const nlohmann::json& obj = (*doc)[i];
    std::string where = absl::StrCat("metadata entry ", i);
    if (!obj.is_object()) {
      return absl::InvalidArgumentError(absl::StrCat(where, ": not an object"));
    }
    FlowMeta m;
    std::string id;
    PADFD_ASSIGN(id, Field<std::string>(obj, "f_id", where));
    m.flow_id = FlowId(id);
    if (obj.contains("label")) {
      PADFD_ASSIGN(m.label, Field<std::string>(obj, "label", where));
    }
    if (obj.contains("purpose")) {
      PADFD_ASSIGN(m.purpose, Field<std::string>(obj, "purpose", where));
    }
    PADFD_ASSIGN(m.pd, Field<bool>(obj, "pd", where));
    if (obj.contains("data_type")) {
      PADFD_ASSIGN(m.data_type, Field<std::string>(obj, "data_type", where));
    }
    if (auto s = CheckMeta(m, where); !s.ok()) return s;
    out.push_back(std::move(m));
  }
  return out;
}

absl::StatusOr<std::vector<DataRecord>> ParseRecordsCsv(absl::string_view text) {
  auto rows = ParseCsv(text);
  if (!rows.ok()) return rows.status();
  auto columns = Header(
      *rows, {"D_id", "F_id", "Dsub", "Consent", "Expiry", "Content"}, "records");
  if (!columns.ok()) return columns.status();
  std::vector<DataRecord> out;
  for (size_t i = 1; i < rows->size(); ++i) {
    RowReader r((*rows)[i], *columns);
    std::string where = absl::StrCat("records row ", i + 1);
    DataRecord d;
    d.d_id = r.Get("D_id");
    d.flow_id = FlowId(r.Get("F_id"));
    d.dsub = r.Get("Dsub");
    d.consent = SplitConsent(r.Get("Consent"));
    auto expiry = ParseDate(r.Get("Expiry"));
    if (!expiry.ok()) {
      return absl::InvalidArgumentError(
          absl::StrCat(where, ": ", expiry.status().message()));
    }
    d.expiry = *expiry;
    d.content = r.Get("Content");
    if (auto s = CheckRecord(d, where); !s.ok()) return s;
    out.push_back(std::move(d));
  }
  return out;
}

absl::StatusOr<std::vector<DataRecord>> ParseRecordsJson(absl::string_view text) {
  auto doc = ParseArray(text, "records");
  if (!doc.ok()) return doc.status();
  std::vector<DataRecord> out;
  for (size_t i = 0; i < doc->size(); ++i) {
    const nlohmann::json& obj = (*doc)[i];
    std::string where = absl::StrCat("records entry ", i);
    if (!obj.is_object()) {
      return absl::InvalidArgumentError(absl::StrCat(where, ": not an object"));
    }
    DataRecord d;
    std::string id, expiry;
    PADFD_ASSIGN(d.d_id, Field<std::string>(obj, "d_id", where));
    PADFD_ASSIGN(id, Field<std::string>(obj, "f_id", where));
    d.flow_id = FlowId(id);
    if (obj.contains("dsub")) {
      PADFD_ASSIGN(d.dsub, Field<std::string>(obj, "dsub", where));
    }
    PADFD_ASSIGN(d.consent,
                 Field<std::vector<std::string>>(obj, "consent", where));
    PADFD_ASSIGN(expiry, Field<std::string>(obj, "expiry", where));
    auto date = ParseDate(expiry);
    if (!date.ok()) {
      return absl::InvalidArgumentError(
          absl::StrCat(where, ": ", date.status().message()));
    }
    d.expiry = *date;
    if (obj.contains("content")) {
      PADFD_ASSIGN(d.content, Field<std::string>(obj, "content", where));
    }
    if (auto s = CheckRecord(d, where); !s.ok()) return s;
    out.push_back(std::move(d));
  }
  return out;
}

absl::StatusOr<PurposeCompatibility> ParseCompatibilityCsv(
    absl::string_view text) {
  auto rows = ParseCsv(text);
  if (!rows.ok()) return rows.status();
  auto columns = Header(*rows, {"Purpose", "Compatible"}, "compatibility");
  if (!columns.ok()) return columns.status();
  PurposeCompatibility out;
  for (size_t i = 1; i < rows->size(); ++i) {
    RowReader r((*rows)[i], *columns);
    std::string purpose = r.Get("Purpose");
    std::string compatible = r.Get("Compatible");
    if (purpose.empty() || compatible.empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("compatibility row ", i + 1, ": empty field"));
    }
    out.Allow(purpose, compatible);
  }
  return out;
}

}  // namespace padfd
