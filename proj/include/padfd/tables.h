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

// Readers for the simulation inputs: flow metadata, data records and
// purpose compatibility, as CSV or JSON.

#ifndef PADFD_TABLES_H_
#define PADFD_TABLES_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "padfd/simulate.h"

namespace padfd {

using CsvRow = std::vector<std::string>;

// RFC 4180 CSV: quoted fields may hold commas, doubled quotes and line
// breaks. Accepts LF or CRLF line ends; blank lines are skipped.
absl::StatusOr<std::vector<CsvRow>> ParseCsv(absl::string_view text);

// Header: F_id,Label,Purpose,PD,Data_type. PD is true/false (any case).
absl::StatusOr<std::vector<FlowMeta>> ParseFlowMetaCsv(absl::string_view text);
// Array of {"f_id","label","purpose","pd","data_type"} objects.
absl::StatusOr<std::vector<FlowMeta>> ParseFlowMetaJson(absl::string_view text);

// Header: D_id,F_id,Dsub,Consent,Expiry,Content. Consent lists purposes
// separated by ';'; Expiry is YYYY-MM-DD.
absl::StatusOr<std::vector<DataRecord>> ParseRecordsCsv(absl::string_view text);
// Array of {"d_id","f_id","dsub","consent":[...],"expiry","content"}.
absl::StatusOr<std::vector<DataRecord>> ParseRecordsJson(absl::string_view text);

// Header: Purpose,Compatible.
absl::StatusOr<PurposeCompatibility> ParseCompatibilityCsv(
    absl::string_view text);

}  // namespace padfd

#endif  // PADFD_TABLES_H_
