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

#ifndef PADFD_SIMULATE_H_
#define PADFD_SIMULATE_H_

#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "padfd/graph.h"

namespace padfd {

using Date = std::chrono::year_month_day;

// Strict ISO calendar date "YYYY-MM-DD".
absl::StatusOr<Date> ParseDate(absl::string_view text);
std::string FormatDate(const Date& date);

// Design-time information attached to one B-DFD flow.
struct FlowMeta {
  FlowId flow_id;
  std::string label;
  std::string purpose;
  bool pd = false;  // carries personal data
  std::string data_type;
};

// A run-time data value travelling on a flow, with its subject's policy.
struct DataRecord {
  std::string d_id;
  FlowId flow_id;
  std::string dsub;
  std::vector<std::string> consent;
  Date expiry;
  std::string content;
};

struct PolicySnapshot {
  std::vector<std::string> consent;
  Date expiry;
  std::string purpose;

  friend bool operator==(const PolicySnapshot&, const PolicySnapshot&) =
      default;
};

// What a limit reports to its log: the data id, the policy it checked and
// the violation flag v.
struct LogEntry {
  std::string d_id;
  FlowId flow_id;
  PolicySnapshot policy;
  bool v = false;
  Date clock;
  std::optional<NodeId> log_db;
};

// Decides whether a flow's purpose is covered by a consent set. A purpose
// is compatible when it equals a consented purpose (ASCII case-insensitive)
// or when the pair was declared compatible with Allow().
class PurposeCompatibility {
 public:
  void Allow(absl::string_view purpose, absl::string_view consented);
  bool Compatible(absl::string_view purpose,
                  const std::vector<std::string>& consent) const;

 private:
  std::set<std::pair<std::string, std::string>> allowed_;
};

struct LimitDecision {
  bool forwarded = false;
  LogEntry entry;
};

// The limit's check: personal data passes only when the purpose is
// compatible with the consent and the record has not expired
// (clock <= expiry). Non-personal data always passes. Either way one log
// entry is produced; v is set exactly when personal data was blocked.
absl::StatusOr<LimitDecision> EvaluateLimit(
    const FlowMeta& meta, const DataRecord& record, const Date& clock,
    const PurposeCompatibility& compatibility = {});

// Baseline B-DFD: no checks, everything is forwarded.
bool SimulateBdfd(const FlowMeta& meta, const DataRecord& record);

struct StoredRecord {
  DataRecord record;
  Date stored_at;
};

// Contents of data stores and their policy stores. Every d_id held by a db
// has a snapshot under the same d_id in the db's policy_db.
struct StoreState {
  std::map<NodeId, std::map<std::string, StoredRecord>> data;
  std::map<NodeId, std::map<std::string, PolicySnapshot>> policies;
  std::map<NodeId, NodeId> policy_store_of;  // db -> policy_db
  std::map<NodeId, NodeId> clean_of;         // db -> clean

  // d_ids currently held by any data store.
  std::set<std::string> StoredIds() const;
};

struct DeletionEvent {
  NodeId db;
  std::string d_id;
  std::optional<NodeId> clean;
  Date clock;
};

struct CleanResult {
  StoreState state;
  std::vector<DeletionEvent> events;
};

// Retention: removes every stored record whose policy expired strictly
// before `clock`, together with its policy snapshot.
CleanResult RunClean(StoreState state, const Date& clock);

struct SimulationOptions {
  // Forwarded records re-enter every outgoing flow of the process they
  // reach, carrying the same policy. Each (d_id, flow) pair is evaluated
  // at most once per run.
  bool multi_hop = false;
  PurposeCompatibility compatibility;
};

// One gadget evaluation.
struct Evaluation {
  std::string d_id;
  FlowId flow_id;
  bool forwarded_bdfd = true;
  bool forwarded_pa = false;
  bool v = false;
  int hop = 0;  // 0 for the record's own flow
};

struct SkippedHop {
  std::string d_id;
  FlowId flow_id;
  std::string reason;
};

struct SimulationReport {
  Date clock;
  // First-hop evaluation of each input record, in input order.
  std::vector<Evaluation> records;
  // Every evaluation, including multi-hop ones.
  std::vector<Evaluation> evaluations;
  std::vector<LogEntry> log;
  std::vector<SkippedHop> skipped;
  StoreState store;

  size_t ViolationCount() const;
};

// Runs every record through the gadget guarding its flow in a PA-DFD
// produced by Transform(). Errors: FailedPrecondition for a non-PA diagram,
// NotFound for records or metadata naming unknown flows, InvalidArgument
// for duplicate metadata or a D_id repeated on the same flow. A D_id may
// travel several flows, so a delete record can name a stored value.
absl::StatusOr<SimulationReport> RunSimulation(
    const Diagram& pa, const std::vector<FlowMeta>& metas,
    const std::vector<DataRecord>& records, const Date& clock,
    const SimulationOptions& options = {});

std::string ReportJson(const SimulationReport& report);
std::string ReportText(const SimulationReport& report);

}  // namespace padfd

#endif  // PADFD_SIMULATE_H_
