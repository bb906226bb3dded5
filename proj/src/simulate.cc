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

#include "padfd/simulate.h"

#include <algorithm>
#include <charconv>
#include <deque>

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "json.hpp"

namespace padfd {

absl::StatusOr<Date> ParseDate(absl::string_view text) {
  auto bad = [&] {
    return absl::InvalidArgumentError(
        absl::StrCat("invalid date \"", text, "\" (expected YYYY-MM-DD)"));
  };
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return bad();
  auto number = [&](size_t pos, size_t len, int& out) {
    for (size_t i = pos; i < pos + len; ++i) {
      if (!absl::ascii_isdigit(text[i])) return false;
    }
    std::from_chars(text.data() + pos, text.data() + pos + len, out);
    return true;
  };
  int y = 0, m = 0, d = 0;
  if (!number(0, 4, y) || !number(5, 2, m) || !number(8, 2, d)) return bad();
  Date date{std::chrono::year(y), std::chrono::month(m), std::chrono::day(d)};
  if (!date.ok()) return bad();
  return date;
}

std::string FormatDate(const Date& date) {
  return absl::StrFormat("%04d-%02u-%02u", static_cast<int>(date.year()),
                         static_cast<unsigned>(date.month()),
                         static_cast<unsigned>(date.day()));
}

void PurposeCompatibility::Allow(absl::string_view purpose,
                                 absl::string_view consented) {
  allowed_.emplace(absl::AsciiStrToLower(std::string(purpose)),
                   absl::AsciiStrToLower(std::string(consented)));
}

bool PurposeCompatibility::Compatible(
    absl::string_view purpose, const std::vector<std::string>& consent) const {
  std::string want = absl::AsciiStrToLower(std::string(purpose));
  for (const std::string& c : consent) {
    std::string have = absl::AsciiStrToLower(c);
    if (have == want || allowed_.contains({want, have})) return true;
  }
  return false;
}

absl::StatusOr<LimitDecision> EvaluateLimit(
    const FlowMeta& meta, const DataRecord& record, const Date& clock,
    const PurposeCompatibility& compatibility) {
  if (meta.flow_id != record.flow_id) {
    return absl::InvalidArgumentError(absl::StrCat(
        "record ", record.d_id, " travels on ", record.flow_id.value(),
        " but the metadata describes ", meta.flow_id.value()));
  }
  LimitDecision out;
  out.forwarded = !meta.pd ||
                  (compatibility.Compatible(meta.purpose, record.consent) &&
                   clock <= record.expiry);
  out.entry.d_id = record.d_id;
  out.entry.flow_id = record.flow_id;
  out.entry.policy = {record.consent, record.expiry, meta.purpose};
  out.entry.v = meta.pd && !out.forwarded;
  out.entry.clock = clock;
  return out;
}

bool SimulateBdfd(const FlowMeta&, const DataRecord&) { return true; }

std::set<std::string> StoreState::StoredIds() const {
  std::set<std::string> out;
  for (const auto& [db, records] : data) {
    for (const auto& [id, r] : records) out.insert(id);
  }
  return out;
}

CleanResult RunClean(StoreState state, const Date& clock) {
  CleanResult out;
  for (auto& [db, records] : state.data) {
    auto pdb = state.policy_store_of.find(db);
    std::map<std::string, PolicySnapshot>* policies =
        pdb == state.policy_store_of.end() ? nullptr
                                           : &state.policies[pdb->second];
    std::optional<NodeId> clean;
    if (auto c = state.clean_of.find(db); c != state.clean_of.end()) {
      clean = c->second;
    }
    for (auto it = records.begin(); it != records.end();) {
      Date expiry = it->second.record.expiry;
      if (policies != nullptr) {
        if (auto p = policies->find(it->first); p != policies->end()) {
          expiry = p->second.expiry;
        }
      }
      if (expiry < clock) {
        out.events.push_back({db, it->first, clean, clock});
        if (policies != nullptr) policies->erase(it->first);
        it = records.erase(it);
      } else {
        ++it;
      }
    }
  }
  out.state = std::move(state);
  return out;
}

size_t SimulationReport::ViolationCount() const {
  return std::count_if(log.begin(), log.end(),
                       [](const LogEntry& e) { return e.v; });
}

namespace {

// The gadget guarding one original flow.
struct Gadget {
  FlowType kind;
  NodeId limit;
  NodeId target;
  std::optional<NodeId> log_db;
  std::optional<NodeId> policy_db;  // for store/delete gadgets
  std::optional<NodeId> fed_by;     // process feeding the limit (prolim)
};

bool IsGuarded(std::optional<FlowType> t) {
  return t == FlowType::kLimpro || t == FlowType::kLimext ||
         t == FlowType::kLimdb || t == FlowType::kLimdbDel;
}

std::map<FlowId, Gadget> IndexGadgets(const Diagram& d) {
  std::map<FlowId, Gadget> out;
  for (const auto& [id, f] : d.flows()) {
    if (!IsGuarded(f.type)) continue;
    Gadget g{*f.type, f.source, f.target, std::nullopt, std::nullopt,
             std::nullopt};
    for (const Flow* out_flow : d.FlowsFrom(f.source)) {
      if (out_flow->type != FlowType::kLimlog) continue;
      for (const Flow* logging : d.FlowsFrom(out_flow->target)) {
        if (logging->type == FlowType::kLogging) g.log_db = logging->target;
      }
    }
    for (const Flow* in : d.FlowsInto(f.source)) {
      if (in->type == FlowType::kProlim) g.fed_by = in->source;
    }
    if (f.type == FlowType::kLimdb || f.type == FlowType::kLimdbDel) {
      g.policy_db = d.FindNode(f.target)->partner;
    }
    out.emplace(id, std::move(g));
  }
  return out;
}

}  // namespace

absl::StatusOr<SimulationReport> RunSimulation(
    const Diagram& pa, const std::vector<FlowMeta>& metas,
    const std::vector<DataRecord>& records, const Date& clock,
    const SimulationOptions& options) {
  if (pa.stage() != Stage::kPaDfd) {
    return absl::FailedPreconditionError(absl::StrCat(
        "simulation needs a pa-dfd, got ", StageName(pa.stage())));
  }
  std::map<FlowId, Gadget> gadgets = IndexGadgets(pa);
  std::map<FlowId, const FlowMeta*> meta_by_flow;
  for (const FlowMeta& m : metas) {
    if (!gadgets.contains(m.flow_id)) {
      return absl::NotFoundError(absl::StrCat(
          "flow metadata names ", m.flow_id.value(),
          ", which is not a guarded flow of the diagram"));
    }
    if (!meta_by_flow.emplace(m.flow_id, &m).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate metadata for flow ", m.flow_id.value()));
    }
  }
  // (d_id, flow) pairs already evaluated or scheduled as input.
  std::set<std::pair<std::string, FlowId>> evaluated;
  for (const DataRecord& r : records) {
    if (!meta_by_flow.contains(r.flow_id)) {
      return absl::NotFoundError(absl::StrCat("record ", r.d_id,
                                              " names unknown flow ",
                                              r.flow_id.value()));
    }
    if (!evaluated.emplace(r.d_id, r.flow_id).second) {
      return absl::InvalidArgumentError(absl::StrCat(
          "duplicate record ", r.d_id, " on flow ", r.flow_id.value()));
    }
  }

  SimulationReport report;
  report.clock = clock;
  for (const auto& [id, n] : pa.nodes()) {
    if (n.type != NodeType::kDb) continue;
    if (n.partner) report.store.policy_store_of[id] = *n.partner;
    for (const Flow* f : pa.FlowsInto(id)) {
      if (f->type == FlowType::kCledbDel) report.store.clean_of[id] = f->source;
    }
  }

  for (const DataRecord& input : records) {
    std::deque<std::pair<DataRecord, int>> queue{{input, 0}};
    while (!queue.empty()) {
      auto [rec, hop] = std::move(queue.front());
      queue.pop_front();
      const FlowMeta& meta = *meta_by_flow.at(rec.flow_id);
      const Gadget& gadget = gadgets.at(rec.flow_id);
      auto decision = EvaluateLimit(meta, rec, clock, options.compatibility);
      if (!decision.ok()) return decision.status();
      decision->entry.log_db = gadget.log_db;
      report.log.push_back(decision->entry);

      Evaluation e{rec.d_id, rec.flow_id, SimulateBdfd(meta, rec),
                   decision->forwarded, decision->entry.v, hop};
      report.evaluations.push_back(e);
      if (hop == 0) report.records.push_back(e);
      if (!decision->forwarded) continue;

      StoreState& store = report.store;
      if (gadget.kind == FlowType::kLimdb) {
        store.data[gadget.target][rec.d_id] = StoredRecord{rec, clock};
        if (gadget.policy_db) {
          store.policies[*gadget.policy_db][rec.d_id] = decision->entry.policy;
        }
      } else if (gadget.kind == FlowType::kLimdbDel) {
        store.data[gadget.target].erase(rec.d_id);
        if (gadget.policy_db) store.policies[*gadget.policy_db].erase(rec.d_id);
      } else if (gadget.kind == FlowType::kLimpro && options.multi_hop) {
        for (const auto& [next_id, next] : gadgets) {
          if (next.fed_by != gadget.target ||
              !evaluated.emplace(rec.d_id, next_id).second) {
            continue;
          }
          if (!meta_by_flow.contains(next_id)) {
            report.skipped.push_back(
                {rec.d_id, next_id, "no design-time metadata for flow"});
            continue;
          }
          DataRecord next_rec = rec;
          next_rec.flow_id = next_id;
          queue.emplace_back(std::move(next_rec), hop + 1);
        }
      }
    }
  }
  return report;
}

namespace {

nlohmann::json PolicyJson(const PolicySnapshot& p) {
  return {{"consent", p.consent},
          {"expiry", FormatDate(p.expiry)},
          {"purpose", p.purpose}};
}

nlohmann::json EvaluationJson(const Evaluation& e) {
  return {{"d_id", e.d_id},
          {"flow_id", e.flow_id.value()},
          {"forwarded_bdfd", e.forwarded_bdfd},
          {"forwarded_pa", e.forwarded_pa},
          {"v", e.v},
          {"hop", e.hop}};
}

}  // namespace

std::string ReportJson(const SimulationReport& report) {
  using nlohmann::json;
  json records = json::array();
  for (const Evaluation& e : report.records) records.push_back(EvaluationJson(e));
  json evaluations = json::array();
  for (const Evaluation& e : report.evaluations) {
    evaluations.push_back(EvaluationJson(e));
  }
  json log = json::array();
  for (const LogEntry& e : report.log) {
    json j = {{"d_id", e.d_id},
              {"flow_id", e.flow_id.value()},
              {"policy", PolicyJson(e.policy)},
              {"v", e.v},
              {"clock", FormatDate(e.clock)}};
    if (e.log_db) j["log_db"] = e.log_db->value();
    log.push_back(std::move(j));
  }
  json skipped = json::array();
  for (const SkippedHop& s : report.skipped) {
    skipped.push_back({{"d_id", s.d_id},
                       {"flow_id", s.flow_id.value()},
                       {"reason", s.reason}});
  }
  json stores = json::object();
  for (const auto& [db, held] : report.store.data) {
    json entries = json::object();
    for (const auto& [id, r] : held) {
      entries[id] = {{"flow_id", r.record.flow_id.value()},
                     {"dsub", r.record.dsub},
                     {"stored_at", FormatDate(r.stored_at)}};
    }
    stores[db.value()] = std::move(entries);
  }
  json policies = json::object();
  for (const auto& [pdb, held] : report.store.policies) {
    json entries = json::object();
    for (const auto& [id, p] : held) entries[id] = PolicyJson(p);
    policies[pdb.value()] = std::move(entries);
  }
  json doc = {{"clock", FormatDate(report.clock)},
              {"records", std::move(records)},
              {"evaluations", std::move(evaluations)},
              {"log", std::move(log)},
              {"skipped", std::move(skipped)},
              {"stores", std::move(stores)},
              {"policy_stores", std::move(policies)},
              {"violations", report.ViolationCount()}};
  return doc.dump(2) + "\n";
}

std::string ReportText(const SimulationReport& report) {
  std::string out = absl::StrFormat("%-8s %-8s %-10s %-10s %s\n", "D_id",
                                    "F_id", "Fwd B-DFD", "Fwd PA-DFD", "v");
  for (const Evaluation& e : report.evaluations) {
    std::string id = e.hop == 0 ? e.d_id : absl::StrCat(e.d_id, "+", e.hop);
    absl::StrAppendFormat(&out, "%-8s %-8s %-10s %-10s %s\n", id,
                          e.flow_id.value(), e.forwarded_bdfd ? "Yes" : "No",
                          e.forwarded_pa ? "Yes" : "No",
                          e.v ? "violation" : "-");
  }
  absl::StrAppend(&out, report.log.size(), " log entries, ",
                  report.ViolationCount(), " violations\n");
  for (const SkippedHop& s : report.skipped) {
    absl::StrAppend(&out, "skipped ", s.d_id, " on ", s.flow_id.value(), ": ",
                    s.reason, "\n");
  }
  return out;
}

}  // namespace padfd
