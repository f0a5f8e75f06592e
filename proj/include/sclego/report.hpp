// Copyright 2026 The sclego Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Risk report assembly: joins upstream scores with downstream composition
// per symbol.

#ifndef SCLEGO_REPORT_HPP
#define SCLEGO_REPORT_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sclego/downstream.hpp"
#include "sclego/upstream.hpp"

namespace sclego {

struct RiskEntry {
  UpstreamScore upstream;
  std::optional<double> reported_total;  // carried through for display only
  std::optional<TokenShareVector> downstream;
  std::optional<Archetype> archetype;
  std::optional<double> peripheral_share;  // empty = zero-total (no risk)
};

struct RiskReport {
  std::vector<RiskEntry> entries;  // assessment input order
  double archetype_threshold = 0.5;
  std::vector<std::string> warnings;
};

// Scores every assessment and attaches the matching snapshot's share vector
// and archetype. A missing snapshot downgrades to a warning with the DN
// side omitted; snapshots without an assessment are reported unused.
inline RiskReport build_risk_report(
    std::span<const AssessmentRecord> assessments,
    const std::map<std::string, HolderSnapshot>& snapshots,
    std::span<const ImpactObject> objects, const WeightScheme& scheme,
    double archetype_threshold = 0.5) {
  RiskReport report;
  report.archetype_threshold = archetype_threshold;
  std::map<std::string, bool> snapshot_used;
  for (const auto& [symbol, snap] : snapshots) snapshot_used[symbol] = false;

  for (const auto& record : assessments) {
    RiskEntry entry;
    entry.upstream = score_upstream(record, objects, scheme);
    entry.reported_total = record.reported_total;
    entry.peripheral_share = peripheral_share(entry.upstream);
    const auto it = snapshots.find(record.symbol);
    if (it == snapshots.end()) {
      report.warnings.push_back("no holder snapshot for " + record.symbol +
                                "; downstream composition omitted");
    } else {
      snapshot_used[record.symbol] = true;
      entry.downstream = token_shares(it->second, &report.warnings);
      entry.archetype =
          classify_archetype(*entry.downstream, archetype_threshold);
    }
    report.entries.push_back(std::move(entry));
  }
  for (const auto& [symbol, used] : snapshot_used) {
    if (!used) {
      report.warnings.push_back("snapshot for " + symbol +
                                " has no assessment record; ignored");
    }
  }
  return report;
}

}  // namespace sclego

#endif  // SCLEGO_REPORT_HPP
