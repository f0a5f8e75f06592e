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
// Scores two hand-written stablecoins and prints the markdown risk report.

#include <cstdio>
#include <map>
#include <vector>

#include "sclego/sclego.hpp"

int main() {
  using namespace sclego;

  AssessmentRecord risky;
  risky.symbol = "TOY";
  risky.as_of = parse_date("2025-03-24");
  for (ImpactName name : kImpactNames) risky.metrics[name] = 0.9;
  risky.evidence[ImpactName::CodeVulnerability] = "no audit on record";

  AssessmentRecord safe;
  safe.symbol = "SAFE";
  safe.as_of = risky.as_of;
  for (ImpactName name : kImpactNames) safe.metrics[name] = 0.1;

  HolderSnapshot snap;
  snap.symbol = "TOY";
  snap.taken_at = risky.as_of;
  snap.total_supply = 1000.0;
  snap.holders = {
      {"0xaaa", 700.0, HolderCategory::DefiProtocol},
      {"0xbbb", 150.0, HolderCategory::Exchange},
      {"0xccc", 100.0, HolderCategory::WhaleRetail},
  };

  const std::vector<AssessmentRecord> assessments = {risky, safe};
  const std::map<std::string, HolderSnapshot> snapshots = {{"TOY", snap}};
  const auto report =
      build_risk_report(assessments, snapshots, default_impact_objects(),
                        WeightScheme{});
  std::fputs(write_report_md(report).c_str(), stdout);
  return 0;
}
