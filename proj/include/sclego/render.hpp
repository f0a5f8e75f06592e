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
// Output writers. Every writer is a pure string producer with pinned
// formatting, so a rerun over unchanged inputs is byte-identical.
//
// Display precision, by table:
//   collateral comparison  PSD %.2f, REI %.4f, real return (pct) %.2f,
//                          J-Score trimmed to <= 2 decimals
//   risk report            subtotals and totals %.4f, holder shares as
//                          percentages %.4f, fractions in the archetype
//                          table as percentages %.2f
//   incident histogram     shares as percentages %.2f
//   trajectories           %.12g (shortest round-trippable within 12
//                          significant digits)
// JSON outputs carry raw doubles; the fixed-precision forms above are for
// the csv and md renderings.

#ifndef SCLEGO_RENDER_HPP
#define SCLEGO_RENDER_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sclego/collateral.hpp"
#include "sclego/config.hpp"
#include "sclego/core.hpp"
#include "sclego/downstream.hpp"
#include "sclego/errors.hpp"
#include "sclego/format.hpp"
#include "sclego/io.hpp"
#include "sclego/pegsim.hpp"
#include "sclego/report.hpp"

namespace sclego {

namespace detail {

inline std::string bold(const std::string& s) { return "**" + s + "**"; }

inline void append_md_row(std::string& out,
                          const std::vector<std::string>& cells) {
  out += "|";
  for (const auto& cell : cells) {
    out += " ";
    out += cell;
    out += " |";
  }
  out += "\n";
}

inline void append_md_rule(std::string& out, std::size_t columns) {
  out += "|";
  for (std::size_t i = 0; i < columns; ++i) out += " --- |";
  out += "\n";
}

inline void append_notes_md(std::string& out,
                            const std::vector<std::string>& notes,
                            const std::vector<std::string>& warnings) {
  if (notes.empty() && warnings.empty()) return;
  out += "\n## Notes\n\n";
  for (const auto& n : notes) out += "- " + n + "\n";
  for (const auto& w : warnings) out += "- Warning: " + w + "\n";
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Collateral comparison
// ---------------------------------------------------------------------------

inline std::string write_comparison_json(const ComparisonTable& table) {
  ordered_json j;
  ordered_json rows = ordered_json::array();
  for (const auto& row : table.rows) {
    ordered_json r;
    r["asset"] = row.asset;
    r["psd"] = {{"value", row.psd.value}, {"best", row.psd.best}};
    r["rei"] = {{"value", row.rei.value}, {"best", row.rei.best}};
    r["real_return_pct"] = {{"value", row.real_return.value * 100.0},
                            {"best", row.real_return.best}};
    r["j_score"] = {{"value", row.j_score.value}, {"best", row.j_score.best}};
    rows.push_back(r);
  }
  j["rows"] = rows;
  j["best_mark_tolerance"] = table.best_mark_tolerance;
  j["warnings"] = table.warnings;
  return j.dump(2) + "\n";
}

inline std::string write_comparison_csv(const ComparisonTable& table) {
  std::string out = "asset,psd,rei,real_return_pct,j_score,best\n";
  for (const auto& row : table.rows) {
    std::string best;
    auto mark = [&best](bool flag, const char* name) {
      if (!flag) return;
      if (!best.empty()) best += ";";
      best += name;
    };
    mark(row.psd.best, "psd");
    mark(row.rei.best, "rei");
    mark(row.real_return.best, "real_return_pct");
    mark(row.j_score.best, "j_score");
    out += csv_escape(row.asset) + "," + format_fixed(row.psd.value, 2) + "," +
           format_fixed(row.rei.value, 4) + "," +
           format_fixed(row.real_return.value * 100.0, 2) + "," +
           format_trimmed(row.j_score.value, 2) + "," + best + "\n";
  }
  return out;
}

inline std::string write_comparison_md(const ComparisonTable& table) {
  std::string out = "# Collateral comparison\n\n";
  detail::append_md_row(out,
                        {"Asset", "PSD", "REI", "Real return (%)", "J-Score"});
  detail::append_md_rule(out, 5);
  for (const auto& row : table.rows) {
    auto cell = [](const ComparisonCell& c, std::string text) {
      return c.best ? detail::bold(text) : text;
    };
    detail::append_md_row(
        out, {row.asset, cell(row.psd, format_fixed(row.psd.value, 2)),
              cell(row.rei, format_fixed(row.rei.value, 4)),
              cell(row.real_return,
                   format_fixed(row.real_return.value * 100.0, 2)),
              cell(row.j_score, format_trimmed(row.j_score.value, 2))});
  }
  detail::append_notes_md(out, {}, table.warnings);
  return out;
}

// ---------------------------------------------------------------------------
// Risk report
// ---------------------------------------------------------------------------

// Fixed footer lines; the first records the totalling convention used in
// every output of this tool.
inline std::vector<std::string> report_notes() {
  return {
      "Totals are the sum of the three category subtotals; externally "
      "reported totals, where present, are carried unmodified in the JSON "
      "output only.",
      "Bundled datasets are regression fixtures calibrated to reproduce "
      "published summary figures; they are not independent market "
      "measurements."};
}

inline std::string archetype_label(ArchetypeKind kind) {
  switch (kind) {
    case ArchetypeKind::DefiCentric: return "DeFi-centric";
    case ArchetypeKind::ExchangeCentric: return "Exchange-centric";
    case ArchetypeKind::WhaleDominated: return "Whale-dominated";
    case ArchetypeKind::AssetMgmtCentric: return "Asset-management-centric";
    case ArchetypeKind::InfraCentric: return "Infrastructure-centric";
    case ArchetypeKind::Mixed: return "Mixed";
  }
  return "";
}

inline std::string write_report_json(const RiskReport& report) {
  ordered_json j;
  j["archetype_threshold"] = report.archetype_threshold;
  ordered_json entries = ordered_json::array();
  for (const auto& entry : report.entries) {
    ordered_json e;
    e["symbol"] = entry.upstream.symbol;
    ordered_json up;
    ordered_json per_object;
    for (ImpactName name : kImpactNames) {
      per_object[std::string(token_of(name))] =
          entry.upstream.per_object.at(name);
    }
    up["per_object"] = per_object;
    ordered_json per_category;
    for (ImpactCategory category :
         {ImpactCategory::PriceFluctuation, ImpactCategory::SmartContractIssue,
          ImpactCategory::PeripheralFactor}) {
      per_category[std::string(token_of(category))] =
          entry.upstream.per_category.at(category);
    }
    up["per_category"] = per_category;
    up["total"] = entry.upstream.total;
    e["upstream"] = up;
    if (entry.reported_total) e["reported_total"] = *entry.reported_total;
    else e["reported_total"] = nullptr;
    if (entry.downstream) {
      ordered_json down;
      ordered_json shares;
      for (HolderCategory category : kHolderCategories) {
        shares[std::string(token_of(category))] =
            entry.downstream->share(category) * 100.0;
      }
      down["shares_pct"] = shares;
      down["coverage"] = entry.downstream->coverage;
      e["downstream"] = down;
    } else {
      e["downstream"] = nullptr;
    }
    if (entry.archetype) {
      e["archetype"] = {
          {"kind", std::string(token_of(entry.archetype->kind))},
          {"dominant_share", entry.archetype->dominant_share}};
    } else {
      e["archetype"] = nullptr;
    }
    if (entry.peripheral_share) e["peripheral_share"] = *entry.peripheral_share;
    else e["peripheral_share"] = nullptr;
    entries.push_back(e);
  }
  j["entries"] = entries;
  j["notes"] = report_notes();
  j["warnings"] = report.warnings;
  return j.dump(2) + "\n";
}

inline std::string write_report_csv(const RiskReport& report) {
  std::string out =
      "symbol,price_fluctuation,smart_contract_issue,peripheral_factor,total,"
      "reported_total,exchange_pct,asset_management_pct,defi_protocol_pct,"
      "blockchain_infrastructure_pct,whale_retail_pct,unlabeled_pct,coverage,"
      "archetype,dominant_share,peripheral_share\n";
  for (const auto& entry : report.entries) {
    out += csv_escape(entry.upstream.symbol);
    for (ImpactCategory category :
         {ImpactCategory::PriceFluctuation, ImpactCategory::SmartContractIssue,
          ImpactCategory::PeripheralFactor}) {
      out += "," + format_compact(entry.upstream.per_category.at(category));
    }
    out += "," + format_compact(entry.upstream.total);
    out += ",";
    if (entry.reported_total) out += format_compact(*entry.reported_total);
    for (HolderCategory category : kHolderCategories) {
      out += ",";
      if (entry.downstream) {
        out += format_compact(entry.downstream->share(category) * 100.0);
      }
    }
    out += ",";
    if (entry.downstream) out += format_compact(entry.downstream->coverage);
    out += ",";
    if (entry.archetype) out += token_of(entry.archetype->kind);
    out += ",";
    if (entry.archetype) {
      out += format_compact(entry.archetype->dominant_share);
    }
    out += ",";
    if (entry.peripheral_share) out += format_compact(*entry.peripheral_share);
    out += "\n";
  }
  return out;
}

inline std::string write_report_md(const RiskReport& report) {
  std::string out = "# Stablecoin risk report\n\n";
  out += "## Upstream and downstream scores\n\n";
  detail::append_md_row(
      out, {"Symbol", "Price fluctuation", "Smart contract issue",
            "Peripheral factor", "Total", "Exchange (%)",
            "Asset management (%)", "DeFi protocol (%)", "Infrastructure (%)",
            "Whale/retail (%)"});
  detail::append_md_rule(out, 10);

  double min_total = std::numeric_limits<double>::infinity();
  for (const auto& entry : report.entries) {
    min_total = std::min(min_total, entry.upstream.total);
  }

  constexpr HolderCategory kShareColumns[] = {
      HolderCategory::Exchange, HolderCategory::AssetManagement,
      HolderCategory::DefiProtocol, HolderCategory::BlockchainInfrastructure,
      HolderCategory::WhaleRetail};

  for (const auto& entry : report.entries) {
    std::vector<std::string> cells;
    cells.push_back(entry.upstream.symbol);
    for (ImpactCategory category :
         {ImpactCategory::PriceFluctuation, ImpactCategory::SmartContractIssue,
          ImpactCategory::PeripheralFactor}) {
      cells.push_back(format_fixed(entry.upstream.per_category.at(category), 4));
    }
    std::string total = format_fixed(entry.upstream.total, 4);
    if (entry.upstream.total <= min_total) total = detail::bold(total);
    cells.push_back(total);
    if (entry.downstream) {
      // The dominant labeled share is highlighted for classified rows.
      double max_share = 0.0;
      for (HolderCategory category : kShareColumns) {
        max_share = std::max(max_share, entry.downstream->share(category));
      }
      const bool highlight =
          entry.archetype && entry.archetype->kind != ArchetypeKind::Mixed;
      for (HolderCategory category : kShareColumns) {
        const double share = entry.downstream->share(category);
        std::string text = format_fixed(share * 100.0, 4);
        if (highlight && share >= max_share) text = detail::bold(text);
        cells.push_back(text);
      }
    } else {
      for (std::size_t i = 0; i < 5; ++i) cells.push_back("-");
    }
    detail::append_md_row(out, cells);
  }

  out += "\n## Holder archetypes\n\n";
  detail::append_md_row(out, {"Symbol", "Archetype", "Dominant share (%)",
                              "Peripheral share (%)", "Coverage (%)"});
  detail::append_md_rule(out, 5);
  for (const auto& entry : report.entries) {
    std::vector<std::string> cells;
    cells.push_back(entry.upstream.symbol);
    if (entry.archetype) {
      cells.push_back(archetype_label(entry.archetype->kind));
      cells.push_back(format_fixed(entry.archetype->dominant_share * 100.0, 2));
    } else {
      cells.push_back("-");
      cells.push_back("-");
    }
    if (entry.peripheral_share) {
      cells.push_back(format_fixed(*entry.peripheral_share * 100.0, 2));
    } else {
      cells.push_back("-");
    }
    if (entry.downstream) {
      cells.push_back(format_fixed(entry.downstream->coverage * 100.0, 2));
    } else {
      cells.push_back("-");
    }
    detail::append_md_row(out, cells);
  }

  detail::append_notes_md(out, report_notes(), report.warnings);
  return out;
}

// ---------------------------------------------------------------------------
// Incident histogram
// ---------------------------------------------------------------------------

struct HistogramSlice {
  ImpactName cause = ImpactName::MarketVolatility;
  int count = 0;
  double share_pct = 0.0;
};

// Slices ordered by count descending; ties keep the declaration order of
// the impact objects.
inline std::vector<HistogramSlice> histogram_slices(
    const CauseHistogram& histogram) {
  std::vector<HistogramSlice> slices;
  if (histogram.incident_count == 0) return slices;  // empty histogram is legal
  for (ImpactName name : kImpactNames) {
    auto it = histogram.counts.find(name);
    if (it == histogram.counts.end() || it->second == 0) continue;
    slices.push_back(HistogramSlice{
        name, it->second,
        100.0 * static_cast<double>(it->second) /
            static_cast<double>(histogram.incident_count)});
  }
  std::stable_sort(slices.begin(), slices.end(),
                   [](const HistogramSlice& a, const HistogramSlice& b) {
                     return a.count > b.count;
                   });
  return slices;
}

inline std::string write_histogram_json(const CauseHistogram& histogram) {
  ordered_json j;
  j["incidents"] = histogram.incident_count;
  ordered_json causes = ordered_json::array();
  for (const auto& slice : histogram_slices(histogram)) {
    causes.push_back({{"cause", std::string(token_of(slice.cause))},
                      {"count", slice.count},
                      {"share_pct", slice.share_pct}});
  }
  j["causes"] = causes;
  return j.dump(2) + "\n";
}

inline std::string write_histogram_csv(const CauseHistogram& histogram) {
  std::string out = "cause,count,share_pct\n";
  for (const auto& slice : histogram_slices(histogram)) {
    out += std::string(token_of(slice.cause)) + "," +
           std::to_string(slice.count) + "," +
           format_fixed(slice.share_pct, 2) + "\n";
  }
  return out;
}

inline std::string write_histogram_md(const CauseHistogram& histogram) {
  std::string out = "# Incident root causes\n\n";
  out += std::to_string(histogram.incident_count) +
         " incidents; multi-cause incidents count once per cause.\n\n";
  detail::append_md_row(out, {"Root cause", "Count", "Share (%)"});
  detail::append_md_rule(out, 3);
  for (const auto& slice : histogram_slices(histogram)) {
    detail::append_md_row(out, {std::string(display_name(slice.cause)),
                                std::to_string(slice.count),
                                format_fixed(slice.share_pct, 2)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Simulator outputs
// ---------------------------------------------------------------------------

inline std::string write_trajectory_csv(const Trajectory& trajectory) {
  std::string out = "t,price,supply,collateral_value,debt,hedge_short,halted\n";
  for (const auto& p : trajectory.points) {
    out += format_compact(p.t) + "," + format_compact(p.price) + "," +
           format_compact(p.supply) + "," +
           format_compact(p.collateral_value) + "," + format_compact(p.debt) +
           "," + format_compact(p.hedge_short) + "," +
           (p.halted ? "1" : "0") + "\n";
  }
  return out;
}

inline std::string write_supply_events_csv(const Trajectory& trajectory) {
  std::string out = "step,kind,amount\n";
  for (const auto& e : trajectory.supply_events) {
    out += std::to_string(e.step) + "," +
           (e.kind == SupplyEventKind::Mint ? "mint" : "burn") + "," +
           format_compact(e.amount) + "\n";
  }
  return out;
}

// Quantile over a sample, linear interpolation between order statistics.
inline double quantile(std::vector<double> sample, double q) {
  if (sample.empty()) throw InputError("quantile: empty sample");
  if (!(q >= 0.0) || q > 1.0) throw InputError("quantile: q must be in [0,1]");
  std::sort(sample.begin(), sample.end());
  const double pos = q * static_cast<double>(sample.size() - 1);
  const auto lo = static_cast<std::size_t>(pos);
  const auto hi = std::min(lo + 1, sample.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sample[lo] * (1.0 - frac) + sample[hi] * frac;
}

struct SimSummary {
  std::string scenario;
  std::size_t runs = 0;
  double peg_target = 1.0;
  double dev_min = 0.0;
  double dev_p25 = 0.0;
  double dev_median = 0.0;
  double dev_p75 = 0.0;
  double dev_max = 0.0;
  double mean_terminal_price = 0.0;
  std::size_t halted_runs = 0;
};

inline SimSummary summarize_runs(const std::string& scenario,
                                 double peg_target,
                                 const std::vector<Trajectory>& runs) {
  if (runs.empty()) throw InputError("summarize_runs: no runs");
  SimSummary summary;
  summary.scenario = scenario;
  summary.runs = runs.size();
  summary.peg_target = peg_target;
  std::vector<double> deviations;
  double price_sum = 0.0;
  for (const auto& run : runs) {
    const double terminal = run.points.back().price;
    deviations.push_back(std::abs(terminal - peg_target));
    price_sum += terminal;
    if (run.halt_step) ++summary.halted_runs;
  }
  summary.dev_min = quantile(deviations, 0.0);
  summary.dev_p25 = quantile(deviations, 0.25);
  summary.dev_median = quantile(deviations, 0.5);
  summary.dev_p75 = quantile(deviations, 0.75);
  summary.dev_max = quantile(deviations, 1.0);
  summary.mean_terminal_price = price_sum / static_cast<double>(runs.size());
  return summary;
}

inline std::string write_summary_json(const SimSummary& summary) {
  ordered_json j;
  j["scenario"] = summary.scenario;
  j["runs"] = summary.runs;
  j["peg_target"] = summary.peg_target;
  j["terminal_abs_deviation"] = {
      {"min", summary.dev_min},   {"p25", summary.dev_p25},
      {"median", summary.dev_median}, {"p75", summary.dev_p75},
      {"max", summary.dev_max}};
  j["mean_terminal_price"] = summary.mean_terminal_price;
  j["halted_runs"] = summary.halted_runs;
  return j.dump(2) + "\n";
}

}  // namespace sclego

#endif  // SCLEGO_RENDER_HPP
