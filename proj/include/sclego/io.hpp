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
// Strict parsers and serializers for the tabular dataset formats: price
// series, holder snapshots, assessment records, incident records, the
// stablecoin reference list, and the dataset manifest. Parsers reject
// rather than coerce; errors carry line numbers.

#ifndef SCLEGO_IO_HPP
#define SCLEGO_IO_HPP

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sclego/collateral.hpp"
#include "sclego/core.hpp"
#include "sclego/dates.hpp"
#include "sclego/downstream.hpp"
#include "sclego/errors.hpp"
#include "sclego/format.hpp"
#include "sclego/upstream.hpp"

namespace sclego {

// ---------------------------------------------------------------------------
// Files
// ---------------------------------------------------------------------------

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

inline void write_file(const std::filesystem::path& path,
                       std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write file: " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw InputError("short write to file: " + path.string());
}

namespace detail {

// Consumes `#key=value` preamble lines. Returns the index of the first
// non-preamble line and fills the map; duplicate keys are rejected.
inline std::size_t read_preamble(const std::vector<std::string>& lines,
                                 const std::string& context,
                                 std::map<std::string, std::string>* out) {
  std::size_t i = 0;
  for (; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.empty() || line[0] != '#') break;
    const auto eq = line.find('=');
    if (eq == std::string::npos || eq == 1) {
      throw InputError(context + " line " + std::to_string(i + 1) +
                       ": malformed preamble, expected #key=value");
    }
    const std::string key = line.substr(1, eq - 1);
    if (!out->emplace(key, line.substr(eq + 1)).second) {
      throw InputError(context + " line " + std::to_string(i + 1) +
                       ": duplicate preamble key #" + key);
    }
  }
  return i;
}

inline void expect_header(const std::vector<std::string>& lines,
                          std::size_t index, std::string_view expected,
                          const std::string& context) {
  if (index >= lines.size() || lines[index] != expected) {
    throw InputError(context + " line " + std::to_string(index + 1) +
                     ": expected header '" + std::string(expected) + "'");
  }
}

inline std::string require_preamble(
    const std::map<std::string, std::string>& preamble, const std::string& key,
    const std::string& context) {
  const auto it = preamble.find(key);
  if (it == preamble.end()) {
    throw InputError(context + ": missing preamble line #" + key + "=...");
  }
  return it->second;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Price series CSV
//
//   #asset=USD
//   #source=free text            (optional)
//   date,close
//   2020-03-25,99.94
// ---------------------------------------------------------------------------

inline PriceSeries parse_price_csv(std::string_view bytes) {
  const std::string context = "price csv";
  const auto lines = split_lines(bytes);
  std::map<std::string, std::string> preamble;
  std::size_t i = detail::read_preamble(lines, context, &preamble);
  for (const auto& [key, value] : preamble) {
    if (key != "asset" && key != "source") {
      throw InputError(context + ": unknown preamble key #" + key);
    }
  }
  PriceSeries series;
  series.asset = detail::require_preamble(preamble, "asset", context);
  if (const auto it = preamble.find("source"); it != preamble.end()) {
    series.source_note = it->second;
  }
  detail::expect_header(lines, i, "date,close", context);
  for (++i; i < lines.size(); ++i) {
    const std::string where = context + " line " + std::to_string(i + 1);
    const auto cells = split_csv_line(lines[i], where);
    if (cells.size() != 2) {
      throw InputError(where + ": expected 2 cells, got " +
                       std::to_string(cells.size()));
    }
    PriceObservation obs;
    obs.date = parse_date(cells[0]);
    obs.close = parse_double_strict(cells[1], where + " close");
    if (!series.observations.empty() &&
        !(series.observations.back().date < obs.date)) {
      throw InputError(where + ": dates not strictly increasing (" +
                       format_date(series.observations.back().date) +
                       " then " + format_date(obs.date) + ")");
    }
    series.observations.push_back(obs);
  }
  series.validate();
  return series;
}

inline std::string write_price_csv(const PriceSeries& series) {
  std::string out = "#asset=" + series.asset + "\n";
  if (!series.source_note.empty()) {
    out += "#source=" + series.source_note + "\n";
  }
  out += "date,close\n";
  for (const auto& obs : series.observations) {
    out += format_date(obs.date) + "," + format_compact(obs.close) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Holder snapshot CSV
//
//   #symbol=USDT
//   #total_supply=10000000000
//   #taken_at=2025-03-24
//   #top_n=1000                  (optional, default 1000)
//   address,balance,category
//   0xabc...,1234.5,exchange
// ---------------------------------------------------------------------------

inline HolderSnapshot parse_holder_snapshot(std::string_view bytes) {
  const std::string context = "holder snapshot";
  const auto lines = split_lines(bytes);
  std::map<std::string, std::string> preamble;
  std::size_t i = detail::read_preamble(lines, context, &preamble);
  for (const auto& [key, value] : preamble) {
    if (key != "symbol" && key != "total_supply" && key != "taken_at" &&
        key != "top_n") {
      throw InputError(context + ": unknown preamble key #" + key);
    }
  }
  HolderSnapshot snapshot;
  snapshot.symbol = detail::require_preamble(preamble, "symbol", context);
  snapshot.total_supply = parse_double_strict(
      detail::require_preamble(preamble, "total_supply", context),
      context + " total_supply");
  snapshot.taken_at =
      parse_date(detail::require_preamble(preamble, "taken_at", context));
  if (const auto it = preamble.find("top_n"); it != preamble.end()) {
    snapshot.top_n = static_cast<int>(
        parse_int_strict(it->second, context + " top_n"));
  }
  detail::expect_header(lines, i, "address,balance,category", context);
  for (++i; i < lines.size(); ++i) {
    const std::string where = context + " line " + std::to_string(i + 1);
    const auto cells = split_csv_line(lines[i], where);
    if (cells.size() != 3) {
      throw InputError(where + ": expected 3 cells, got " +
                       std::to_string(cells.size()));
    }
    Holder holder;
    holder.address = cells[0];
    holder.balance = parse_double_strict(cells[1], where + " balance");
    holder.category = parse_holder_category(cells[2]);
    snapshot.holders.push_back(std::move(holder));
  }
  snapshot.validate();
  return snapshot;
}

inline std::string write_holder_snapshot(const HolderSnapshot& snapshot) {
  std::string out = "#symbol=" + snapshot.symbol + "\n";
  out += "#total_supply=" + format_compact(snapshot.total_supply) + "\n";
  out += "#taken_at=" + format_date(snapshot.taken_at) + "\n";
  out += "#top_n=" + std::to_string(snapshot.top_n) + "\n";
  out += "address,balance,category\n";
  for (const auto& h : snapshot.holders) {
    out += csv_escape(h.address) + "," + format_compact(h.balance) + "," +
           std::string(token_of(h.category)) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Assessment records CSV (one row per stablecoin)
//
// Columns: symbol, as_of, one metric column per impact object (table
// order), one evidence column per object, reported_total (may be empty).
// ---------------------------------------------------------------------------

namespace detail {

inline std::string assessment_header() {
  std::string header = "symbol,as_of";
  for (ImpactName name : kImpactNames) {
    header += ',';
    header += token_of(name);
  }
  for (ImpactName name : kImpactNames) {
    header += ",evidence_";
    header += token_of(name);
  }
  header += ",reported_total";
  return header;
}

}  // namespace detail

inline std::vector<AssessmentRecord> parse_assessments(std::string_view bytes) {
  const std::string context = "assessments csv";
  const auto lines = split_lines(bytes);
  detail::expect_header(lines, 0, detail::assessment_header(), context);
  std::vector<AssessmentRecord> records;
  std::set<std::string> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string where = context + " line " + std::to_string(i + 1);
    const auto cells = split_csv_line(lines[i], where);
    const std::size_t expected = 2 + 2 * kImpactObjectCount + 1;
    if (cells.size() != expected) {
      throw InputError(where + ": expected " + std::to_string(expected) +
                       " cells, got " + std::to_string(cells.size()));
    }
    AssessmentRecord record;
    record.symbol = cells[0];
    if (!seen.insert(record.symbol).second) {
      throw InputError(where + ": duplicate symbol " + record.symbol);
    }
    record.as_of = parse_date(cells[1]);
    for (std::size_t k = 0; k < kImpactObjectCount; ++k) {
      record.metrics[kImpactNames[k]] =
          parse_double_strict(cells[2 + k], where + " metric " +
                                               std::string(token_of(
                                                   kImpactNames[k])));
    }
    for (std::size_t k = 0; k < kImpactObjectCount; ++k) {
      const std::string& note = cells[2 + kImpactObjectCount + k];
      if (!note.empty()) record.evidence[kImpactNames[k]] = note;
    }
    const std::string& total_cell = cells[2 + 2 * kImpactObjectCount];
    if (!total_cell.empty()) {
      record.reported_total =
          parse_double_strict(total_cell, where + " reported_total");
    }
    record.validate();
    records.push_back(std::move(record));
  }
  return records;
}

inline std::string write_assessments(
    std::span<const AssessmentRecord> records) {
  std::string out = detail::assessment_header() + "\n";
  for (const auto& r : records) {
    out += csv_escape(r.symbol) + "," + format_date(r.as_of);
    for (ImpactName name : kImpactNames) {
      out += "," + format_compact(r.metrics.at(name));
    }
    for (ImpactName name : kImpactNames) {
      const auto it = r.evidence.find(name);
      out += ",";
      if (it != r.evidence.end()) out += csv_escape(it->second);
    }
    out += ",";
    if (r.reported_total) out += format_compact(*r.reported_total);
    out += "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Incident records CSV
//
//   project,symbol,blockchain,year,loss_usd,root_causes
//   Terra,UST,Terra,2022,4.0e10,market_volatility
//
// root_causes is a semicolon-separated set of impact object tokens.
// ---------------------------------------------------------------------------

struct IncidentRecord {
  std::string project;
  std::string symbol;
  std::string blockchain;
  int year = 0;
  double loss_usd = 0.0;
  std::set<ImpactName> root_causes;

  // Dataset admission rules: only incidents from 2017 on with losses above
  // $100K and at least one identified root cause.
  void validate() const {
    if (project.empty()) throw InputError("incident: empty project");
    if (year < 2017) {
      throw InputError("incident " + project +
                       ": year before 2017 fails dataset admission");
    }
    if (!std::isfinite(loss_usd) || loss_usd <= 100000.0) {
      throw InputError("incident " + project +
                       ": loss at or below $100K fails dataset admission");
    }
    if (root_causes.empty()) {
      throw InputError("incident " + project + ": no root causes");
    }
  }

  friend bool operator==(const IncidentRecord&, const IncidentRecord&) =
      default;
};

inline constexpr std::string_view kIncidentHeader =
    "project,symbol,blockchain,year,loss_usd,root_causes";

inline std::vector<IncidentRecord> parse_incidents(std::string_view bytes) {
  const std::string context = "incidents csv";
  const auto lines = split_lines(bytes);
  detail::expect_header(lines, 0, kIncidentHeader, context);
  std::vector<IncidentRecord> records;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string where = context + " line " + std::to_string(i + 1);
    const auto cells = split_csv_line(lines[i], where);
    if (cells.size() != 6) {
      throw InputError(where + ": expected 6 cells, got " +
                       std::to_string(cells.size()));
    }
    IncidentRecord record;
    record.project = cells[0];
    record.symbol = cells[1];
    record.blockchain = cells[2];
    record.year =
        static_cast<int>(parse_int_strict(cells[3], where + " year"));
    record.loss_usd = parse_double_strict(cells[4], where + " loss_usd");
    for (const auto& token : split_list_cell(cells[5])) {
      if (!record.root_causes.insert(parse_impact_name(token)).second) {
        throw InputError(where + ": duplicate root cause " + token);
      }
    }
    try {
      record.validate();
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
    records.push_back(std::move(record));
  }
  return records;
}

inline std::string write_incidents(std::span<const IncidentRecord> records) {
  std::string out = std::string(kIncidentHeader) + "\n";
  for (const auto& r : records) {
    std::string causes;
    for (ImpactName name : kImpactNames) {  // canonical order
      if (r.root_causes.count(name)) {
        if (!causes.empty()) causes += ';';
        causes += token_of(name);
      }
    }
    out += csv_escape(r.project) + "," + csv_escape(r.symbol) + "," +
           csv_escape(r.blockchain) + "," + std::to_string(r.year) + "," +
           format_compact(r.loss_usd) + "," + causes + "\n";
  }
  return out;
}

// Each incident contributes one count per listed cause (so multi-cause
// incidents appear in several buckets); shares are per-cause counts over
// the incident count.
struct CauseHistogram {
  std::map<ImpactName, int> counts;
  std::size_t incident_count = 0;
};

inline CauseHistogram cause_histogram(std::span<const IncidentRecord> records) {
  CauseHistogram hist;
  hist.incident_count = records.size();
  for (const auto& r : records) {
    for (ImpactName cause : r.root_causes) ++hist.counts[cause];
  }
  return hist;
}

// ---------------------------------------------------------------------------
// Stablecoin reference list CSV (survey dataset, ingest only)
//
//   no,project,symbol,market_cap_musd,peg_currency,collateral_classes,
//   mechanisms,yield_rate_pct,yield_sources
//
// This file transcribes a survey table, so two lenient conventions apply
// (each recorded as a warning rather than an error): a yield rate of "na"
// loads as 0, and "not_mentioned" yield sources load as an empty set even
// when the yield is positive.
// ---------------------------------------------------------------------------

struct ReferenceList {
  std::vector<StablecoinProfile> profiles;
  std::vector<std::string> warnings;
};

inline constexpr std::string_view kReferenceHeader =
    "no,project,symbol,market_cap_musd,peg_currency,collateral_classes,"
    "mechanisms,yield_rate_pct,yield_sources";

inline ReferenceList parse_reference_list(std::string_view bytes) {
  const std::string context = "reference csv";
  const auto lines = split_lines(bytes);
  detail::expect_header(lines, 0, kReferenceHeader, context);
  ReferenceList out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string where = context + " line " + std::to_string(i + 1);
    const auto cells = split_csv_line(lines[i], where);
    if (cells.size() != 9) {
      throw InputError(where + ": expected 9 cells, got " +
                       std::to_string(cells.size()));
    }
    const long long row_no = parse_int_strict(cells[0], where + " no");
    if (row_no != static_cast<long long>(i)) {
      throw InputError(where + ": row numbers must be sequential from 1");
    }
    StablecoinProfile profile;
    profile.symbol = cells[2];
    profile.market_cap =
        parse_double_strict(cells[3], where + " market_cap_musd") * 1e6;
    profile.peg_currency = cells[4];
    for (const auto& token : split_list_cell(cells[5])) {
      profile.collateral_classes.insert(parse_collateral_class(token));
    }
    for (const auto& token : split_list_cell(cells[6])) {
      profile.mechanisms.insert(parse_mechanism(token));
    }
    if (cells[7] == "na") {
      profile.yield_rate = 0.0;
      out.warnings.push_back(where + ": yield rate not stated for " +
                             profile.symbol + "; recorded as 0");
    } else {
      profile.yield_rate =
          parse_double_strict(cells[7], where + " yield_rate_pct") / 100.0;
    }
    bool sources_unspecified = false;
    if (cells[8] == "not_mentioned") {
      sources_unspecified = true;
    } else {
      for (const auto& token : split_list_cell(cells[8])) {
        if (token == "na") continue;
        profile.yield_sources.insert(parse_yield_source(token));
      }
    }
    if (profile.yield_rate > 0.0 && profile.yield_sources.empty()) {
      if (!sources_unspecified) {
        throw InputError(where + ": positive yield with empty source list");
      }
      // The survey row declares a yield without naming where it comes
      // from; keep the row but flag the unexplained yield, and still check
      // every other profile invariant.
      out.warnings.push_back(where + ": " + profile.symbol +
                             " pays yield from undisclosed sources");
      StablecoinProfile check = profile;
      check.yield_rate = 0.0;
      check.validate();
    } else {
      profile.validate();
    }
    out.profiles.push_back(std::move(profile));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Redemption costs CSV: asset,fee_usd,delay_days
// ---------------------------------------------------------------------------

inline constexpr std::string_view kRedemptionHeader = "asset,fee_usd,delay_days";

inline std::vector<RedemptionCosts> parse_redemption_costs(
    std::string_view bytes) {
  const std::string context = "redemption costs csv";
  const auto lines = split_lines(bytes);
  detail::expect_header(lines, 0, kRedemptionHeader, context);
  std::vector<RedemptionCosts> out;
  std::set<std::string> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string where = context + " line " + std::to_string(i + 1);
    const auto cells = split_csv_line(lines[i], where);
    if (cells.size() != 3) {
      throw InputError(where + ": expected 3 cells, got " +
                       std::to_string(cells.size()));
    }
    RedemptionCosts costs;
    costs.asset = cells[0];
    if (!seen.insert(costs.asset).second) {
      throw InputError(where + ": duplicate asset " + costs.asset);
    }
    costs.fee_usd = parse_double_strict(cells[1], where + " fee_usd");
    costs.delay_days = parse_double_strict(cells[2], where + " delay_days");
    costs.validate();
    out.push_back(std::move(costs));
  }
  return out;
}

inline std::string write_redemption_costs(
    std::span<const RedemptionCosts> costs) {
  std::string out = std::string(kRedemptionHeader) + "\n";
  for (const auto& c : costs) {
    out += csv_escape(c.asset) + "," + format_compact(c.fee_usd) + "," +
           format_compact(c.delay_days) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Jurisdiction table CSV: jurisdiction,weight,<one 0/1 column per asset>
// ---------------------------------------------------------------------------

inline JurisdictionTable parse_jurisdictions(std::string_view bytes) {
  const std::string context = "jurisdictions csv";
  const auto lines = split_lines(bytes);
  if (lines.empty()) throw InputError(context + ": empty file");
  const auto header = split_csv_line(lines[0], context + " line 1");
  if (header.size() < 3 || header[0] != "jurisdiction" ||
      header[1] != "weight") {
    throw InputError(context +
                     " line 1: expected header 'jurisdiction,weight' plus at "
                     "least one asset column");
  }
  JurisdictionTable table;
  std::vector<std::string> assets(header.begin() + 2, header.end());
  for (const auto& asset : assets) {
    if (asset.empty()) throw InputError(context + ": empty asset column name");
    if (!table.compliance.emplace(asset, std::vector<int>{}).second) {
      throw InputError(context + ": duplicate asset column " + asset);
    }
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string where = context + " line " + std::to_string(i + 1);
    const auto cells = split_csv_line(lines[i], where);
    if (cells.size() != header.size()) {
      throw InputError(where + ": expected " +
                       std::to_string(header.size()) + " cells, got " +
                       std::to_string(cells.size()));
    }
    table.jurisdictions.emplace_back(
        cells[0], parse_double_strict(cells[1], where + " weight"));
    for (std::size_t a = 0; a < assets.size(); ++a) {
      const long long flag =
          parse_int_strict(cells[2 + a], where + " " + assets[a]);
      if (flag != 0 && flag != 1) {
        throw InputError(where + ": compliance flag for " + assets[a] +
                         " must be 0 or 1");
      }
      table.compliance[assets[a]].push_back(static_cast<int>(flag));
    }
  }
  table.validate();
  return table;
}

inline std::string write_jurisdictions(const JurisdictionTable& table) {
  std::string out = "jurisdiction,weight";
  for (const auto& [asset, unused] : table.compliance) {
    out += "," + csv_escape(asset);
  }
  out += "\n";
  for (std::size_t k = 0; k < table.jurisdictions.size(); ++k) {
    out += csv_escape(table.jurisdictions[k].first) + "," +
           format_compact(table.jurisdictions[k].second);
    for (const auto& [asset, flags] : table.compliance) {
      out += "," + std::to_string(flags[k]);
    }
    out += "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dataset manifest (JSON): pins a format version plus per-file checksums
// and as-of dates.
// ---------------------------------------------------------------------------

struct ManifestEntry {
  std::string checksum;  // "fnv1a64:<16 hex digits>"
  std::string as_of;     // ISO date the file's content reflects

  friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

struct DatasetManifest {
  int format_version = 1;
  std::map<std::string, ManifestEntry> files;  // path relative to dataset root
};

inline DatasetManifest parse_manifest(std::string_view bytes) {
  nlohmann::json j = nlohmann::json::parse(bytes, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw InputError("manifest: not a JSON object");
  }
  for (const auto& [key, unused] : j.items()) {
    if (key != "format_version" && key != "files") {
      throw InputError("manifest: unknown key '" + key + "'");
    }
  }
  DatasetManifest manifest;
  if (!j.contains("format_version") || !j["format_version"].is_number_integer()) {
    throw InputError("manifest: missing integer format_version");
  }
  manifest.format_version = j["format_version"].get<int>();
  if (manifest.format_version != 1) {
    throw InputError("manifest: unsupported format_version " +
                     std::to_string(manifest.format_version));
  }
  if (!j.contains("files") || !j["files"].is_object()) {
    throw InputError("manifest: missing files object");
  }
  for (const auto& [path, entry] : j["files"].items()) {
    if (!entry.is_object() || !entry.contains("checksum") ||
        !entry["checksum"].is_string() || !entry.contains("as_of") ||
        !entry["as_of"].is_string()) {
      throw InputError("manifest: file entry for '" + path +
                       "' needs string checksum and as_of");
    }
    (void)parse_date(entry["as_of"].get<std::string>());
    manifest.files[path] = {entry["checksum"].get<std::string>(),
                            entry["as_of"].get<std::string>()};
  }
  return manifest;
}

// Recomputes every checksum against the files under root; throws listing
// all mismatched or missing paths.
inline void verify_manifest(const DatasetManifest& manifest,
                            const std::filesystem::path& root) {
  std::string problems;
  for (const auto& [rel, entry] : manifest.files) {
    const auto path = root / rel;
    if (!std::filesystem::exists(path)) {
      problems += " missing:" + rel;
      continue;
    }
    const std::string actual = fnv1a64_hex(read_file(path));
    if (actual != entry.checksum) {
      problems += " changed:" + rel;
    }
  }
  if (!problems.empty()) {
    throw InputError("manifest verification failed:" + problems);
  }
}

}  // namespace sclego

#endif  // SCLEGO_IO_HPP
