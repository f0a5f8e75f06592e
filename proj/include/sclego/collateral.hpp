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
// Collateral-asset comparison metrics: price standard deviation, redemption
// efficiency index, real return, jurisdictional compliance score, and the
// per-asset comparison table built from them.

#ifndef SCLEGO_COLLATERAL_HPP
#define SCLEGO_COLLATERAL_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sclego/core.hpp"
#include "sclego/dates.hpp"
#include "sclego/errors.hpp"

namespace sclego {

// ---------------------------------------------------------------------------
// Input types
// ---------------------------------------------------------------------------

struct PriceObservation {
  Date date;
  double close = 0.0;  // USD

  friend bool operator==(const PriceObservation&, const PriceObservation&) =
      default;
};

struct PriceSeries {
  std::string asset;
  std::vector<PriceObservation> observations;  // strictly increasing dates
  std::string source_note;

  void validate() const {
    if (asset.empty()) throw InputError("price series: empty asset name");
    for (std::size_t i = 0; i < observations.size(); ++i) {
      const auto& obs = observations[i];
      if (!std::isfinite(obs.close) || obs.close <= 0.0) {
        throw InputError("price series " + asset + ": nonpositive price at " +
                         format_date(obs.date));
      }
      if (i > 0 && !(observations[i - 1].date < obs.date)) {
        throw InputError("price series " + asset +
                         ": dates not strictly increasing (" +
                         format_date(observations[i - 1].date) + " then " +
                         format_date(obs.date) + ")");
      }
    }
  }

  friend bool operator==(const PriceSeries&, const PriceSeries&) = default;
};

struct RedemptionCosts {
  std::string asset;
  double fee_usd = 0.0;
  double delay_days = 0.0;

  void validate() const {
    if (asset.empty()) throw InputError("redemption costs: empty asset name");
    if (!std::isfinite(fee_usd) || fee_usd < 0.0) {
      throw InputError("redemption costs " + asset + ": fee must be >= 0");
    }
    if (!std::isfinite(delay_days) || delay_days < 0.0) {
      throw InputError("redemption costs " + asset + ": delay must be >= 0");
    }
  }
};

struct JurisdictionTable {
  // (name, weight) pairs; compliance vectors are index-aligned with this.
  std::vector<std::pair<std::string, double>> jurisdictions;
  std::map<std::string, std::vector<int>> compliance;  // asset -> 0/1 flags

  void validate() const {
    if (jurisdictions.empty()) {
      throw InputError("jurisdiction table: no jurisdictions");
    }
    for (const auto& [name, weight] : jurisdictions) {
      if (name.empty()) throw InputError("jurisdiction table: empty name");
      if (!std::isfinite(weight) || weight < 0.0) {
        throw InputError("jurisdiction table: weight for " + name +
                         " must be >= 0");
      }
    }
    for (const auto& [asset, flags] : compliance) {
      if (flags.size() != jurisdictions.size()) {
        throw InputError("jurisdiction table: compliance vector for " + asset +
                         " has " + std::to_string(flags.size()) +
                         " entries, expected " +
                         std::to_string(jurisdictions.size()));
      }
      for (int flag : flags) {
        if (flag != 0 && flag != 1) {
          throw InputError("jurisdiction table: compliance flags for " +
                           asset + " must be 0 or 1");
        }
      }
    }
  }
};

struct InflationInputs {
  double nominal_return_i = 0.0;  // fraction per year
  double inflation_pi = 0.0;      // fraction per year

  void validate() const {
    if (!std::isfinite(nominal_return_i) || !std::isfinite(inflation_pi)) {
      throw InputError("inflation inputs: values must be finite");
    }
    if (!(std::abs(inflation_pi) < 1.0)) {
      throw InputError("inflation inputs: |pi| must be < 1");
    }
  }
};

enum class ReturnMode { Exact, Approx };

// ---------------------------------------------------------------------------
// Metrics
// ---------------------------------------------------------------------------

// Population standard deviation sqrt((1/T) * sum (P(t) - mu)^2). The 1/T
// form (not 1/(T-1)) is deliberate, as is working on absolute prices: the
// statistic is scale-covariant but not translation-invariant.
inline double psd(const PriceSeries& series) {
  series.validate();
  const std::size_t t = series.observations.size();
  if (t < 2) {
    throw InputError("price series " + series.asset +
                     ": need at least 2 observations for a deviation");
  }
  double mean = 0.0;
  for (const auto& obs : series.observations) mean += obs.close;
  mean /= static_cast<double>(t);
  double ss = 0.0;
  for (const auto& obs : series.observations) {
    const double d = obs.close - mean;
    ss += d * d;
  }
  return std::sqrt(ss / static_cast<double>(t));
}

// Redemption efficiency index: min-max normalize fees and delays across the
// asset set, REI = f' + d' in [0,2], lower = cheaper to redeem. A dimension
// where every asset has the same value normalizes to 0 for all of them
// (recorded in *warnings when provided).
inline std::map<std::string, double> rei(
    std::span<const RedemptionCosts> costs,
    std::vector<std::string>* warnings = nullptr) {
  if (costs.size() < 2) {
    throw InputError(
        "rei: need at least 2 assets to normalize a comparison set");
  }
  for (const auto& c : costs) c.validate();
  double fee_lo = costs[0].fee_usd, fee_hi = costs[0].fee_usd;
  double delay_lo = costs[0].delay_days, delay_hi = costs[0].delay_days;
  for (const auto& c : costs) {
    fee_lo = std::min(fee_lo, c.fee_usd);
    fee_hi = std::max(fee_hi, c.fee_usd);
    delay_lo = std::min(delay_lo, c.delay_days);
    delay_hi = std::max(delay_hi, c.delay_days);
  }
  if (warnings) {
    // One note per flat dimension, not one per asset.
    for (const auto& [flat, dim] :
         {std::pair{!(fee_hi > fee_lo), "fee"},
          std::pair{!(delay_hi > delay_lo), "delay"}}) {
      if (flat) {
        warnings->push_back(std::string("rei: all assets share the same ") +
                            dim + "; dimension normalized to 0");
      }
    }
  }
  auto normalized = [](double v, double lo, double hi) {
    return hi > lo ? (v - lo) / (hi - lo) : 0.0;
  };
  std::map<std::string, double> out;
  for (const auto& c : costs) {
    if (out.count(c.asset)) {
      throw InputError("rei: duplicate asset " + c.asset);
    }
    out[c.asset] = normalized(c.fee_usd, fee_lo, fee_hi) +
                   normalized(c.delay_days, delay_lo, delay_hi);
  }
  return out;
}

// Real return from the Fisher equation. Exact: (1+i)/(1+pi) - 1.
// Approx: i - pi. Returned as a fraction; callers format in pct-points.
inline double real_return(const InflationInputs& inputs, ReturnMode mode) {
  inputs.validate();
  if (mode == ReturnMode::Exact) {
    if (inputs.inflation_pi == -1.0) {
      throw NumericError("real_return: pi = -1 makes the exact form diverge");
    }
    return (1.0 + inputs.nominal_return_i) / (1.0 + inputs.inflation_pi) - 1.0;
  }
  return inputs.nominal_return_i - inputs.inflation_pi;
}

// Weighted compliance sum over jurisdictions; with unit weights this is the
// popcount of the asset's compliance vector.
inline double j_score(const JurisdictionTable& table,
                      const std::string& asset) {
  table.validate();
  const auto it = table.compliance.find(asset);
  if (it == table.compliance.end()) {
    throw InputError("j_score: no compliance vector for asset " + asset);
  }
  double score = 0.0;
  for (std::size_t k = 0; k < table.jurisdictions.size(); ++k) {
    score += table.jurisdictions[k].second * it->second[k];
  }
  return score;
}

// Median yield over profiles whose collateral set contains the given class.
// Zero-yield coins count; even-sized sets take the midpoint average. This is
// one documented convention for sourcing the nominal return i.
inline double median_yield(std::span<const StablecoinProfile> profiles,
                           CollateralClass cls) {
  std::vector<double> yields;
  for (const auto& p : profiles) {
    if (p.collateral_classes.count(cls)) yields.push_back(p.yield_rate);
  }
  if (yields.empty()) {
    throw InputError("median_yield: no profiles with collateral class " +
                     std::string(token_of(cls)));
  }
  std::sort(yields.begin(), yields.end());
  const std::size_t n = yields.size();
  if (n % 2 == 1) return yields[n / 2];
  return 0.5 * (yields[n / 2 - 1] + yields[n / 2]);
}

// ---------------------------------------------------------------------------
// Comparison table
// ---------------------------------------------------------------------------

struct ComparisonCell {
  double value = 0.0;
  bool best = false;  // marked per column, see build_comparison
};

struct ComparisonRow {
  std::string asset;
  ComparisonCell psd;
  ComparisonCell rei;
  ComparisonCell real_return;  // fraction; formatted as pct-points
  ComparisonCell j_score;
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;  // input order preserved
  double best_mark_tolerance = 0.0;
  std::vector<std::string> warnings;
};

namespace detail {

// Marks the best cell(s) of one column: the optimum, plus any value within
// tolerance * |optimum| of it. The band is relative to the best value, not
// the column range, so a runner-up counts as best only when it is within a
// few percent of the winner; on a wide column a distant second stays
// unmarked. A zero optimum marks exact ties only.
template <typename GetCell>
void mark_best(std::vector<ComparisonRow>& rows, GetCell get, bool minimize,
               double tolerance) {
  double best = get(rows.front()).value;
  for (auto& r : rows) {
    const double v = get(r).value;
    if (minimize ? v < best : v > best) best = v;
  }
  const double band = tolerance * std::abs(best);
  for (auto& r : rows) {
    const double v = get(r).value;
    const double gap = minimize ? v - best : best - v;
    get(r).best = gap <= band;
  }
}

}  // namespace detail

// Builds one comparison row per asset from the four metric inputs. All four
// inputs must cover exactly the same asset set; rows keep the order of
// `series`. Best-value cells are marked per column: min for PSD and REI,
// max for real return and compliance score.
inline ComparisonTable build_comparison(
    std::span<const PriceSeries> series,
    std::span<const RedemptionCosts> costs,
    const std::map<std::string, InflationInputs>& inflation,
    const JurisdictionTable& jurisdictions,
    ReturnMode mode = ReturnMode::Approx, double best_mark_tolerance = 0.02) {
  if (series.empty()) throw InputError("build_comparison: no price series");
  if (!std::isfinite(best_mark_tolerance) || best_mark_tolerance < 0.0) {
    throw ConfigError("build_comparison: tolerance must be >= 0");
  }

  std::vector<std::string> assets;
  for (const auto& s : series) assets.push_back(s.asset);

  auto check_assets = [&](const std::vector<std::string>& got,
                          const char* what) {
    std::vector<std::string> want_sorted = assets, got_sorted = got;
    std::sort(want_sorted.begin(), want_sorted.end());
    std::sort(got_sorted.begin(), got_sorted.end());
    if (want_sorted == got_sorted) return;
    std::string msg = std::string("build_comparison: asset sets differ (") +
                      what + ")";
    std::vector<std::string> missing, extra;
    std::set_difference(want_sorted.begin(), want_sorted.end(),
                        got_sorted.begin(), got_sorted.end(),
                        std::back_inserter(missing));
    std::set_difference(got_sorted.begin(), got_sorted.end(),
                        want_sorted.begin(), want_sorted.end(),
                        std::back_inserter(extra));
    for (const auto& a : missing) msg += "; missing " + a;
    for (const auto& a : extra) msg += "; unexpected " + a;
    throw InputError(msg);
  };

  std::vector<std::string> cost_assets, inflation_assets, j_assets;
  for (const auto& c : costs) cost_assets.push_back(c.asset);
  for (const auto& [a, unused] : inflation) inflation_assets.push_back(a);
  for (const auto& [a, unused] : jurisdictions.compliance) j_assets.push_back(a);
  check_assets(cost_assets, "redemption costs");
  check_assets(inflation_assets, "inflation inputs");
  check_assets(j_assets, "jurisdiction compliance");

  ComparisonTable table;
  table.best_mark_tolerance = best_mark_tolerance;
  const auto rei_by_asset = rei(costs, &table.warnings);
  for (const auto& s : series) {
    ComparisonRow row;
    row.asset = s.asset;
    row.psd.value = psd(s);
    row.rei.value = rei_by_asset.at(s.asset);
    row.real_return.value = real_return(inflation.at(s.asset), mode);
    row.j_score.value = j_score(jurisdictions, s.asset);
    table.rows.push_back(std::move(row));
  }

  detail::mark_best(table.rows, [](ComparisonRow& r) -> ComparisonCell& {
    return r.psd; }, true, best_mark_tolerance);
  detail::mark_best(table.rows, [](ComparisonRow& r) -> ComparisonCell& {
    return r.rei; }, true, best_mark_tolerance);
  detail::mark_best(table.rows, [](ComparisonRow& r) -> ComparisonCell& {
    return r.real_return; }, false, best_mark_tolerance);
  detail::mark_best(table.rows, [](ComparisonRow& r) -> ComparisonCell& {
    return r.j_score; }, false, best_mark_tolerance);
  return table;
}

}  // namespace sclego

#endif  // SCLEGO_COLLATERAL_HPP
