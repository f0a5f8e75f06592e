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
// JSON configuration: run config (weight scheme, thresholds, rubric
// tiers), metrics config (inflation and nominal returns), and scenario
// files for the simulator. Unknown keys are rejected everywhere.

#ifndef SCLEGO_CONFIG_HPP
#define SCLEGO_CONFIG_HPP

#include <cmath>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sclego/collateral.hpp"
#include "sclego/core.hpp"
#include "sclego/errors.hpp"
#include "sclego/pegsim.hpp"
#include "sclego/upstream.hpp"

namespace sclego {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline ordered_json parse_json(std::string_view bytes,
                               const std::string& context) {
  ordered_json j = ordered_json::parse(bytes, nullptr, false);
  if (j.is_discarded()) throw ConfigError(context + ": malformed JSON");
  if (!j.is_object()) throw ConfigError(context + ": expected a JSON object");
  return j;
}

inline void reject_unknown_keys(const ordered_json& obj,
                                std::initializer_list<std::string_view> known,
                                const std::string& context) {
  for (const auto& [key, unused] : obj.items()) {
    bool ok = false;
    for (std::string_view k : known) {
      if (key == k) {
        ok = true;
        break;
      }
    }
    if (!ok) throw ConfigError(context + ": unknown key '" + key + "'");
  }
}

inline double json_number(const ordered_json& obj, const char* key,
                          const std::string& context) {
  if (!obj.contains(key) || !obj[key].is_number()) {
    throw ConfigError(context + ": missing number '" + std::string(key) + "'");
  }
  return obj[key].get<double>();
}

inline double json_number_or(const ordered_json& obj, const char* key,
                             double fallback, const std::string& context) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number()) {
    throw ConfigError(context + ": '" + std::string(key) +
                      "' must be a number");
  }
  return obj[key].get<double>();
}

inline std::string json_string(const ordered_json& obj, const char* key,
                               const std::string& context) {
  if (!obj.contains(key) || !obj[key].is_string()) {
    throw ConfigError(context + ": missing string '" + std::string(key) + "'");
  }
  return obj[key].get<std::string>();
}

inline bool json_bool_or(const ordered_json& obj, const char* key,
                         bool fallback, const std::string& context) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_boolean()) {
    throw ConfigError(context + ": '" + std::string(key) +
                      "' must be a boolean");
  }
  return obj[key].get<bool>();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Run config: scoring and classification knobs
//
// {
//   "weight_scheme": {
//     "facet_scores": {"E1":1,"E2":2,"E3":3,"I1":1,"I2":2,"I3":3,
//                      "L1":1,"L2":2,"L3":3},
//     "combine_rule": "mean", "scale": 1.0, "monotone": true
//   },
//   "rubric_tiers": {"audit": {"none":1.0,"one_off":0.5,"regular":0.1},
//                    "attestation": {"none":1.0,"one_off":0.5,"regular":0.1}},
//   "archetype_threshold": 0.5,
//   "best_mark_tolerance": 0.02
// }
//
// Every section is optional and defaults to the compiled-in values; inside
// a present facet_scores object, all nine levels must be given.
// ---------------------------------------------------------------------------

struct RunConfig {
  WeightScheme scheme;
  RubricTiers rubric_tiers;
  double archetype_threshold = 0.5;
  double best_mark_tolerance = 0.02;
};

namespace detail {

inline WeightScheme parse_weight_scheme(const ordered_json& obj) {
  const std::string context = "config weight_scheme";
  reject_unknown_keys(obj, {"facet_scores", "combine_rule", "scale", "monotone"},
                      context);
  WeightScheme scheme;
  if (obj.contains("facet_scores")) {
    const auto& scores = obj["facet_scores"];
    if (!scores.is_object()) {
      throw ConfigError(context + ": facet_scores must be an object");
    }
    reject_unknown_keys(
        scores, {"E1", "E2", "E3", "I1", "I2", "I3", "L1", "L2", "L3"},
        context + " facet_scores");
    const double nan = std::nan("");
    auto level = [&](const char* key) {
      // Absent levels become NaN so validation can name them.
      if (!scores.contains(key)) return nan;
      if (!scores[key].is_number()) {
        throw ConfigError(context + ": facet score " + std::string(key) +
                          " must be a number");
      }
      return scores[key].get<double>();
    };
    scheme.exposure_scores = {level("E1"), level("E2"), level("E3")};
    scheme.nature_scores = {level("I1"), level("I2"), level("I3")};
    scheme.loss_scores = {level("L1"), level("L2"), level("L3")};
  }
  if (obj.contains("combine_rule")) {
    scheme.combine_rule =
        parse_combine_rule(json_string(obj, "combine_rule", context));
  }
  scheme.scale = json_number_or(obj, "scale", scheme.scale, context);
  scheme.monotone = json_bool_or(obj, "monotone", scheme.monotone, context);
  return scheme;
}

inline std::array<double, 3> parse_tier_scores(const ordered_json& obj,
                                               const std::string& context) {
  reject_unknown_keys(obj, {"none", "one_off", "regular"}, context);
  return {json_number(obj, "none", context),
          json_number(obj, "one_off", context),
          json_number(obj, "regular", context)};
}

}  // namespace detail

inline RunConfig parse_run_config(std::string_view bytes) {
  const std::string context = "run config";
  const ordered_json j = detail::parse_json(bytes, context);
  detail::reject_unknown_keys(j,
                              {"weight_scheme", "rubric_tiers",
                               "archetype_threshold", "best_mark_tolerance"},
                              context);
  RunConfig config;
  if (j.contains("weight_scheme")) {
    if (!j["weight_scheme"].is_object()) {
      throw ConfigError(context + ": weight_scheme must be an object");
    }
    config.scheme = detail::parse_weight_scheme(j["weight_scheme"]);
  }
  if (j.contains("rubric_tiers")) {
    const auto& tiers = j["rubric_tiers"];
    if (!tiers.is_object()) {
      throw ConfigError(context + ": rubric_tiers must be an object");
    }
    detail::reject_unknown_keys(tiers, {"audit", "attestation"},
                                context + " rubric_tiers");
    if (tiers.contains("audit")) {
      config.rubric_tiers.audit_scores =
          detail::parse_tier_scores(tiers["audit"], context + " audit tiers");
    }
    if (tiers.contains("attestation")) {
      config.rubric_tiers.attestation_scores = detail::parse_tier_scores(
          tiers["attestation"], context + " attestation tiers");
    }
  }
  config.archetype_threshold = detail::json_number_or(
      j, "archetype_threshold", config.archetype_threshold, context);
  if (!(config.archetype_threshold > 0.0) ||
      config.archetype_threshold > 1.0) {
    throw ConfigError(context + ": archetype_threshold must be in (0,1]");
  }
  config.best_mark_tolerance = detail::json_number_or(
      j, "best_mark_tolerance", config.best_mark_tolerance, context);
  if (!(config.best_mark_tolerance >= 0.0)) {
    throw ConfigError(context + ": best_mark_tolerance must be >= 0");
  }
  validate(config.scheme);
  return config;
}

// ---------------------------------------------------------------------------
// Metrics config: inputs behind the collateral comparison
//
// {
//   "inflation_pi": 0.0425,
//   "nominal_returns": {"USD": 0.0, "Gold": 0.1014, "Bitcoin": 0.1003},
//   "return_mode": "approx",
//   "best_mark_tolerance": 0.02
// }
// ---------------------------------------------------------------------------

struct MetricsConfig {
  double inflation_pi = 0.0;
  std::map<std::string, double> nominal_returns;  // asset -> i (fraction)
  ReturnMode return_mode = ReturnMode::Approx;
  double best_mark_tolerance = 0.02;

  std::map<std::string, InflationInputs> inflation_by_asset() const {
    std::map<std::string, InflationInputs> out;
    for (const auto& [asset, i] : nominal_returns) {
      out[asset] = InflationInputs{i, inflation_pi};
    }
    return out;
  }
};

inline MetricsConfig parse_metrics_config(std::string_view bytes) {
  const std::string context = "metrics config";
  const ordered_json j = detail::parse_json(bytes, context);
  detail::reject_unknown_keys(j,
                              {"inflation_pi", "nominal_returns",
                               "return_mode", "best_mark_tolerance"},
                              context);
  MetricsConfig config;
  config.inflation_pi = detail::json_number(j, "inflation_pi", context);
  if (!j.contains("nominal_returns") || !j["nominal_returns"].is_object()) {
    throw ConfigError(context + ": missing nominal_returns object");
  }
  for (const auto& [asset, value] : j["nominal_returns"].items()) {
    if (!value.is_number()) {
      throw ConfigError(context + ": nominal return for " + asset +
                        " must be a number");
    }
    config.nominal_returns[asset] = value.get<double>();
  }
  if (j.contains("return_mode")) {
    const std::string mode = detail::json_string(j, "return_mode", context);
    if (mode == "exact") config.return_mode = ReturnMode::Exact;
    else if (mode == "approx") config.return_mode = ReturnMode::Approx;
    else throw ConfigError(context + ": return_mode must be exact or approx");
  }
  config.best_mark_tolerance = detail::json_number_or(
      j, "best_mark_tolerance", config.best_mark_tolerance, context);
  if (!(config.best_mark_tolerance >= 0.0)) {
    throw ConfigError(context + ": best_mark_tolerance must be >= 0");
  }
  return config;
}

// ---------------------------------------------------------------------------
// Scenario files
// ---------------------------------------------------------------------------

struct Scenario {
  std::string name;
  ScenarioConfig config;
  std::vector<Controller> controllers;
  SimState initial;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

namespace detail {

inline Controller parse_controller(const ordered_json& obj,
                                   double default_peg) {
  const std::string context = "scenario controller";
  const std::string kind = json_string(obj, "kind", context);
  if (kind == "liquidation") {
    reject_unknown_keys(
        obj, {"kind", "liquidation_threshold", "discount", "liquidation_rate"},
        context);
    return LiquidationParams{
        json_number(obj, "liquidation_threshold", context),
        json_number(obj, "discount", context),
        json_number(obj, "liquidation_rate", context)};
  }
  if (kind == "supply_adjustment") {
    reject_unknown_keys(obj,
                        {"kind", "adjustment_coefficient", "target_price"},
                        context);
    return SupplyAdjustmentParams{
        json_number(obj, "adjustment_coefficient", context),
        json_number(obj, "target_price", context)};
  }
  if (kind == "hedging") {
    reject_unknown_keys(obj, {"kind", "rebalance_tolerance"}, context);
    return HedgingParams{json_number(obj, "rebalance_tolerance", context)};
  }
  if (kind == "emergency") {
    reject_unknown_keys(obj, {"kind", "halt_deviation", "bailout_size", "peg"},
                        context);
    return EmergencyParams{
        json_number(obj, "halt_deviation", context),
        json_number(obj, "bailout_size", context),
        // Absent peg falls back to the scenario's peg target.
        json_number_or(obj, "peg", default_peg, context)};
  }
  if (kind == "null") {
    reject_unknown_keys(obj, {"kind"}, context);
    return NullParams{};
  }
  throw ConfigError(context + ": unknown kind '" + kind +
                    "'; valid kinds: liquidation supply_adjustment hedging "
                    "emergency null");
}

inline ordered_json controller_to_json(const Controller& controller) {
  ordered_json obj;
  if (const auto* c = std::get_if<LiquidationParams>(&controller)) {
    obj["kind"] = "liquidation";
    obj["liquidation_threshold"] = c->liquidation_threshold;
    obj["discount"] = c->discount;
    obj["liquidation_rate"] = c->liquidation_rate;
  } else if (const auto* c = std::get_if<SupplyAdjustmentParams>(&controller)) {
    obj["kind"] = "supply_adjustment";
    obj["adjustment_coefficient"] = c->adjustment_coefficient;
    obj["target_price"] = c->target_price;
  } else if (const auto* c = std::get_if<HedgingParams>(&controller)) {
    obj["kind"] = "hedging";
    obj["rebalance_tolerance"] = c->rebalance_tolerance;
  } else if (const auto* c = std::get_if<EmergencyParams>(&controller)) {
    obj["kind"] = "emergency";
    obj["halt_deviation"] = c->halt_deviation;
    obj["bailout_size"] = c->bailout_size;
    obj["peg"] = c->peg;
  } else {
    obj["kind"] = "null";
  }
  return obj;
}

}  // namespace detail

inline Scenario parse_scenario(std::string_view bytes) {
  const std::string context = "scenario";
  const ordered_json j = detail::parse_json(bytes, context);
  detail::reject_unknown_keys(j, {"name", "config", "controllers", "initial"},
                              context);
  Scenario scenario;
  scenario.name = detail::json_string(j, "name", context);
  if (scenario.name.empty()) throw ConfigError(context + ": empty name");

  if (!j.contains("config") || !j["config"].is_object()) {
    throw ConfigError(context + ": missing config object");
  }
  const auto& cfg = j["config"];
  detail::reject_unknown_keys(
      cfg,
      {"horizon", "dt", "drift_a", "control_gains", "sigma", "shocks",
       "oracle_lag", "seed", "alpha", "beta", "peg_target"},
      context + " config");
  ScenarioConfig& config = scenario.config;
  const std::string cc = context + " config";
  config.horizon = detail::json_number(cfg, "horizon", cc);
  config.dt = detail::json_number(cfg, "dt", cc);
  config.drift_a = detail::json_number_or(cfg, "drift_a", 0.0, cc);
  if (cfg.contains("control_gains")) {
    if (!cfg["control_gains"].is_array()) {
      throw ConfigError(cc + ": control_gains must be an array");
    }
    for (const auto& g : cfg["control_gains"]) {
      if (!g.is_number()) {
        throw ConfigError(cc + ": control gains must be numbers");
      }
      config.control_gains.push_back(g.get<double>());
    }
  }
  if (cfg.contains("sigma")) {
    const auto& sigma = cfg["sigma"];
    if (!sigma.is_object()) throw ConfigError(cc + ": sigma must be an object");
    detail::reject_unknown_keys(sigma, {"kind", "value"}, cc + " sigma");
    const std::string kind = detail::json_string(sigma, "kind", cc + " sigma");
    if (kind == "constant") config.sigma.kind = SigmaKind::Constant;
    else if (kind == "proportional") config.sigma.kind = SigmaKind::Proportional;
    else throw ConfigError(cc + ": sigma kind must be constant or proportional");
    config.sigma.value = detail::json_number(sigma, "value", cc + " sigma");
  }
  if (cfg.contains("shocks")) {
    if (!cfg["shocks"].is_array()) {
      throw ConfigError(cc + ": shocks must be an array");
    }
    for (const auto& s : cfg["shocks"]) {
      if (!s.is_object()) throw ConfigError(cc + ": shocks must be objects");
      detail::reject_unknown_keys(s, {"time", "impulse"}, cc + " shock");
      config.shocks.push_back(Shock{detail::json_number(s, "time", cc),
                                    detail::json_number(s, "impulse", cc)});
    }
  }
  if (cfg.contains("oracle_lag")) {
    if (!cfg["oracle_lag"].is_number_integer()) {
      throw ConfigError(cc + ": oracle_lag must be an integer");
    }
    config.oracle_lag = cfg["oracle_lag"].get<int>();
  }
  if (!cfg.contains("seed") || !cfg["seed"].is_number_unsigned()) {
    throw ConfigError(cc + ": missing unsigned integer seed");
  }
  config.seed = cfg["seed"].get<std::uint64_t>();
  config.alpha = detail::json_number_or(cfg, "alpha", 0.0, cc);
  config.beta = detail::json_number_or(cfg, "beta", 0.0, cc);
  config.peg_target = detail::json_number_or(cfg, "peg_target", 1.0, cc);

  if (!j.contains("controllers") || !j["controllers"].is_array()) {
    throw ConfigError(context + ": missing controllers array");
  }
  for (const auto& c : j["controllers"]) {
    if (!c.is_object()) {
      throw ConfigError(context + ": controllers must be objects");
    }
    scenario.controllers.push_back(
        detail::parse_controller(c, config.peg_target));
  }

  if (!j.contains("initial") || !j["initial"].is_object()) {
    throw ConfigError(context + ": missing initial state object");
  }
  const auto& init = j["initial"];
  const std::string ic = context + " initial";
  detail::reject_unknown_keys(init,
                              {"price", "supply", "collateral_value", "debt",
                               "hedge_short", "halted", "bailout_reserve"},
                              ic);
  scenario.initial.t = 0.0;
  scenario.initial.price = detail::json_number(init, "price", ic);
  scenario.initial.supply = detail::json_number_or(init, "supply", 0.0, ic);
  scenario.initial.collateral_value =
      detail::json_number_or(init, "collateral_value", 0.0, ic);
  scenario.initial.debt = detail::json_number_or(init, "debt", 0.0, ic);
  scenario.initial.hedge_short =
      detail::json_number_or(init, "hedge_short", 0.0, ic);
  scenario.initial.halted = detail::json_bool_or(init, "halted", false, ic);
  scenario.initial.bailout_reserve =
      detail::json_number_or(init, "bailout_reserve", 0.0, ic);

  scenario.config.validate();
  scenario.initial.validate();
  for (const auto& c : scenario.controllers) validate_controller(c);
  if (!scenario.config.control_gains.empty() &&
      scenario.config.control_gains.size() != scenario.controllers.size()) {
    throw ConfigError(context +
                      ": control_gains length must match controllers");
  }
  return scenario;
}

inline std::string write_scenario(const Scenario& scenario) {
  ordered_json j;
  j["name"] = scenario.name;
  ordered_json cfg;
  cfg["horizon"] = scenario.config.horizon;
  cfg["dt"] = scenario.config.dt;
  cfg["drift_a"] = scenario.config.drift_a;
  cfg["control_gains"] = scenario.config.control_gains;
  cfg["sigma"] = {
      {"kind", scenario.config.sigma.kind == SigmaKind::Constant
                   ? "constant"
                   : "proportional"},
      {"value", scenario.config.sigma.value}};
  ordered_json shocks = ordered_json::array();
  for (const auto& s : scenario.config.shocks) {
    shocks.push_back({{"time", s.time}, {"impulse", s.impulse}});
  }
  cfg["shocks"] = shocks;
  cfg["oracle_lag"] = scenario.config.oracle_lag;
  cfg["seed"] = scenario.config.seed;
  cfg["alpha"] = scenario.config.alpha;
  cfg["beta"] = scenario.config.beta;
  cfg["peg_target"] = scenario.config.peg_target;
  j["config"] = cfg;
  ordered_json controllers = ordered_json::array();
  for (const auto& c : scenario.controllers) {
    controllers.push_back(detail::controller_to_json(c));
  }
  j["controllers"] = controllers;
  ordered_json init;
  init["price"] = scenario.initial.price;
  init["supply"] = scenario.initial.supply;
  init["collateral_value"] = scenario.initial.collateral_value;
  init["debt"] = scenario.initial.debt;
  init["hedge_short"] = scenario.initial.hedge_short;
  init["halted"] = scenario.initial.halted;
  init["bailout_reserve"] = scenario.initial.bailout_reserve;
  j["initial"] = init;
  return j.dump(2) + "\n";
}

}  // namespace sclego

#endif  // SCLEGO_CONFIG_HPP
