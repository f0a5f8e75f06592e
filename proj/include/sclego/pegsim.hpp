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
// Peg-dynamics simulator: pluggable stabilization controllers (liquidation,
// supply adjustment, hedging, emergency halt) driving an Euler-Maruyama
// price process, plus a scalar system-dynamics integrator.

#ifndef SCLEGO_PEGSIM_HPP
#define SCLEGO_PEGSIM_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sclego/errors.hpp"
#include "sclego/rng.hpp"

namespace sclego {

// ---------------------------------------------------------------------------
// State and configuration
// ---------------------------------------------------------------------------

struct SimState {
  double t = 0.0;                // days
  double price = 1.0;            // USD per token
  double supply = 0.0;           // tokens
  double collateral_value = 0.0; // USD
  double debt = 0.0;             // USD
  double hedge_short = 0.0;      // exposure units held short
  bool halted = false;
  double bailout_reserve = 0.0;  // USD

  friend bool operator==(const SimState&, const SimState&) = default;

  void validate() const {
    const double fields[] = {t,    price,       supply,         collateral_value,
                             debt, hedge_short, bailout_reserve};
    for (double v : fields) {
      if (!std::isfinite(v)) throw InputError("sim state: non-finite field");
    }
    if (price < 0.0) throw InputError("sim state: price must be >= 0");
    if (supply < 0.0) throw InputError("sim state: supply must be >= 0");
    if (debt < 0.0) throw InputError("sim state: debt must be >= 0");
    if (bailout_reserve < 0.0) {
      throw InputError("sim state: bailout reserve must be >= 0");
    }
  }
};

struct Shock {
  double time = 0.0;     // days from start
  double impulse = 0.0;  // additive price move, USD per token

  friend bool operator==(const Shock&, const Shock&) = default;
};

enum class SigmaKind { Constant, Proportional };

struct SigmaSpec {
  SigmaKind kind = SigmaKind::Constant;
  double value = 0.0;

  double operator()(double price) const {
    return kind == SigmaKind::Constant ? value : value * price;
  }

  friend bool operator==(const SigmaSpec&, const SigmaSpec&) = default;
};

struct ScenarioConfig {
  double horizon = 1.0;  // days
  double dt = 0.01;      // days per step; must divide horizon
  double drift_a = 0.0;  // A in dP = (A P + B U) dt + sigma dW
  std::vector<double> control_gains;  // B, one per controller; empty = all 1
  SigmaSpec sigma;
  std::vector<Shock> shocks;
  int oracle_lag = 0;  // steps of price staleness seen by controllers
  std::uint64_t seed = 0;
  double alpha = 0.0;  // upstream gain for the system-dynamics integrator
  double beta = 0.0;   // downstream gain for the system-dynamics integrator
  double peg_target = 1.0;  // USD

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) =
      default;

  std::size_t step_count() const {
    if (!std::isfinite(dt) || dt <= 0.0) {
      throw ConfigError("scenario: dt must be > 0");
    }
    if (!std::isfinite(horizon) || horizon < dt) {
      throw ConfigError("scenario: horizon must be >= dt");
    }
    const auto n = static_cast<std::size_t>(std::llround(horizon / dt));
    if (n == 0 || std::abs(static_cast<double>(n) * dt - horizon) >
                      1e-9 * std::max(1.0, std::abs(horizon))) {
      throw ConfigError("scenario: dt must divide horizon");
    }
    return n;
  }

  void validate() const {
    (void)step_count();
    if (oracle_lag < 0) throw ConfigError("scenario: oracle_lag must be >= 0");
    if (!std::isfinite(sigma.value) || sigma.value < 0.0) {
      throw ConfigError("scenario: sigma must be >= 0");
    }
    if (!std::isfinite(peg_target) || peg_target <= 0.0) {
      throw ConfigError("scenario: peg target must be > 0");
    }
    if (!std::isfinite(drift_a) || !std::isfinite(alpha) ||
        !std::isfinite(beta)) {
      throw ConfigError("scenario: coefficients must be finite");
    }
    for (double g : control_gains) {
      if (!std::isfinite(g)) {
        throw ConfigError("scenario: control gains must be finite");
      }
    }
    for (const auto& s : shocks) {
      if (!std::isfinite(s.time) || s.time < 0.0 || s.time > horizon) {
        throw ConfigError("scenario: shock time outside [0, horizon]");
      }
      if (!std::isfinite(s.impulse)) {
        throw ConfigError("scenario: shock impulse must be finite");
      }
    }
  }
};

// ---------------------------------------------------------------------------
// Controllers
// ---------------------------------------------------------------------------

struct LiquidationParams {
  double liquidation_threshold = 1.5;  // collateral/debt ratio floor, > 1
  double discount = 0.0;               // haircut on seized collateral, [0,1)
  double liquidation_rate = 1.0;       // fraction of debt repaid, (0,1]

  friend bool operator==(const LiquidationParams&, const LiquidationParams&) =
      default;
};

struct SupplyAdjustmentParams {
  double adjustment_coefficient = 0.0;  // k > 0
  double target_price = 1.0;            // USD

  friend bool operator==(const SupplyAdjustmentParams&,
                         const SupplyAdjustmentParams&) = default;
};

struct HedgingParams {
  double rebalance_tolerance = 0.0;  // exposure units

  friend bool operator==(const HedgingParams&, const HedgingParams&) = default;
};

struct EmergencyParams {
  double halt_deviation = 0.0;  // |P - peg| trigger bound
  double bailout_size = 0.0;    // USD moved per step while halted
  double peg = 1.0;             // USD

  friend bool operator==(const EmergencyParams&, const EmergencyParams&) =
      default;
};

struct NullParams {
  friend bool operator==(const NullParams&, const NullParams&) = default;
};

using Controller = std::variant<LiquidationParams, SupplyAdjustmentParams,
                                HedgingParams, EmergencyParams, NullParams>;

inline void validate_controller(const Controller& controller) {
  if (const auto* c = std::get_if<LiquidationParams>(&controller)) {
    if (!std::isfinite(c->liquidation_threshold) ||
        c->liquidation_threshold <= 1.0) {
      throw ConfigError(
          "liquidation: threshold must be > 1 (over-collateralized)");
    }
    if (!std::isfinite(c->discount) || c->discount < 0.0 ||
        c->discount >= 1.0) {
      throw ConfigError("liquidation: discount must be in [0,1)");
    }
    if (!std::isfinite(c->liquidation_rate) || c->liquidation_rate <= 0.0 ||
        c->liquidation_rate > 1.0) {
      throw ConfigError("liquidation: rate must be in (0,1]");
    }
  } else if (const auto* c =
                 std::get_if<SupplyAdjustmentParams>(&controller)) {
    if (!std::isfinite(c->adjustment_coefficient) ||
        c->adjustment_coefficient <= 0.0) {
      throw ConfigError("supply adjustment: coefficient must be > 0");
    }
    if (!std::isfinite(c->target_price) || c->target_price <= 0.0) {
      throw ConfigError("supply adjustment: target price must be > 0");
    }
  } else if (const auto* c = std::get_if<HedgingParams>(&controller)) {
    if (!std::isfinite(c->rebalance_tolerance) ||
        c->rebalance_tolerance < 0.0) {
      throw ConfigError("hedging: tolerance must be >= 0");
    }
  } else if (const auto* c = std::get_if<EmergencyParams>(&controller)) {
    if (!std::isfinite(c->halt_deviation) || c->halt_deviation < 0.0) {
      throw ConfigError("emergency: halt deviation must be >= 0");
    }
    if (!std::isfinite(c->bailout_size) || c->bailout_size < 0.0) {
      throw ConfigError("emergency: bailout size must be >= 0");
    }
    if (!std::isfinite(c->peg) || c->peg <= 0.0) {
      throw ConfigError("emergency: peg must be > 0");
    }
  }
}

// ---------------------------------------------------------------------------
// Controller steps
// ---------------------------------------------------------------------------

// Seized collateral amount, or empty when the position is safe.
using LiquidationOutcome = std::optional<double>;

// One liquidation check. When the collateral/debt ratio is below the
// threshold: seize collateral at the discount, repay debt at the rate.
// Zero debt is safe by definition (nothing to liquidate against).
inline std::pair<SimState, LiquidationOutcome> liquidation_step(
    SimState state, const LiquidationParams& c) {
  if (state.debt == 0.0) return {state, std::nullopt};
  if (state.collateral_value / state.debt < c.liquidation_threshold) {
    const double seized = state.collateral_value * (1.0 - c.discount);
    state.debt = state.debt - state.debt * c.liquidation_rate;
    state.collateral_value = state.collateral_value - seized;
    return {state, seized};
  }
  return {state, std::nullopt};
}

// One supply adjustment against the *observed* (possibly stale) price:
// change = supply * k * (observed - target); mint above target, burn below,
// with burns clamped at the available supply. When `applied` is non-null it
// receives the signed amount actually applied (+mint / -burn).
inline SimState supply_adjust_step(SimState state,
                                   const SupplyAdjustmentParams& c,
                                   double observed_price,
                                   double* applied = nullptr) {
  const double supply_change = state.supply * c.adjustment_coefficient *
                               (observed_price - c.target_price);
  if (observed_price > c.target_price) {
    state.supply = state.supply + supply_change;
    if (applied) *applied = supply_change;
  } else {
    const double burn = std::min(std::abs(supply_change), state.supply);
    state.supply = state.supply - burn;
    if (applied) *applied = -burn;
  }
  return state;
}

// Quantity-theory price check: M*V = P*Q.
inline double implied_price_qtm(double m, double v, double q) {
  if (!std::isfinite(m) || !std::isfinite(v) || !std::isfinite(q)) {
    throw InputError("implied_price_qtm: inputs must be finite");
  }
  if (q <= 0.0) throw InputError("implied_price_qtm: Q must be > 0");
  return m * v / q;
}

// Rebalances the short leg to the spot exposure whenever the net delta
// drifts past the tolerance; with tolerance 0 the position is delta-neutral
// after every call.
inline SimState hedge_step(SimState state, const HedgingParams& c,
                           double spot_exposure) {
  if (std::abs(spot_exposure - state.hedge_short) > c.rebalance_tolerance) {
    state.hedge_short = spot_exposure;
  }
  return state;
}

// Halts the protocol once |P - peg| exceeds the bound (latched; nothing in
// this model resumes a halted run) and, while halted, drips the bailout
// reserve into collateral.
inline SimState emergency_step(SimState state, const EmergencyParams& c) {
  if (std::abs(state.price - c.peg) > c.halt_deviation) {
    state.halted = true;
  }
  if (state.halted && state.bailout_reserve > 0.0) {
    const double transfer = std::min(c.bailout_size, state.bailout_reserve);
    state.collateral_value += transfer;
    state.bailout_reserve -= transfer;
  }
  return state;
}

// ---------------------------------------------------------------------------
// Simulation
// ---------------------------------------------------------------------------

struct TrajectoryPoint {
  double t = 0.0;
  double price = 0.0;
  double supply = 0.0;
  double collateral_value = 0.0;
  double debt = 0.0;
  bool halted = false;
  double hedge_short = 0.0;
};

enum class SupplyEventKind { Mint, Burn };

struct SupplyEvent {
  std::size_t step = 0;
  SupplyEventKind kind = SupplyEventKind::Mint;
  double amount = 0.0;  // tokens, nonnegative
};

struct Trajectory {
  std::vector<TrajectoryPoint> points;  // step_count + 1 entries, t=0 first
  std::vector<SupplyEvent> supply_events;
  double total_seized = 0.0;
  std::optional<std::size_t> halt_step;
};

namespace detail {

inline TrajectoryPoint point_from(const SimState& s) {
  return {s.t, s.price, s.supply, s.collateral_value, s.debt, s.halted,
          s.hedge_short};
}

}  // namespace detail

// Euler-Maruyama integration of dP = (A P + B U) dt + sigma(P) dW plus
// additive shocks, with controllers applied each step in list order before
// the price update.
//
// Semantics, pinned for reproducibility:
//  - Controllers see the price `oracle_lag` steps old (clamped at t=0).
//  - Supply adjustment contributes u = -applied/supply_before as price
//    pressure; liquidation, hedging and emergency touch state only (u = 0).
//  - While halted, supply adjustment and hedging are no-ops; liquidation
//    and the emergency bailout still run.
//  - Hedging re-targets the current collateral_value as its spot exposure.
//  - A shock at time s lands in the step covering [s, s+dt); a shock at
//    exactly `horizon` lands in the final step.
//  - Exactly one standard normal is drawn per step, from NormalSampler
//    seeded with config.seed, even when sigma is 0.
//  - Price is clamped at 0 after each update.
inline Trajectory simulate(const ScenarioConfig& config,
                           std::span<const Controller> controllers,
                           const SimState& initial) {
  config.validate();
  initial.validate();
  for (const auto& c : controllers) validate_controller(c);
  if (!config.control_gains.empty() &&
      config.control_gains.size() != controllers.size()) {
    throw ConfigError("scenario: control gain vector must match controller "
                      "count (or be empty for unit gains)");
  }

  const std::size_t steps = config.step_count();
  const double sqrt_dt = std::sqrt(config.dt);
  NormalSampler normal(config.seed);

  SimState state = initial;
  Trajectory traj;
  traj.points.reserve(steps + 1);
  traj.points.push_back(detail::point_from(state));

  std::vector<double> price_history;
  price_history.reserve(steps + 1);
  price_history.push_back(state.price);

  for (std::size_t k = 0; k < steps; ++k) {
    const std::size_t obs_index =
        k >= static_cast<std::size_t>(config.oracle_lag)
            ? k - static_cast<std::size_t>(config.oracle_lag)
            : 0;
    const double observed_price = price_history[obs_index];

    double u_weighted = 0.0;
    for (std::size_t i = 0; i < controllers.size(); ++i) {
      const double gain =
          config.control_gains.empty() ? 1.0 : config.control_gains[i];
      const Controller& c = controllers[i];
      if (const auto* liq = std::get_if<LiquidationParams>(&c)) {
        auto [next, outcome] = liquidation_step(state, *liq);
        state = next;
        if (outcome) traj.total_seized += *outcome;
      } else if (const auto* sa = std::get_if<SupplyAdjustmentParams>(&c)) {
        if (state.halted) continue;
        const double supply_before = state.supply;
        double applied = 0.0;
        state = supply_adjust_step(state, *sa, observed_price, &applied);
        if (applied != 0.0) {
          traj.supply_events.push_back(
              {k,
               applied > 0.0 ? SupplyEventKind::Mint : SupplyEventKind::Burn,
               std::abs(applied)});
          if (supply_before > 0.0) {
            u_weighted += gain * (-applied / supply_before);
          }
        }
      } else if (const auto* hedge = std::get_if<HedgingParams>(&c)) {
        if (state.halted) continue;
        state = hedge_step(state, *hedge, state.collateral_value);
      } else if (const auto* em = std::get_if<EmergencyParams>(&c)) {
        const bool was_halted = state.halted;
        state = emergency_step(state, *em);
        if (state.halted && !was_halted) traj.halt_step = k;
      }
    }

    const double z = normal();
    const double t_step = static_cast<double>(k) * config.dt;
    const double t_next = static_cast<double>(k + 1) * config.dt;
    double shock_sum = 0.0;
    for (const auto& s : config.shocks) {
      const bool in_step = s.time >= t_step &&
                           (s.time < t_next ||
                            (k == steps - 1 && s.time <= config.horizon));
      if (in_step) shock_sum += s.impulse;
    }

    const double drift = (config.drift_a * state.price + u_weighted) * config.dt;
    const double diffusion = config.sigma(state.price) * sqrt_dt * z;
    state.price = state.price + drift + diffusion + shock_sum;
    if (state.price < 0.0) state.price = 0.0;
    state.t = t_next;

    if (!std::isfinite(state.price) || !std::isfinite(state.supply) ||
        !std::isfinite(state.collateral_value) || !std::isfinite(state.debt)) {
      throw NumericError("simulate: non-finite state at step " +
                         std::to_string(k));
    }

    price_history.push_back(state.price);
    traj.points.push_back(detail::point_from(state));
  }
  return traj;
}

// ---------------------------------------------------------------------------
// System-dynamics integrator
// ---------------------------------------------------------------------------

// Piecewise-constant, right-continuous signal: value of the latest knot at
// or before t; 0 before the first knot.
struct StepSignal {
  std::vector<std::pair<double, double>> knots;  // (time, value), increasing

  void validate() const {
    for (std::size_t i = 0; i < knots.size(); ++i) {
      if (!std::isfinite(knots[i].first) || !std::isfinite(knots[i].second)) {
        throw ConfigError("step signal: non-finite knot");
      }
      if (i > 0 && !(knots[i - 1].first < knots[i].first)) {
        throw ConfigError("step signal: knot times must strictly increase");
      }
    }
  }

  double at(double t) const {
    double value = 0.0;
    for (const auto& [time, v] : knots) {
      if (time <= t) value = v;
      else break;
    }
    return value;
  }
};

enum class InternalKind { None, Linear, Logistic };

// Internal dynamics term f(S): none, linear lambda*S, or logistic growth.
struct InternalDynamics {
  InternalKind kind = InternalKind::None;
  double lambda = 0.0;    // linear
  double rate = 0.0;      // logistic
  double capacity = 1.0;  // logistic

  void validate() const {
    if (!std::isfinite(lambda) || !std::isfinite(rate) ||
        !std::isfinite(capacity)) {
      throw ConfigError("internal dynamics: parameters must be finite");
    }
    if (kind == InternalKind::Logistic && capacity <= 0.0) {
      throw ConfigError("internal dynamics: logistic capacity must be > 0");
    }
  }

  double operator()(double s) const {
    switch (kind) {
      case InternalKind::None: return 0.0;
      case InternalKind::Linear: return lambda * s;
      case InternalKind::Logistic: return rate * s * (1.0 - s / capacity);
    }
    return 0.0;
  }
};

// Forward-Euler integration of dS/dt = alpha*up(t) + beta*dn(t) + f(S).
// S is a scalar ecosystem index (default reading: market-cap index).
// Returns (t, S) samples including t=0 and t=horizon.
inline std::vector<std::pair<double, double>> integrate_system_dynamics(
    double s0, const StepSignal& up_signal, const StepSignal& dn_signal,
    double alpha, double beta, const InternalDynamics& f, double horizon,
    double dt) {
  if (!std::isfinite(s0)) {
    throw ConfigError("integrate_system_dynamics: S0 must be finite");
  }
  if (!std::isfinite(alpha) || !std::isfinite(beta)) {
    throw ConfigError("integrate_system_dynamics: gains must be finite");
  }
  up_signal.validate();
  dn_signal.validate();
  f.validate();
  ScenarioConfig grid;
  grid.horizon = horizon;
  grid.dt = dt;
  const std::size_t steps = grid.step_count();

  std::vector<std::pair<double, double>> out;
  out.reserve(steps + 1);
  double s = s0;
  out.emplace_back(0.0, s);
  for (std::size_t k = 0; k < steps; ++k) {
    const double t = static_cast<double>(k) * dt;
    s += dt * (alpha * up_signal.at(t) + beta * dn_signal.at(t) + f(s));
    if (!std::isfinite(s)) {
      throw NumericError("integrate_system_dynamics: non-finite S at step " +
                         std::to_string(k));
    }
    out.emplace_back(static_cast<double>(k + 1) * dt, s);
  }
  return out;
}

}  // namespace sclego

#endif  // SCLEGO_PEGSIM_HPP
