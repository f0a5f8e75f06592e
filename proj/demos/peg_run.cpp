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
// Runs the same depeg shock against a well-tuned and a reflexive supply
// keeper and prints the terminal states side by side.

#include <cstdio>
#include <vector>

#include "sclego/sclego.hpp"

int main() {
  sclego::ScenarioConfig config;
  config.horizon = 3.0;
  config.dt = 0.01;
  config.sigma = {sclego::SigmaKind::Constant, 0.002};
  config.shocks = {{1.0, -0.3}};
  config.oracle_lag = 5;
  config.seed = 7;

  sclego::SimState initial;
  initial.price = 1.0;
  initial.supply = 1e6;
  initial.collateral_value = 1.4e6;
  initial.debt = 1e6;

  std::vector<sclego::Controller> keeper = {
      sclego::SupplyAdjustmentParams{1.0, 1.0}};

  std::printf("%-12s %10s %14s %8s\n", "gain", "terminal P", "supply", "burns");
  for (double gain : {1.0, -0.8}) {
    config.control_gains = {gain};
    const auto traj = sclego::simulate(config, keeper, initial);
    std::size_t burns = 0;
    for (const auto& e : traj.supply_events) {
      if (e.kind == sclego::SupplyEventKind::Burn) ++burns;
    }
    const auto& last = traj.points.back();
    std::printf("%-12g %10.4f %14.1f %8zu\n", gain, last.price, last.supply,
                burns);
  }
  std::printf("\nA positive gain pulls the price back to the peg; a negative\n"
              "(reflexive) gain turns every burn into more sell pressure.\n");
  return 0;
}
