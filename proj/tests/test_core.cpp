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

#include <catch2/catch_amalgamated.hpp>

#include "sclego/core.hpp"

using namespace sclego;

TEST_CASE("impact objects: fixed count, order, and category membership") {
  const auto& objects = default_impact_objects();
  REQUIRE(objects.size() == 8);
  for (std::size_t i = 0; i < objects.size(); ++i) {
    CHECK(objects[i].name == kImpactNames[i]);
    CHECK(objects[i].category == category_of(objects[i].name));
    CHECK(objects[i].degree == default_degree_of(objects[i].name));
    CHECK_FALSE(objects[i].metric_note.empty());
  }
  int per_category[3] = {0, 0, 0};
  for (ImpactName name : kImpactNames) {
    ++per_category[static_cast<int>(category_of(name))];
  }
  CHECK(per_category[0] == 2);  // price fluctuation
  CHECK(per_category[1] == 3);  // smart contract issue
  CHECK(per_category[2] == 3);  // peripheral factor
}

TEST_CASE("default degrees map to the documented weights under the mean rule") {
  const WeightScheme scheme;
  auto w = [&](ImpactName name) {
    return weight_of(default_degree_of(name), scheme);
  };
  CHECK(w(ImpactName::MarketVolatility) == Catch::Approx(2.0));        // (1+3+2)/3
  CHECK(w(ImpactName::PriceManipulation) == Catch::Approx(7.0 / 3.0)); // (2+3+2)/3
  CHECK(w(ImpactName::CodeVulnerability) == Catch::Approx(2.0));       // (2+1+3)/3
  CHECK(w(ImpactName::FlashLoan) == Catch::Approx(2.0));
  CHECK(w(ImpactName::GovernanceAttack) == Catch::Approx(2.0));
  CHECK(w(ImpactName::RugPull) == Catch::Approx(7.0 / 3.0));           // (3+1+3)/3
  CHECK(w(ImpactName::AccessControl) == Catch::Approx(7.0 / 3.0));
  CHECK(w(ImpactName::ImpactedFund) == Catch::Approx(4.0 / 3.0));      // (2+1+1)/3

  // Sum of weights per category.
  double sums[3] = {0.0, 0.0, 0.0};
  for (ImpactName name : kImpactNames) {
    sums[static_cast<int>(category_of(name))] += w(name);
  }
  CHECK(sums[0] == Catch::Approx(13.0 / 3.0));
  CHECK(sums[1] == Catch::Approx(6.0));
  CHECK(sums[2] == Catch::Approx(6.0));
}

TEST_CASE("combine rules and scale") {
  const ImpactDegree degree{Exposure::E2, Nature::I3, Loss::L1};
  WeightScheme scheme;
  scheme.combine_rule = CombineRule::Mean;
  CHECK(weight_of(degree, scheme) == Catch::Approx(2.0));
  scheme.combine_rule = CombineRule::Sum;
  CHECK(weight_of(degree, scheme) == Catch::Approx(6.0));
  scheme.combine_rule = CombineRule::Product;
  CHECK(weight_of(degree, scheme) == Catch::Approx(6.0));
  scheme.scale = 10.0;
  CHECK(weight_of(degree, scheme) == Catch::Approx(60.0));
}

TEST_CASE("weight scheme validation names the offending facet level") {
  WeightScheme scheme;
  scheme.nature_scores[1] = -1.0;
  CHECK_THROWS_WITH(validate(scheme),
                    Catch::Matchers::ContainsSubstring("I2"));

  scheme = WeightScheme{};
  scheme.loss_scores = {3.0, 2.0, 1.0};  // decreasing and monotone enforced
  CHECK_THROWS_WITH(validate(scheme),
                    Catch::Matchers::ContainsSubstring("L2"));
  scheme.monotone = false;
  CHECK_NOTHROW(validate(scheme));

  scheme = WeightScheme{};
  scheme.exposure_scores[2] =
      std::numeric_limits<double>::quiet_NaN();  // unset by config
  CHECK_THROWS_WITH(validate(scheme),
                    Catch::Matchers::ContainsSubstring("E3"));

  scheme = WeightScheme{};
  scheme.scale = 0.0;
  CHECK_THROWS_AS(validate(scheme), ConfigError);

  // A zero score is allowed per facet but must not zero out any weight.
  scheme = WeightScheme{};
  scheme.monotone = false;
  scheme.combine_rule = CombineRule::Product;
  scheme.exposure_scores = {0.0, 1.0, 1.0};
  CHECK_THROWS_WITH(validate(scheme),
                    Catch::Matchers::ContainsSubstring("nonpositive"));
}

TEST_CASE("token round trips for every enum") {
  for (ImpactName name : kImpactNames) {
    CHECK(parse_impact_name(token_of(name)) == name);
    CHECK_FALSE(display_name(name).empty());
  }
  for (HolderCategory c : kHolderCategories) {
    CHECK(parse_holder_category(token_of(c)) == c);
    CHECK_FALSE(display_name(c).empty());
  }
  for (CollateralClass c :
       {CollateralClass::Fiat, CollateralClass::RWA, CollateralClass::Crypto}) {
    CHECK(parse_collateral_class(token_of(c)) == c);
  }
  for (Mechanism m :
       {Mechanism::Liquidation, Mechanism::SupplyAdjustment, Mechanism::Hedging,
        Mechanism::Emergency, Mechanism::Implicit}) {
    CHECK(parse_mechanism(token_of(m)) == m);
  }
  for (int i = 0; i < 8; ++i) {
    const auto s = static_cast<YieldSource>(i);
    CHECK(parse_yield_source(token_of(s)) == s);
  }
  for (CombineRule r :
       {CombineRule::Mean, CombineRule::Sum, CombineRule::Product}) {
    CHECK(parse_combine_rule(token_of(r)) == r);
  }
  CHECK_THROWS_AS(parse_impact_name("oracle_attack"), InputError);
  CHECK_THROWS_AS(parse_holder_category("bank"), InputError);
  CHECK_THROWS_AS(parse_combine_rule("max"), ConfigError);
}

TEST_CASE("profile validation") {
  StablecoinProfile p;
  p.symbol = "TOY";
  p.peg_currency = "USD";
  p.collateral_classes = {CollateralClass::Crypto};
  p.mechanisms = {Mechanism::Liquidation};
  p.market_cap = 1e9;
  CHECK_NOTHROW(p.validate());

  p.yield_rate = 0.05;  // positive yield requires a source
  CHECK_THROWS_WITH(p.validate(),
                    Catch::Matchers::ContainsSubstring("yield sources"));
  p.yield_sources = {YieldSource::CashEquivalentYield};
  CHECK_NOTHROW(p.validate());

  p.market_cap = 0.0;
  CHECK_THROWS_AS(p.validate(), InputError);
}
