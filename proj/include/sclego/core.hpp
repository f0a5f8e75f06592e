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
// Shared domain vocabulary: impact objects and degrees, weight schemes,
// stablecoin profiles, holder categories.

#ifndef SCLEGO_CORE_HPP
#define SCLEGO_CORE_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>

#include "sclego/errors.hpp"

namespace sclego {

// ---------------------------------------------------------------------------
// Impact objects
// ---------------------------------------------------------------------------

enum class ImpactCategory {
  PriceFluctuation,
  SmartContractIssue,
  PeripheralFactor,
};

enum class ImpactName {
  MarketVolatility,
  PriceManipulation,
  CodeVulnerability,
  FlashLoan,
  GovernanceAttack,
  RugPull,
  AccessControl,
  ImpactedFund,
};

inline constexpr std::size_t kImpactObjectCount = 8;
inline constexpr std::array<ImpactName, kImpactObjectCount> kImpactNames = {
    ImpactName::MarketVolatility, ImpactName::PriceManipulation,
    ImpactName::CodeVulnerability, ImpactName::FlashLoan,
    ImpactName::GovernanceAttack,  ImpactName::RugPull,
    ImpactName::AccessControl,     ImpactName::ImpactedFund,
};

// Severity facets. Each grades one aspect of an impact object on a
// three-level scale: how widely the attack surface is exposed, whether the
// effect on the coin is direct, and in what form the loss materializes.
enum class Exposure { E1 = 1, E2 = 2, E3 = 3 };
enum class Nature { I1 = 1, I2 = 2, I3 = 3 };
enum class Loss { L1 = 1, L2 = 2, L3 = 3 };

struct ImpactDegree {
  Exposure exposure;
  Nature nature;
  Loss loss;

  friend bool operator==(const ImpactDegree&, const ImpactDegree&) = default;
};

struct ImpactObject {
  ImpactName name;
  ImpactCategory category;
  ImpactDegree degree;
  std::string metric_note;  // what the assessment metric measures

  friend bool operator==(const ImpactObject&, const ImpactObject&) = default;
};

constexpr ImpactCategory category_of(ImpactName name) {
  switch (name) {
    case ImpactName::MarketVolatility:
    case ImpactName::PriceManipulation:
      return ImpactCategory::PriceFluctuation;
    case ImpactName::CodeVulnerability:
    case ImpactName::FlashLoan:
    case ImpactName::GovernanceAttack:
      return ImpactCategory::SmartContractIssue;
    case ImpactName::RugPull:
    case ImpactName::AccessControl:
    case ImpactName::ImpactedFund:
      return ImpactCategory::PeripheralFactor;
  }
  return ImpactCategory::PeripheralFactor;  // unreachable
}

constexpr ImpactDegree default_degree_of(ImpactName name) {
  switch (name) {
    case ImpactName::MarketVolatility:
      return {Exposure::E1, Nature::I3, Loss::L2};
    case ImpactName::PriceManipulation:
      return {Exposure::E2, Nature::I3, Loss::L2};
    case ImpactName::CodeVulnerability:
    case ImpactName::FlashLoan:
    case ImpactName::GovernanceAttack:
      return {Exposure::E2, Nature::I1, Loss::L3};
    case ImpactName::RugPull:
    case ImpactName::AccessControl:
      return {Exposure::E3, Nature::I1, Loss::L3};
    case ImpactName::ImpactedFund:
      return {Exposure::E2, Nature::I1, Loss::L1};
  }
  return {Exposure::E1, Nature::I1, Loss::L1};  // unreachable
}

// The eight default impact objects, in fixed table order with their default
// degrees and the kind of evidence each assessment metric is drawn from.
inline const std::array<ImpactObject, kImpactObjectCount>&
default_impact_objects() {
  static const std::array<ImpactObject, kImpactObjectCount> objects = [] {
    std::array<ImpactObject, kImpactObjectCount> out{};
    const std::array<std::string, kImpactObjectCount> notes = {
        "price standard deviation over the past 5 years",
        "regular security auditing",
        "regular security auditing",
        "regular security auditing",
        "regular security auditing and token decentralization",
        "regular security auditing and attestation reports",
        "regular security auditing",
        "regular attestation reports",
    };
    for (std::size_t i = 0; i < kImpactObjectCount; ++i) {
      const ImpactName name = kImpactNames[i];
      out[i] = ImpactObject{name, category_of(name), default_degree_of(name),
                            notes[i]};
    }
    return out;
  }();
  return objects;
}

// ---------------------------------------------------------------------------
// Weight scheme
// ---------------------------------------------------------------------------

enum class CombineRule { Mean, Sum, Product };

// Converts an ImpactDegree into the scalar weight used by the upstream
// score. Facet-level scores default to 1/2/3 (level index = severity); the
// whole mapping is configuration, not ground truth, and can be overridden
// per run. NaN marks a score that the configuration failed to provide.
struct WeightScheme {
  std::array<double, 3> exposure_scores{1.0, 2.0, 3.0};
  std::array<double, 3> nature_scores{1.0, 2.0, 3.0};
  std::array<double, 3> loss_scores{1.0, 2.0, 3.0};
  CombineRule combine_rule = CombineRule::Mean;
  double scale = 1.0;
  // When true (default), scores must be nondecreasing within each facet.
  bool monotone = true;
};

namespace detail {

inline const char* facet_level_name(int facet, int level) {
  static const char* names[3][3] = {{"E1", "E2", "E3"},
                                    {"I1", "I2", "I3"},
                                    {"L1", "L2", "L3"}};
  return names[facet][level];
}

inline double facet_score(const WeightScheme& scheme, int facet, int level) {
  const std::array<double, 3>* arr =
      facet == 0   ? &scheme.exposure_scores
      : facet == 1 ? &scheme.nature_scores
                   : &scheme.loss_scores;
  const double s = (*arr)[static_cast<std::size_t>(level)];
  if (!std::isfinite(s)) {
    throw ConfigError(std::string("weight scheme: no score configured for "
                                  "facet level ") +
                      facet_level_name(facet, level));
  }
  return s;
}

}  // namespace detail

inline double weight_of(const ImpactDegree& degree, const WeightScheme& scheme) {
  const double e =
      detail::facet_score(scheme, 0, static_cast<int>(degree.exposure) - 1);
  const double i =
      detail::facet_score(scheme, 1, static_cast<int>(degree.nature) - 1);
  const double l =
      detail::facet_score(scheme, 2, static_cast<int>(degree.loss) - 1);
  double combined = 0.0;
  switch (scheme.combine_rule) {
    case CombineRule::Mean:
      combined = (e + i + l) / 3.0;
      break;
    case CombineRule::Sum:
      combined = e + i + l;
      break;
    case CombineRule::Product:
      combined = e * i * l;
      break;
  }
  return combined * scheme.scale;
}

// Full validity check; throws ConfigError. weight_of itself only rejects
// missing scores so that degenerate schemes remain usable in tests.
inline void validate(const WeightScheme& scheme) {
  for (int facet = 0; facet < 3; ++facet) {
    for (int level = 0; level < 3; ++level) {
      const double s = detail::facet_score(scheme, facet, level);
      if (s < 0.0) {
        throw ConfigError(std::string("weight scheme: negative score for "
                                      "facet level ") +
                          detail::facet_level_name(facet, level));
      }
    }
    if (scheme.monotone) {
      for (int level = 0; level + 1 < 3; ++level) {
        if (detail::facet_score(scheme, facet, level) >
            detail::facet_score(scheme, facet, level + 1)) {
          throw ConfigError(
              std::string("weight scheme: scores not nondecreasing at facet "
                          "level ") +
              detail::facet_level_name(facet, level + 1));
        }
      }
    }
  }
  if (!std::isfinite(scheme.scale) || scheme.scale <= 0.0) {
    throw ConfigError("weight scheme: scale must be a positive finite number");
  }
  for (int e = 1; e <= 3; ++e) {
    for (int i = 1; i <= 3; ++i) {
      for (int l = 1; l <= 3; ++l) {
        const ImpactDegree d{static_cast<Exposure>(e), static_cast<Nature>(i),
                             static_cast<Loss>(l)};
        if (!(weight_of(d, scheme) > 0.0)) {
          throw ConfigError(
              "weight scheme: some impact degree maps to a nonpositive "
              "weight");
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Holder categories
// ---------------------------------------------------------------------------

// Unlabeled is artifact-internal remainder mass: addresses inside the
// top-N window that carry no label. Supply outside the window is "uncovered"
// and tracked separately via TokenShareVector::coverage.
enum class HolderCategory {
  Exchange,
  AssetManagement,
  DefiProtocol,
  BlockchainInfrastructure,
  WhaleRetail,
  Unlabeled,
};

inline constexpr std::size_t kHolderCategoryCount = 6;
inline constexpr std::array<HolderCategory, kHolderCategoryCount>
    kHolderCategories = {
        HolderCategory::Exchange,
        HolderCategory::AssetManagement,
        HolderCategory::DefiProtocol,
        HolderCategory::BlockchainInfrastructure,
        HolderCategory::WhaleRetail,
        HolderCategory::Unlabeled,
};

// ---------------------------------------------------------------------------
// Stablecoin profiles
// ---------------------------------------------------------------------------

enum class CollateralClass { Fiat, RWA, Crypto };

enum class Mechanism {
  Liquidation,
  SupplyAdjustment,
  Hedging,
  Emergency,
  Implicit,
};

enum class YieldSource {
  NativeProtocolRevenue,
  CashEquivalentYield,
  L1StakingReward,
  DerivativesDrivenYield,
  ExternalDefiYield,
  ThirdPartyCustodianRevenue,
  CommunitySubsidizedFund,
  SecondaryTokenEmission,
};

struct StablecoinProfile {
  std::string symbol;
  std::string peg_currency;  // ISO-4217-style code, e.g. USD
  std::set<CollateralClass> collateral_classes;
  std::set<Mechanism> mechanisms;
  double yield_rate = 0.0;  // fraction per year
  std::set<YieldSource> yield_sources;
  double market_cap = 0.0;  // USD

  void validate() const {
    if (symbol.empty()) throw InputError("profile: empty symbol");
    if (peg_currency.empty()) {
      throw InputError("profile " + symbol + ": empty peg currency");
    }
    if (collateral_classes.empty()) {
      throw InputError("profile " + symbol + ": no collateral classes");
    }
    if (mechanisms.empty()) {
      throw InputError("profile " + symbol + ": no mechanisms");
    }
    if (!std::isfinite(yield_rate) || yield_rate < 0.0) {
      throw InputError("profile " + symbol + ": yield rate must be >= 0");
    }
    if (!std::isfinite(market_cap) || market_cap <= 0.0) {
      throw InputError("profile " + symbol + ": market cap must be > 0");
    }
    if (yield_rate > 0.0 && yield_sources.empty()) {
      throw InputError("profile " + symbol +
                       ": positive yield with no yield sources");
    }
  }
};

// ---------------------------------------------------------------------------
// Name <-> token maps (machine tokens for files, display names for tables)
// ---------------------------------------------------------------------------

inline std::string_view token_of(ImpactName name) {
  switch (name) {
    case ImpactName::MarketVolatility: return "market_volatility";
    case ImpactName::PriceManipulation: return "price_manipulation";
    case ImpactName::CodeVulnerability: return "code_vulnerability";
    case ImpactName::FlashLoan: return "flash_loan";
    case ImpactName::GovernanceAttack: return "governance_attack";
    case ImpactName::RugPull: return "rug_pull";
    case ImpactName::AccessControl: return "access_control";
    case ImpactName::ImpactedFund: return "impacted_fund";
  }
  return "";
}

inline std::string_view display_name(ImpactName name) {
  switch (name) {
    case ImpactName::MarketVolatility: return "Market volatility";
    case ImpactName::PriceManipulation: return "Price manipulation";
    case ImpactName::CodeVulnerability: return "Code vulnerability";
    case ImpactName::FlashLoan: return "Flash loan attack";
    case ImpactName::GovernanceAttack: return "Governance attack";
    case ImpactName::RugPull: return "Rug pull";
    case ImpactName::AccessControl: return "Access control";
    case ImpactName::ImpactedFund: return "Impacted fund";
  }
  return "";
}

inline ImpactName parse_impact_name(std::string_view token) {
  for (ImpactName name : kImpactNames) {
    if (token_of(name) == token) return name;
  }
  std::string msg = "unknown impact object '" + std::string(token) +
                    "'; valid names:";
  for (ImpactName name : kImpactNames) {
    msg += ' ';
    msg += token_of(name);
  }
  throw InputError(msg);
}

inline std::string_view token_of(ImpactCategory category) {
  switch (category) {
    case ImpactCategory::PriceFluctuation: return "price_fluctuation";
    case ImpactCategory::SmartContractIssue: return "smart_contract_issue";
    case ImpactCategory::PeripheralFactor: return "peripheral_factor";
  }
  return "";
}

inline std::string_view display_name(ImpactCategory category) {
  switch (category) {
    case ImpactCategory::PriceFluctuation: return "Price fluctuation";
    case ImpactCategory::SmartContractIssue: return "Smart contract issue";
    case ImpactCategory::PeripheralFactor: return "Peripheral factor";
  }
  return "";
}

inline std::string_view token_of(HolderCategory category) {
  switch (category) {
    case HolderCategory::Exchange: return "exchange";
    case HolderCategory::AssetManagement: return "asset_management";
    case HolderCategory::DefiProtocol: return "defi_protocol";
    case HolderCategory::BlockchainInfrastructure:
      return "blockchain_infrastructure";
    case HolderCategory::WhaleRetail: return "whale_retail";
    case HolderCategory::Unlabeled: return "unlabeled";
  }
  return "";
}

inline std::string_view display_name(HolderCategory category) {
  switch (category) {
    case HolderCategory::Exchange: return "Exchange";
    case HolderCategory::AssetManagement: return "Asset management";
    case HolderCategory::DefiProtocol: return "DeFi protocol";
    case HolderCategory::BlockchainInfrastructure:
      return "Blockchain infrastructure";
    case HolderCategory::WhaleRetail: return "Whale/retail";
    case HolderCategory::Unlabeled: return "Unlabeled";
  }
  return "";
}

inline HolderCategory parse_holder_category(std::string_view token) {
  for (HolderCategory c : kHolderCategories) {
    if (token_of(c) == token) return c;
  }
  std::string msg =
      "unknown holder category '" + std::string(token) + "'; valid names:";
  for (HolderCategory c : kHolderCategories) {
    msg += ' ';
    msg += token_of(c);
  }
  throw InputError(msg);
}

inline std::string_view token_of(CollateralClass c) {
  switch (c) {
    case CollateralClass::Fiat: return "fiat";
    case CollateralClass::RWA: return "rwa";
    case CollateralClass::Crypto: return "crypto";
  }
  return "";
}

inline CollateralClass parse_collateral_class(std::string_view token) {
  if (token == "fiat") return CollateralClass::Fiat;
  if (token == "rwa") return CollateralClass::RWA;
  if (token == "crypto") return CollateralClass::Crypto;
  throw InputError("unknown collateral class '" + std::string(token) +
                   "'; valid names: fiat rwa crypto");
}

inline std::string_view token_of(Mechanism m) {
  switch (m) {
    case Mechanism::Liquidation: return "liquidation";
    case Mechanism::SupplyAdjustment: return "supply_adjustment";
    case Mechanism::Hedging: return "hedging";
    case Mechanism::Emergency: return "emergency";
    case Mechanism::Implicit: return "implicit";
  }
  return "";
}

inline Mechanism parse_mechanism(std::string_view token) {
  if (token == "liquidation") return Mechanism::Liquidation;
  if (token == "supply_adjustment") return Mechanism::SupplyAdjustment;
  if (token == "hedging") return Mechanism::Hedging;
  if (token == "emergency") return Mechanism::Emergency;
  if (token == "implicit") return Mechanism::Implicit;
  throw InputError("unknown mechanism '" + std::string(token) +
                   "'; valid names: liquidation supply_adjustment hedging "
                   "emergency implicit");
}

inline std::string_view token_of(YieldSource s) {
  switch (s) {
    case YieldSource::NativeProtocolRevenue: return "native_protocol_revenue";
    case YieldSource::CashEquivalentYield: return "cash_equivalent_yield";
    case YieldSource::L1StakingReward: return "l1_staking_reward";
    case YieldSource::DerivativesDrivenYield:
      return "derivatives_driven_yield";
    case YieldSource::ExternalDefiYield: return "external_defi_yield";
    case YieldSource::ThirdPartyCustodianRevenue:
      return "third_party_custodian_revenue";
    case YieldSource::CommunitySubsidizedFund:
      return "community_subsidized_fund";
    case YieldSource::SecondaryTokenEmission:
      return "secondary_token_emission";
  }
  return "";
}

inline YieldSource parse_yield_source(std::string_view token) {
  static constexpr std::array<YieldSource, 8> all = {
      YieldSource::NativeProtocolRevenue,
      YieldSource::CashEquivalentYield,
      YieldSource::L1StakingReward,
      YieldSource::DerivativesDrivenYield,
      YieldSource::ExternalDefiYield,
      YieldSource::ThirdPartyCustodianRevenue,
      YieldSource::CommunitySubsidizedFund,
      YieldSource::SecondaryTokenEmission,
  };
  for (YieldSource s : all) {
    if (token_of(s) == token) return s;
  }
  std::string msg =
      "unknown yield source '" + std::string(token) + "'; valid names:";
  for (YieldSource s : all) {
    msg += ' ';
    msg += token_of(s);
  }
  throw InputError(msg);
}

inline std::string_view token_of(CombineRule rule) {
  switch (rule) {
    case CombineRule::Mean: return "mean";
    case CombineRule::Sum: return "sum";
    case CombineRule::Product: return "product";
  }
  return "";
}

inline CombineRule parse_combine_rule(std::string_view token) {
  if (token == "mean") return CombineRule::Mean;
  if (token == "sum") return CombineRule::Sum;
  if (token == "product") return CombineRule::Product;
  throw ConfigError("unknown combine rule '" + std::string(token) +
                    "'; valid names: mean sum product");
}

}  // namespace sclego

#endif  // SCLEGO_CORE_HPP
