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
// Downstream composition: token-share vectors from labeled holder
// snapshots, archetype classification, and holder concentration.

#ifndef SCLEGO_DOWNSTREAM_HPP
#define SCLEGO_DOWNSTREAM_HPP

#include <array>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "sclego/core.hpp"
#include "sclego/dates.hpp"
#include "sclego/errors.hpp"

namespace sclego {

struct Holder {
  std::string address;
  double balance = 0.0;  // token units
  HolderCategory category = HolderCategory::Unlabeled;

  friend bool operator==(const Holder&, const Holder&) = default;
};

struct HolderSnapshot {
  std::string symbol;
  Date taken_at{};
  double total_supply = 0.0;  // token units
  std::vector<Holder> holders;
  int top_n = 1000;  // window size the snapshot was taken with

  friend bool operator==(const HolderSnapshot&, const HolderSnapshot&) =
      default;

  void validate() const {
    if (symbol.empty()) throw InputError("snapshot: empty symbol");
    if (!std::isfinite(total_supply) || total_supply <= 0.0) {
      throw InputError("snapshot " + symbol + ": total supply must be > 0");
    }
    if (top_n <= 0) throw InputError("snapshot " + symbol + ": top_n must be > 0");
    if (holders.size() > static_cast<std::size_t>(top_n)) {
      throw InputError("snapshot " + symbol + ": " +
                       std::to_string(holders.size()) +
                       " holders exceed the top-" + std::to_string(top_n) +
                       " window");
    }
    std::set<std::string> seen;
    double covered = 0.0;
    for (const auto& h : holders) {
      if (h.address.empty()) {
        throw InputError("snapshot " + symbol + ": empty address");
      }
      if (!seen.insert(h.address).second) {
        throw InputError("snapshot " + symbol + ": duplicate address " +
                         h.address);
      }
      if (!std::isfinite(h.balance) || h.balance <= 0.0) {
        throw InputError("snapshot " + symbol + ": nonpositive balance for " +
                         h.address);
      }
      covered += h.balance;
    }
    if (covered > total_supply * (1.0 + 1e-9)) {
      throw InputError("snapshot " + symbol +
                       ": holder balances exceed total supply");
    }
  }
};

// Shares are fractions of *total supply*, not of covered supply; snapshots
// rarely cover everything and renormalizing would overstate concentration.
// The uncovered remainder is 1 - coverage.
struct TokenShareVector {
  std::array<double, kHolderCategoryCount> shares{};  // kHolderCategories order
  double coverage = 0.0;                              // sum of the six shares

  double share(HolderCategory category) const {
    return shares[static_cast<std::size_t>(category)];
  }
};

// Labeled categories only; Unlabeled holders are tracked mass but name no
// archetype.
enum class ArchetypeKind {
  DefiCentric,
  ExchangeCentric,
  WhaleDominated,
  AssetMgmtCentric,
  InfraCentric,
  Mixed,
};

inline std::string_view token_of(ArchetypeKind kind) {
  switch (kind) {
    case ArchetypeKind::DefiCentric: return "defi_centric";
    case ArchetypeKind::ExchangeCentric: return "exchange_centric";
    case ArchetypeKind::WhaleDominated: return "whale_dominated";
    case ArchetypeKind::AssetMgmtCentric: return "asset_mgmt_centric";
    case ArchetypeKind::InfraCentric: return "infra_centric";
    case ArchetypeKind::Mixed: return "mixed";
  }
  return "";
}

struct Archetype {
  ArchetypeKind kind = ArchetypeKind::Mixed;
  double dominant_share = 0.0;  // max labeled-category fraction
};

// Aggregates holder balances into per-category fractions of total supply.
// Warnings (when requested) flag snapshots covering less than the expected
// three quarters of supply.
inline TokenShareVector token_shares(const HolderSnapshot& snapshot,
                                     std::vector<std::string>* warnings =
                                         nullptr) {
  snapshot.validate();
  TokenShareVector v;
  for (const auto& h : snapshot.holders) {
    v.shares[static_cast<std::size_t>(h.category)] +=
        h.balance / snapshot.total_supply;
  }
  for (double s : v.shares) v.coverage += s;
  if (warnings && v.coverage < 0.75) {
    warnings->push_back("snapshot " + snapshot.symbol +
                        ": top-N coverage below 75% of total supply");
  }
  return v;
}

// Dominant labeled category at or above the threshold names the archetype;
// anything below it, and any exact tie at the max, is Mixed.
inline Archetype classify_archetype(const TokenShareVector& v,
                                    double threshold = 0.5) {
  if (!std::isfinite(threshold) || threshold <= 0.0 || threshold > 1.0) {
    throw ConfigError("classify_archetype: threshold must be in (0,1]");
  }
  static constexpr std::array<HolderCategory, 5> labeled = {
      HolderCategory::Exchange, HolderCategory::AssetManagement,
      HolderCategory::DefiProtocol, HolderCategory::BlockchainInfrastructure,
      HolderCategory::WhaleRetail,
  };
  HolderCategory argmax = HolderCategory::Exchange;
  double max_share = -1.0;
  bool tie = false;
  for (HolderCategory c : labeled) {
    const double s = v.share(c);
    if (s > max_share) {
      max_share = s;
      argmax = c;
      tie = false;
    } else if (s == max_share) {
      tie = true;
    }
  }
  Archetype result;
  result.dominant_share = max_share;
  if (tie || max_share < threshold) {
    result.kind = ArchetypeKind::Mixed;
    return result;
  }
  switch (argmax) {
    case HolderCategory::Exchange:
      result.kind = ArchetypeKind::ExchangeCentric;
      break;
    case HolderCategory::AssetManagement:
      result.kind = ArchetypeKind::AssetMgmtCentric;
      break;
    case HolderCategory::DefiProtocol:
      result.kind = ArchetypeKind::DefiCentric;
      break;
    case HolderCategory::BlockchainInfrastructure:
      result.kind = ArchetypeKind::InfraCentric;
      break;
    case HolderCategory::WhaleRetail:
      result.kind = ArchetypeKind::WhaleDominated;
      break;
    case HolderCategory::Unlabeled:
      result.kind = ArchetypeKind::Mixed;  // unreachable: not in `labeled`
      break;
  }
  return result;
}

// Herfindahl-Hirschman index over holder shares of the covered supply
// (balance_i / sum of balances), in (0,1]; 1 = single holder.
inline double concentration_index(const HolderSnapshot& snapshot) {
  snapshot.validate();
  if (snapshot.holders.empty()) {
    throw InputError("concentration_index: snapshot " + snapshot.symbol +
                     " has no holders");
  }
  double covered = 0.0;
  for (const auto& h : snapshot.holders) covered += h.balance;
  double hhi = 0.0;
  for (const auto& h : snapshot.holders) {
    const double s = h.balance / covered;
    hhi += s * s;
  }
  return hhi;
}

}  // namespace sclego

#endif  // SCLEGO_DOWNSTREAM_HPP
