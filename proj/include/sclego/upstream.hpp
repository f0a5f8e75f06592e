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
// Upstream risk scoring: per-object metric rubrics and the weighted sum
// UP = sum_k w_k * m_k with per-category decomposition.

#ifndef SCLEGO_UPSTREAM_HPP
#define SCLEGO_UPSTREAM_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sclego/core.hpp"
#include "sclego/dates.hpp"
#include "sclego/errors.hpp"

namespace sclego {

// ---------------------------------------------------------------------------
// Metric rubrics
// ---------------------------------------------------------------------------

enum class EvidenceTier { None, OneOff, Regular };

inline std::string_view token_of(EvidenceTier tier) {
  switch (tier) {
    case EvidenceTier::None: return "none";
    case EvidenceTier::OneOff: return "one_off";
    case EvidenceTier::Regular: return "regular";
  }
  return "";
}

inline EvidenceTier parse_evidence_tier(std::string_view token) {
  if (token == "none") return EvidenceTier::None;
  if (token == "one_off") return EvidenceTier::OneOff;
  if (token == "regular") return EvidenceTier::Regular;
  throw InputError("unknown evidence tier '" + std::string(token) +
                   "'; valid names: none one_off regular");
}

// Tier-to-score mapping for audit and attestation evidence. The numbers are
// a convention (no audits leave the full exposure, regular audits leave a
// residual 0.1), overridable from config.
struct RubricTiers {
  std::array<double, 3> audit_scores{1.0, 0.5, 0.1};        // none/one_off/regular
  std::array<double, 3> attestation_scores{1.0, 0.5, 0.1};  // none/one_off/regular
};

// Raw evidence feeding an object's metric. Only the fields the object's
// rubric uses need to be present.
struct RubricInputs {
  std::optional<EvidenceTier> audit_cadence;
  std::optional<EvidenceTier> attestation_cadence;
  std::optional<double> top_holder_concentration;  // fraction in [0,1]
  std::optional<double> normalized_psd;            // coin's own 5y PSD, scaled
};

namespace detail {

inline double require_fraction(const std::optional<double>& v,
                               ImpactName object, const char* field) {
  if (!v.has_value()) {
    throw InputError(std::string("rubric for ") +
                     std::string(token_of(object)) + ": missing field " +
                     field);
  }
  if (!std::isfinite(*v)) {
    throw InputError(std::string("rubric for ") +
                     std::string(token_of(object)) + ": field " + field +
                     " must be finite");
  }
  return *v;
}

inline double tier_score(const std::optional<EvidenceTier>& tier,
                         const std::array<double, 3>& scores,
                         ImpactName object, const char* field) {
  if (!tier.has_value()) {
    throw InputError(std::string("rubric for ") +
                     std::string(token_of(object)) + ": missing field " +
                     field);
  }
  return scores[static_cast<std::size_t>(*tier)];
}

}  // namespace detail

// Deterministic evidence-to-metric mapping, m in [0,1] (1 = fully exposed).
// Audit-backed objects use the audit tier; the governance rubric averages
// audit score and top-holder concentration; market volatility clamps the
// coin's normalized deviation; fund custody uses the attestation tier; the
// rug-pull rubric averages audit and attestation scores.
inline double metric_from_rubric(ImpactName object, const RubricInputs& inputs,
                                 const RubricTiers& tiers = {}) {
  auto audit = [&] {
    return detail::tier_score(inputs.audit_cadence, tiers.audit_scores, object,
                              "audit_cadence");
  };
  auto attestation = [&] {
    return detail::tier_score(inputs.attestation_cadence,
                              tiers.attestation_scores, object,
                              "attestation_cadence");
  };
  switch (object) {
    case ImpactName::MarketVolatility:
      return std::clamp(detail::require_fraction(inputs.normalized_psd, object,
                                                 "normalized_psd"),
                        0.0, 1.0);
    case ImpactName::PriceManipulation:
    case ImpactName::CodeVulnerability:
    case ImpactName::FlashLoan:
    case ImpactName::AccessControl:
      return audit();
    case ImpactName::GovernanceAttack: {
      const double conc = detail::require_fraction(
          inputs.top_holder_concentration, object, "top_holder_concentration");
      if (conc < 0.0 || conc > 1.0) {
        throw InputError(
            "rubric for governance_attack: top_holder_concentration must be "
            "in [0,1]");
      }
      return 0.5 * (audit() + conc);
    }
    case ImpactName::RugPull:
      return 0.5 * (audit() + attestation());
    case ImpactName::ImpactedFund:
      return attestation();
  }
  throw InputError("metric_from_rubric: unknown impact object");
}

// ---------------------------------------------------------------------------
// Assessment records and scores
// ---------------------------------------------------------------------------

struct AssessmentRecord {
  std::string symbol;
  std::map<ImpactName, double> metrics;        // m_k in [0,1], all 8 present
  std::map<ImpactName, std::string> evidence;  // free-text provenance notes
  Date as_of{};
  std::optional<double> reported_total;  // display-only companion value

  friend bool operator==(const AssessmentRecord&, const AssessmentRecord&) =
      default;

  void validate() const {
    if (symbol.empty()) throw InputError("assessment: empty symbol");
    for (ImpactName name : kImpactNames) {
      const auto it = metrics.find(name);
      if (it == metrics.end()) {
        throw InputError("assessment " + symbol + ": missing metric for " +
                         std::string(token_of(name)));
      }
      if (!std::isfinite(it->second) || it->second < 0.0 ||
          it->second > 1.0) {
        throw InputError("assessment " + symbol + ": metric for " +
                         std::string(token_of(name)) + " must be in [0,1]");
      }
    }
    if (metrics.size() != kImpactObjectCount) {
      throw InputError("assessment " + symbol +
                       ": unexpected extra metric entries");
    }
  }
};

struct UpstreamScore {
  std::string symbol;
  std::map<ImpactName, double> per_object;       // w_k * m_k
  std::map<ImpactCategory, double> per_category;  // sum over members
  double total = 0.0;                             // sum over categories
};

// Scores one record: contribution_k = weight_of(degree_k, scheme) * m_k.
// The total is the sum of the three category subtotals; no hidden terms. A
// dataset may carry a separately reported total for display, but the engine
// never uses it.
inline UpstreamScore score_upstream(const AssessmentRecord& record,
                                    std::span<const ImpactObject> objects,
                                    const WeightScheme& scheme) {
  record.validate();
  UpstreamScore score;
  score.symbol = record.symbol;
  score.per_category[ImpactCategory::PriceFluctuation] = 0.0;
  score.per_category[ImpactCategory::SmartContractIssue] = 0.0;
  score.per_category[ImpactCategory::PeripheralFactor] = 0.0;
  for (const auto& object : objects) {
    const auto it = record.metrics.find(object.name);
    if (it == record.metrics.end()) {
      throw InputError("assessment " + record.symbol +
                       ": missing metric for " +
                       std::string(token_of(object.name)));
    }
    const double contribution = weight_of(object.degree, scheme) * it->second;
    score.per_object[object.name] = contribution;
    score.per_category[object.category] += contribution;
  }
  for (const auto& [category, subtotal] : score.per_category) {
    score.total += subtotal;
  }
  return score;
}

// Descending by total; ties broken lexicographically by symbol.
inline std::vector<UpstreamScore> rank_by_total(
    std::vector<UpstreamScore> scores) {
  if (scores.empty()) throw InputError("rank_by_total: empty input");
  std::stable_sort(scores.begin(), scores.end(),
                   [](const UpstreamScore& a, const UpstreamScore& b) {
                     if (a.total != b.total) return a.total > b.total;
                     return a.symbol < b.symbol;
                   });
  return scores;
}

// PeripheralFactor subtotal / total. A zero-total score has no defined
// share; the caller receives nullopt as the explicit no-risk marker.
inline std::optional<double> peripheral_share(const UpstreamScore& score) {
  if (score.total <= 0.0) return std::nullopt;
  return score.per_category.at(ImpactCategory::PeripheralFactor) / score.total;
}

}  // namespace sclego

#endif  // SCLEGO_UPSTREAM_HPP
