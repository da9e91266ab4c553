#pragma once

#include "priorforge/certainty.hpp"
#include "priorforge/harness.hpp"
#include "priorforge/json_io.hpp"
#include "priorforge/priors.hpp"
#include "priorforge/trades.hpp"

#include <optional>
#include <string>

namespace priorforge {

/// Everything the library can say about one structure (and optionally one
/// distribution over it).
struct AnalysisReport {
    InformationStructure structure;
    ComponentCatalog components;
    std::optional<PriorWitness> common_prior;
    std::optional<PriorWitness> universal_prior;
    std::optional<PriorWitness> strong_prior;
    std::optional<TradeWitness> agreeable_trade;
    std::optional<TradeWitness> weakly_agreeable_trade;
    std::optional<TradeWitness> acceptable_trade;
    Rational acceptable_optimum;
    std::optional<DistributionVerdict> distribution;
};

/// Runs every analysis, re-verifies each witness and the exactly-one
/// pairings between prior notions and trades. Throws VerificationError if
/// anything fails to re-check.
AnalysisReport analyze(const InformationStructure& T, const std::optional<Distribution>& p = std::nullopt);

Json prior_witness_to_json(const InformationStructure& T, const PriorWitness& w);
Json classification_to_json(const InformationStructure& T, const TradeClassification& c);
Json trade_witness_to_json(const InformationStructure& T, const TradeWitness& w);
Json money_pump_to_json(const InformationStructure& T, const MoneyPumpWitness& w);
Json prior_flags_to_json(const InformationStructure& T, const PriorFlags& flags);
Json verdict_to_json(const InformationStructure& T, const DistributionVerdict& v);
Json components_to_json(const InformationStructure& T, const ComponentCatalog& catalog);
Json cross_check_to_json(const CrossCheckReport& r);
Json fuzz_to_json(const FuzzOutcome& outcome);
Json report_to_json(const AnalysisReport& r);

/// Human-readable renderings; rationals always as a/b.
std::string format_state_set(const InformationStructure& T, const StateSet& S);
std::string format_vector(std::span<const Rational> values);
std::string prior_witness_to_text(const InformationStructure& T, const PriorWitness& w);
std::string trade_witness_to_text(const InformationStructure& T, const TradeWitness& w);
std::string classification_to_text(const InformationStructure& T, const TradeClassification& c);
std::string money_pump_to_text(const InformationStructure& T, const MoneyPumpWitness& w);
std::string verdict_to_text(const InformationStructure& T, const DistributionVerdict& v);
std::string report_to_text(const AnalysisReport& r);

}  // namespace priorforge
