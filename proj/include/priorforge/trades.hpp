#pragma once

#include "priorforge/priors.hpp"
#include "priorforge/structure.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace priorforge {

/// Payoff family whose pointwise sum is <= 0.
using Trade = PayoffFamily;
/// Payoff family with every interim expectation >= 0; no sum constraint.
using SemiTrade = PayoffFamily;

/// A (player, cell) position in an expectation table.
struct CellRef {
    PlayerIndex player = 0;
    std::size_t cell = 0;
    friend bool operator==(const CellRef&, const CellRef&) = default;
};

/// expectations[i][c] = integral of f_i against t_i on cell c.
using ExpectationTable = std::vector<std::vector<Rational>>;

ExpectationTable expectation_table(const InformationStructure& T, const PayoffFamily& f);

struct TradeClassification {
    bool is_trade = false;
    bool is_semi_trade = false;
    bool acceptable = false;
    bool weakly_agreeable = false;
    bool agreeable = false;

    ExpectationTable expectations;
    /// First state whose payoffs sum to a positive amount.
    std::optional<StateIndex> budget_violation;
    /// First cell with a negative expectation.
    std::optional<CellRef> negative_expectation;
    /// First cell with a non-positive expectation.
    std::optional<CellRef> non_positive_expectation;
    /// A cell with a strictly positive expectation (the acceptable witness).
    std::optional<CellRef> strict_expectation;
    /// First minimal component on which every expectation is positive.
    std::optional<StateSet> positive_component;
};

/// Throws DimensionError when the family does not match T.
TradeClassification classify_trade(const InformationStructure& T, const PayoffFamily& f);

struct TradeWitness {
    Trade trade;
    /// delta for agreeable and weakly agreeable synthesis, the total
    /// expectation for acceptable synthesis.
    Rational objective;
    /// The component the trade is agreeable on (weakly agreeable only).
    std::optional<StateSet> component;
};

/// Payoffs in [-1, 1]; maximize delta subject to sum_i f_i <= 0 and every
/// interim expectation >= delta. Present iff delta* > 0.
std::optional<TradeWitness> find_agreeable_trade(const InformationStructure& T);

/// Agreeable trade on the first minimal component without a common prior,
/// zero-extended to the whole state space.
std::optional<TradeWitness> find_weakly_agreeable_trade(const InformationStructure& T);

/// Maximize the sum over players and states of interim expectations subject
/// to sum_i f_i <= 0 and every expectation >= 0. Present iff the optimum is
/// positive.
std::optional<TradeWitness> find_acceptable_trade(const InformationStructure& T);

/// The value of the acceptable-trade program (0 when no acceptable trade).
Rational acceptable_trade_optimum(const InformationStructure& T);

struct MoneyPumpWitness {
    Distribution distribution;
    SemiTrade semi_trade;
    /// integral of sum_i f_i against the distribution; always < 0.
    Rational deficit;
    bool maximal = false;
    bool strongly_maximal = false;
};

/// Exact re-check: every expectation >= 0, the deficit matches and is < 0.
bool verify_money_pump(const InformationStructure& T, const MoneyPumpWitness& w);

/// Single-player structures only (PlayerCountError otherwise). Payoffs in
/// [-1, 1]; minimize the p-expectation over semi-trades.
std::optional<MoneyPumpWitness> find_single_money_pump(const InformationStructure& T, const Distribution& p);

/// Minimizes the p-expectation of sum_i f_i over semi-trades. The program
/// separates by player, so each player is solved on its own.
std::optional<MoneyPumpWitness> find_multiplayer_money_pump(const InformationStructure& T, const Distribution& p);

struct DistributionVerdict {
    std::optional<PriorWitness> common_prior;
    std::optional<MoneyPumpWitness> money_pump;
    bool maximal = false;
    bool strongly_maximal = false;

    [[nodiscard]] bool universal_prior() const { return common_prior && maximal; }
    [[nodiscard]] bool universal_pump() const { return money_pump && maximal; }
    [[nodiscard]] bool strong_prior() const { return common_prior && strongly_maximal; }
    [[nodiscard]] bool strong_pump() const { return money_pump && strongly_maximal; }
};

/// Exactly one of common prior / money pump, decided independently (closed
/// form membership vs. the pump program). Throws VerificationError if both
/// or neither hold.
DistributionVerdict classify_distribution(const InformationStructure& T, const Distribution& p);

}  // namespace priorforge
