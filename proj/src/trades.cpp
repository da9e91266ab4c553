#include "priorforge/trades.hpp"

#include "priorforge/certainty.hpp"

namespace priorforge {

namespace {

void require_family(const InformationStructure& T, const PayoffFamily& f)
{
    if (f.payoffs.size() != T.player_count()) {
        throw DimensionError("payoff family has " + std::to_string(f.payoffs.size()) + " players, the structure has " +
                             std::to_string(T.player_count()));
    }
    for (const auto& v : f.payoffs) {
        if (v.size() != T.state_count()) {
            throw DimensionError("payoff vector has " + std::to_string(v.size()) + " entries, the structure has " +
                                 std::to_string(T.state_count()) + " states");
        }
    }
}

// Variable index of f_i(s) in the payoff programs.
std::size_t var(const InformationStructure& T, PlayerIndex i, StateIndex s)
{
    return i * T.state_count() + s;
}

lp::LinearProgram payoff_program(const InformationStructure& T, const std::string& name)
{
    lp::LinearProgram program;
    program.name = name;
    for (PlayerIndex i = 0; i < T.player_count(); ++i) {
        for (StateIndex s = 0; s < T.state_count(); ++s) {
            program.add_variable("f_" + T.player_labels()[i] + "_" + T.state_labels()[s], Rational(-1), Rational(1));
        }
    }
    return program;
}

std::vector<Rational> expectation_row(const InformationStructure& T, PlayerIndex i, std::size_t c, std::size_t width)
{
    std::vector<Rational> row(width);
    const Distribution& t = T.cell_type(i, c);
    for (StateIndex s : T.cells(i)[c]) {
        row[var(T, i, s)] = t[s];
    }
    return row;
}

void add_budget_rows(const InformationStructure& T, lp::LinearProgram& program)
{
    for (StateIndex s = 0; s < T.state_count(); ++s) {
        std::vector<Rational> row(program.variable_count());
        for (PlayerIndex i = 0; i < T.player_count(); ++i) {
            row[var(T, i, s)] = 1;
        }
        program.add_constraint(std::move(row), lp::Relation::LessEqual, 0, "budget_" + T.state_labels()[s]);
    }
}

Trade read_family(const InformationStructure& T, const std::vector<Rational>& x)
{
    Trade f;
    for (PlayerIndex i = 0; i < T.player_count(); ++i) {
        std::vector<Rational> values(x.begin() + static_cast<std::ptrdiff_t>(var(T, i, 0)),
                                     x.begin() + static_cast<std::ptrdiff_t>(var(T, i, 0) + T.state_count()));
        f.payoffs.emplace_back(std::move(values));
    }
    return f;
}

lp::Outcome solve_checked(const lp::LinearProgram& program)
{
    auto outcome = lp::solve(program);
    if (outcome.status != lp::Status::Optimal) {
        throw VerificationError("program '" + program.name + "' is bounded and feasible but solved as " +
                                lp::to_string(outcome.status));
    }
    return outcome;
}

}  // namespace

ExpectationTable expectation_table(const InformationStructure& T, const PayoffFamily& f)
{
    require_family(T, f);
    ExpectationTable table(T.player_count());
    for (PlayerIndex i = 0; i < T.player_count(); ++i) {
        for (std::size_t c = 0; c < T.cells(i).size(); ++c) {
            table[i].push_back(expectation(f.payoffs[i], T.cell_type(i, c)));
        }
    }
    return table;
}

TradeClassification classify_trade(const InformationStructure& T, const PayoffFamily& f)
{
    TradeClassification out;
    out.expectations = expectation_table(T, f);
    for (StateIndex s = 0; s < T.state_count() && !out.budget_violation; ++s) {
        if (f.pointwise_sum(s).sign() > 0) {
            out.budget_violation = s;
        }
    }
    out.is_trade = !out.budget_violation;
    for (PlayerIndex i = 0; i < T.player_count(); ++i) {
        for (std::size_t c = 0; c < out.expectations[i].size(); ++c) {
            const int sign = out.expectations[i][c].sign();
            if (sign < 0 && !out.negative_expectation) {
                out.negative_expectation = CellRef{i, c};
            }
            if (sign <= 0 && !out.non_positive_expectation) {
                out.non_positive_expectation = CellRef{i, c};
            }
            if (sign > 0 && !out.strict_expectation) {
                out.strict_expectation = CellRef{i, c};
            }
        }
    }
    out.is_semi_trade = !out.negative_expectation;
    out.agreeable = !out.non_positive_expectation;
    out.acceptable = out.is_semi_trade && out.strict_expectation.has_value();
    for (const auto& S : minimal_components(T).minimal) {
        bool positive = true;
        for (PlayerIndex i = 0; i < T.player_count() && positive; ++i) {
            for (StateIndex s : S) {
                if (out.expectations[i][T.cell_index(i, s)].sign() <= 0) {
                    positive = false;
                    break;
                }
            }
        }
        if (positive) {
            out.positive_component = S;
            break;
        }
    }
    out.weakly_agreeable = out.positive_component.has_value();
    return out;
}

std::optional<TradeWitness> find_agreeable_trade(const InformationStructure& T)
{
    auto program = payoff_program(T, "agreeable_trade");
    const std::size_t delta = program.add_variable("delta", Rational(-1), Rational(1));
    add_budget_rows(T, program);
    for (PlayerIndex i = 0; i < T.player_count(); ++i) {
        for (std::size_t c = 0; c < T.cells(i).size(); ++c) {
            auto row = expectation_row(T, i, c, program.variable_count());
            row[delta] = -1;
            program.add_constraint(std::move(row), lp::Relation::GreaterEqual, 0,
                                   "interim_" + T.player_labels()[i] + "_" + std::to_string(c));
        }
    }
    std::vector<Rational> objective(program.variable_count());
    objective[delta] = 1;
    program.set_objective(lp::Sense::Maximize, std::move(objective));

    const auto outcome = solve_checked(program);
    if (outcome.objective_value->sign() <= 0) {
        return std::nullopt;
    }
    TradeWitness w{read_family(T, outcome.primal), *outcome.objective_value, std::nullopt};
    const auto check = classify_trade(T, w.trade);
    if (!check.is_trade || !check.agreeable) {
        throw VerificationError("synthesized agreeable trade fails re-classification");
    }
    return w;
}

std::optional<TradeWitness> find_weakly_agreeable_trade(const InformationStructure& T)
{
    for (const auto& S : minimal_components(T).minimal) {
        const auto sub = induced_substructure(T, S);
        const auto local = find_agreeable_trade(sub);
        if (!local) {
            continue;
        }
        TradeWitness w{{}, local->objective, S};
        for (const auto& f : local->trade.payoffs) {
            w.trade.payoffs.emplace_back(zero_extend(f.values(), S, T.state_count()));
        }
        const auto check = classify_trade(T, w.trade);
        if (!check.is_trade || !check.weakly_agreeable || !check.acceptable) {
            throw VerificationError("synthesized weakly agreeable trade fails re-classification");
        }
        return w;
    }
    return std::nullopt;
}

namespace {

lp::Outcome solve_acceptable(const InformationStructure& T)
{
    auto program = payoff_program(T, "acceptable_trade");
    add_budget_rows(T, program);
    std::vector<Rational> objective(program.variable_count());
    for (PlayerIndex i = 0; i < T.player_count(); ++i) {
        const auto cells = T.cells(i);
        for (std::size_t c = 0; c < cells.size(); ++c) {
            auto row = expectation_row(T, i, c, program.variable_count());
            const Rational weight(static_cast<std::int64_t>(cells[c].size()));
            for (std::size_t k = 0; k < row.size(); ++k) {
                objective[k] += weight * row[k];
            }
            program.add_constraint(std::move(row), lp::Relation::GreaterEqual, 0,
                                   "interim_" + T.player_labels()[i] + "_" + std::to_string(c));
        }
    }
    program.set_objective(lp::Sense::Maximize, std::move(objective));
    return solve_checked(program);
}

}  // namespace

std::optional<TradeWitness> find_acceptable_trade(const InformationStructure& T)
{
    const auto outcome = solve_acceptable(T);
    if (outcome.objective_value->sign() <= 0) {
        return std::nullopt;
    }
    TradeWitness w{read_family(T, outcome.primal), *outcome.objective_value, std::nullopt};
    const auto check = classify_trade(T, w.trade);
    if (!check.is_trade || !check.acceptable) {
        throw VerificationError("synthesized acceptable trade fails re-classification");
    }
    return w;
}

Rational acceptable_trade_optimum(const InformationStructure& T)
{
    return *solve_acceptable(T).objective_value;
}

bool verify_money_pump(const InformationStructure& T, const MoneyPumpWitness& w)
{
    if (w.distribution.size() != T.state_count()) {
        return false;
    }
    const auto check = classify_trade(T, w.semi_trade);
    if (!check.is_semi_trade) {
        return false;
    }
    Rational total;
    for (const auto& f : w.semi_trade.payoffs) {
        total += expectation(f, w.distribution);
    }
    return total == w.deficit && total.sign() < 0 && w.maximal == is_maximal(T, w.distribution) &&
           w.strongly_maximal == is_strongly_maximal(T, w.distribution);
}

namespace {

// min over semi-payoffs of player i of the p-expectation; returns the payoff.
std::pair<PayoffVector, Rational> cheapest_semi_payoff(const InformationStructure& T, PlayerIndex i,
                                                       const Distribution& p)
{
    const std::size_t M = T.state_count();
    lp::LinearProgram program;
    program.name = "money_pump_" + T.player_labels()[i];
    for (StateIndex s = 0; s < M; ++s) {
        program.add_variable("f_" + T.state_labels()[s], Rational(-1), Rational(1));
    }
    const auto cells = T.cells(i);
    for (std::size_t c = 0; c < cells.size(); ++c) {
        std::vector<Rational> row(M);
        const Distribution& t = T.cell_type(i, c);
        for (StateIndex s : cells[c]) {
            row[s] = t[s];
        }
        program.add_constraint(std::move(row), lp::Relation::GreaterEqual, 0, "interim_" + std::to_string(c));
    }
    program.set_objective(lp::Sense::Minimize, std::vector<Rational>(p.mass().begin(), p.mass().end()));
    const auto outcome = solve_checked(program);
    return {PayoffVector(outcome.primal), *outcome.objective_value};
}

}  // namespace

std::optional<MoneyPumpWitness> find_single_money_pump(const InformationStructure& T, const Distribution& p)
{
    if (T.player_count() != 1) {
        throw PlayerCountError("single-player money pump needs a single-player structure, got " +
                               std::to_string(T.player_count()) + " players");
    }
    return find_multiplayer_money_pump(T, p);
}

std::optional<MoneyPumpWitness> find_multiplayer_money_pump(const InformationStructure& T, const Distribution& p)
{
    if (p.size() != T.state_count()) {
        throw DimensionError("distribution has " + std::to_string(p.size()) + " entries, the structure has " +
                             std::to_string(T.state_count()) + " states");
    }
    SemiTrade f;
    Rational deficit;
    for (PlayerIndex i = 0; i < T.player_count(); ++i) {
        auto [payoff, value] = cheapest_semi_payoff(T, i, p);
        f.payoffs.push_back(std::move(payoff));
        deficit += value;
    }
    if (deficit.sign() >= 0) {
        return std::nullopt;
    }
    MoneyPumpWitness w{p, std::move(f), deficit, is_maximal(T, p), is_strongly_maximal(T, p)};
    if (!verify_money_pump(T, w)) {
        throw VerificationError("synthesized money pump fails re-verification");
    }
    return w;
}

DistributionVerdict classify_distribution(const InformationStructure& T, const Distribution& p)
{
    DistributionVerdict v;
    const auto flags = classify_prior(T, p);
    v.maximal = flags.maximal;
    v.strongly_maximal = flags.strongly_maximal;
    if (flags.common) {
        PriorWitness w{p, {}};
        for (PlayerIndex i = 0; i < T.player_count(); ++i) {
            w.hull_weights.push_back(hull_weights(T, i, p));
        }
        if (!verify_prior_witness(T, w)) {
            throw VerificationError("common prior membership fails re-verification");
        }
        v.common_prior = std::move(w);
    }
    v.money_pump = find_multiplayer_money_pump(T, p);
    if (v.common_prior.has_value() == v.money_pump.has_value()) {
        throw VerificationError(v.common_prior ? "distribution is both a common prior and a money pump"
                                               : "distribution is neither a common prior nor a money pump");
    }
    return v;
}

}  // namespace priorforge
