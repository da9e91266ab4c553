#include "priorforge/report.hpp"

#include <sstream>

namespace priorforge {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok) {
        throw VerificationError(what);
    }
}

void verify_trade(const InformationStructure& T, const TradeWitness& w, bool agreeable, bool weak, const char* name)
{
    const auto c = classify_trade(T, w.trade);
    require(c.is_trade && c.acceptable, std::string(name) + " trade fails re-classification");
    require(!weak || c.weakly_agreeable, std::string(name) + " trade is not weakly agreeable");
    require(!agreeable || c.agreeable, std::string(name) + " trade is not agreeable");
}

std::string cell_label(const InformationStructure& T, PlayerIndex i, std::size_t c)
{
    return format_state_set(T, make_state_set(T.cells(i)[c]));
}

Json expectations_to_json(const InformationStructure& T, const ExpectationTable& table)
{
    Json out = Json::object();
    for (PlayerIndex i = 0; i < T.player_count(); ++i) {
        Json rows = Json::array();
        for (std::size_t c = 0; c < table[i].size(); ++c) {
            Json row;
            row["cell"] = state_set_to_json(make_state_set(T.cells(i)[c]), T);
            row["expectation"] = rational_to_json(table[i][c]);
            rows.push_back(std::move(row));
        }
        out[T.player_labels()[i]] = std::move(rows);
    }
    return out;
}

Json cell_ref_to_json(const InformationStructure& T, const std::optional<CellRef>& ref)
{
    if (!ref) {
        return nullptr;
    }
    Json out;
    out["player"] = T.player_labels()[ref->player];
    out["cell"] = state_set_to_json(make_state_set(T.cells(ref->player)[ref->cell]), T);
    return out;
}

std::string cell_ref_to_text(const InformationStructure& T, const CellRef& ref)
{
    return T.player_labels()[ref.player] + " on " + cell_label(T, ref.player, ref.cell);
}

std::string yes_no(bool b)
{
    return b ? "yes" : "no";
}

}  // namespace

AnalysisReport analyze(const InformationStructure& T, const std::optional<Distribution>& p)
{
    AnalysisReport r;
    r.structure = T;
    r.components = minimal_components(T);
    r.common_prior = find_common_prior(T);
    r.universal_prior = find_universal_common_prior(T);
    r.strong_prior = find_strong_common_prior(T);
    r.agreeable_trade = find_agreeable_trade(T);
    r.weakly_agreeable_trade = find_weakly_agreeable_trade(T);
    r.acceptable_optimum = acceptable_trade_optimum(T);
    r.acceptable_trade = find_acceptable_trade(T);

    for (const auto* w : {&r.common_prior, &r.universal_prior, &r.strong_prior}) {
        require(!*w || verify_prior_witness(T, **w), "prior witness fails re-verification");
    }
    require(!r.universal_prior || is_maximal(T, r.universal_prior->prior), "universal prior is not maximal");
    require(!r.strong_prior || is_strongly_maximal(T, r.strong_prior->prior), "strong prior is not strongly maximal");
    if (r.agreeable_trade) {
        verify_trade(T, *r.agreeable_trade, true, true, "agreeable");
    }
    if (r.weakly_agreeable_trade) {
        verify_trade(T, *r.weakly_agreeable_trade, false, true, "weakly agreeable");
    }
    if (r.acceptable_trade) {
        verify_trade(T, *r.acceptable_trade, false, false, "acceptable");
    }
    require(r.common_prior.has_value() != r.agreeable_trade.has_value(),
            "common prior and agreeable trade are not exclusive");
    require(r.universal_prior.has_value() != r.weakly_agreeable_trade.has_value(),
            "universal common prior and weakly agreeable trade are not exclusive");
    require(r.strong_prior.has_value() != r.acceptable_trade.has_value(),
            "strong common prior and acceptable trade are not exclusive");
    if (p) {
        r.distribution = classify_distribution(T, *p);
        if (r.distribution->money_pump) {
            require(verify_money_pump(T, *r.distribution->money_pump), "money pump fails re-verification");
        }
    }
    return r;
}

std::string format_state_set(const InformationStructure& T, const StateSet& S)
{
    std::string out = "{";
    for (std::size_t k = 0; k < S.size(); ++k) {
        out += (k ? "," : "") + T.state_labels().at(S[k]);
    }
    return out + "}";
}

std::string format_vector(std::span<const Rational> values)
{
    std::string out = "(";
    for (std::size_t k = 0; k < values.size(); ++k) {
        out += (k ? ", " : "") + values[k].str();
    }
    return out + ")";
}

Json prior_witness_to_json(const InformationStructure& T, const PriorWitness& w)
{
    Json out;
    out["prior"] = distribution_to_json(w.prior, T);
    Json weights = Json::object();
    for (PlayerIndex i = 0; i < T.player_count(); ++i) {
        Json rows = Json::array();
        for (std::size_t c = 0; c < w.hull_weights[i].size(); ++c) {
            Json row;
            row["cell"] = state_set_to_json(make_state_set(T.cells(i)[c]), T);
            row["weight"] = rational_to_json(w.hull_weights[i][c]);
            rows.push_back(std::move(row));
        }
        weights[T.player_labels()[i]] = std::move(rows);
    }
    out["hull_weights"] = std::move(weights);
    return out;
}

Json classification_to_json(const InformationStructure& T, const TradeClassification& c)
{
    Json out;
    Json flags;
    flags["trade"] = c.is_trade;
    flags["semi_trade"] = c.is_semi_trade;
    flags["acceptable"] = c.acceptable;
    flags["weakly_agreeable"] = c.weakly_agreeable;
    flags["agreeable"] = c.agreeable;
    out["flags"] = std::move(flags);
    Json evidence;
    evidence["budget_violation"] =
        c.budget_violation ? Json(T.state_labels()[*c.budget_violation]) : Json(nullptr);
    evidence["negative_expectation"] = cell_ref_to_json(T, c.negative_expectation);
    evidence["non_positive_expectation"] = cell_ref_to_json(T, c.non_positive_expectation);
    evidence["strict_expectation"] = cell_ref_to_json(T, c.strict_expectation);
    evidence["positive_component"] = c.positive_component ? state_set_to_json(*c.positive_component, T) : Json(nullptr);
    out["evidence"] = std::move(evidence);
    out["expectations"] = expectations_to_json(T, c.expectations);
    return out;
}

Json trade_witness_to_json(const InformationStructure& T, const TradeWitness& w)
{
    Json out;
    out["payoffs"] = payoffs_to_json(w.trade, T);
    out["objective"] = rational_to_json(w.objective);
    if (w.component) {
        out["component"] = state_set_to_json(*w.component, T);
    }
    out["classification"] = classification_to_json(T, classify_trade(T, w.trade));
    return out;
}

Json money_pump_to_json(const InformationStructure& T, const MoneyPumpWitness& w)
{
    Json out;
    out["distribution"] = distribution_to_json(w.distribution, T);
    out["semi_trade"] = payoffs_to_json(w.semi_trade, T);
    out["deficit"] = rational_to_json(w.deficit);
    out["maximal"] = w.maximal;
    out["strongly_maximal"] = w.strongly_maximal;
    out["expectations"] = expectations_to_json(T, expectation_table(T, w.semi_trade));
    return out;
}

Json prior_flags_to_json(const InformationStructure& T, const PriorFlags& flags)
{
    Json out;
    Json per = Json::object();
    for (PlayerIndex i = 0; i < T.player_count(); ++i) {
        per[T.player_labels()[i]] = static_cast<bool>(flags.prior_for[i]);
    }
    out["prior_for"] = std::move(per);
    out["common"] = flags.common;
    out["maximal"] = flags.maximal;
    out["strongly_maximal"] = flags.strongly_maximal;
    out["universal"] = flags.universal;
    out["strong"] = flags.strong;
    return out;
}

Json verdict_to_json(const InformationStructure& T, const DistributionVerdict& v)
{
    Json out;
    out["maximal"] = v.maximal;
    out["strongly_maximal"] = v.strongly_maximal;
    out["common_prior"] = v.common_prior.has_value();
    out["money_pump"] = v.money_pump.has_value();
    out["universal"] = v.maximal ? Json(v.universal_prior() ? "universal common prior" : "universal money pump")
                                 : Json(nullptr);
    out["strong"] = v.strongly_maximal ? Json(v.strong_prior() ? "strong common prior" : "strong money pump")
                                       : Json(nullptr);
    if (v.common_prior) {
        out["prior_witness"] = prior_witness_to_json(T, *v.common_prior);
    }
    if (v.money_pump) {
        out["pump_witness"] = money_pump_to_json(T, *v.money_pump);
    }
    return out;
}

Json components_to_json(const InformationStructure& T, const ComponentCatalog& catalog)
{
    Json out = Json::array();
    for (const auto& S : catalog.minimal) {
        out.push_back(state_set_to_json(S, T));
    }
    return out;
}

Json cross_check_to_json(const CrossCheckReport& r)
{
    Json out;
    out["passed"] = r.passed;
    out["failures"] = r.failures;
    out["verification_errors"] = r.verification_errors;
    Json notions;
    notions["common_prior"] = r.common_prior;
    notions["universal_prior"] = r.universal_prior;
    notions["strong_prior"] = r.strong_prior;
    notions["agreeable_trade"] = r.agreeable_trade;
    notions["weakly_agreeable_trade"] = r.weakly_agreeable_trade;
    notions["acceptable_trade"] = r.acceptable_trade;
    out["notions"] = std::move(notions);
    Json samples;
    samples["total"] = r.samples;
    samples["pumps"] = r.pumps;
    samples["maximal"] = r.maximal_samples;
    samples["maximal_pumps"] = r.maximal_pumps;
    samples["strongly_maximal"] = r.strongly_maximal_samples;
    samples["strongly_maximal_pumps"] = r.strongly_maximal_pumps;
    samples["single_player_checks"] = r.single_player_checks;
    samples["conglomerability_checks"] = r.conglomerability_checks;
    out["samples"] = std::move(samples);
    return out;
}

Json fuzz_to_json(const FuzzOutcome& outcome)
{
    Json out;
    out["seed"] = outcome.seed;
    out["states"] = outcome.structure.state_count();
    out["players"] = outcome.structure.player_count();
    out["report"] = cross_check_to_json(outcome.report);
    if (!outcome.report.passed) {
        out["structure"] = structure_to_json(outcome.structure);
    }
    if (outcome.minimized) {
        out["minimized"] = structure_to_json(*outcome.minimized);
    }
    return out;
}

Json report_to_json(const AnalysisReport& r)
{
    const InformationStructure& T = r.structure;
    Json out;
    out["schema"] = kSchemaTag;
    Json digest;
    digest["states"] = T.state_labels();
    digest["players"] = T.player_labels();
    Json sizes = Json::object();
    for (PlayerIndex i = 0; i < T.player_count(); ++i) {
        Json cells = Json::array();
        for (const auto& cell : T.cells(i)) {
            cells.push_back(cell.size());
        }
        sizes[T.player_labels()[i]] = std::move(cells);
    }
    digest["partition_sizes"] = std::move(sizes);
    out["structure"] = std::move(digest);
    out["minimal_components"] = components_to_json(T, r.components);

    auto prior_entry = [&](const std::optional<PriorWitness>& w) {
        Json e;
        e["holds"] = w.has_value();
        e["witness"] = w ? prior_witness_to_json(T, *w) : Json(nullptr);
        return e;
    };
    auto trade_entry = [&](const std::optional<TradeWitness>& w) {
        Json e;
        e["exists"] = w.has_value();
        e["witness"] = w ? trade_witness_to_json(T, *w) : Json(nullptr);
        return e;
    };
    Json priors;
    priors["common"] = prior_entry(r.common_prior);
    priors["universal"] = prior_entry(r.universal_prior);
    priors["strong"] = prior_entry(r.strong_prior);
    out["priors"] = std::move(priors);
    Json trades;
    trades["agreeable"] = trade_entry(r.agreeable_trade);
    trades["weakly_agreeable"] = trade_entry(r.weakly_agreeable_trade);
    trades["acceptable"] = trade_entry(r.acceptable_trade);
    trades["acceptable_optimum"] = rational_to_json(r.acceptable_optimum);
    out["trades"] = std::move(trades);
    if (r.distribution) {
        out["distribution"] = verdict_to_json(T, *r.distribution);
    }
    return out;
}

std::string prior_witness_to_text(const InformationStructure& T, const PriorWitness& w)
{
    std::ostringstream out;
    out << "  prior " << format_vector(w.prior.mass()) << "\n";
    for (PlayerIndex i = 0; i < T.player_count(); ++i) {
        out << "  weights " << T.player_labels()[i] << ":";
        for (std::size_t c = 0; c < w.hull_weights[i].size(); ++c) {
            out << " " << cell_label(T, i, c) << "=" << w.hull_weights[i][c];
        }
        out << "\n";
    }
    return out.str();
}

std::string classification_to_text(const InformationStructure& T, const TradeClassification& c)
{
    std::ostringstream out;
    out << "  trade " << yes_no(c.is_trade) << ", semi-trade " << yes_no(c.is_semi_trade) << ", acceptable "
        << yes_no(c.acceptable) << ", weakly agreeable " << yes_no(c.weakly_agreeable) << ", agreeable "
        << yes_no(c.agreeable) << "\n";
    if (c.budget_violation) {
        out << "  payoffs sum above 0 at " << T.state_labels()[*c.budget_violation] << "\n";
    }
    if (c.negative_expectation) {
        out << "  negative expectation: " << cell_ref_to_text(T, *c.negative_expectation) << "\n";
    }
    if (c.positive_component) {
        out << "  all expectations positive on " << format_state_set(T, *c.positive_component) << "\n";
    }
    for (PlayerIndex i = 0; i < T.player_count(); ++i) {
        out << "  E[" << T.player_labels()[i] << "]:";
        for (std::size_t k = 0; k < c.expectations[i].size(); ++k) {
            out << " " << cell_label(T, i, k) << "=" << c.expectations[i][k];
        }
        out << "\n";
    }
    return out.str();
}

std::string trade_witness_to_text(const InformationStructure& T, const TradeWitness& w)
{
    std::ostringstream out;
    for (PlayerIndex i = 0; i < T.player_count(); ++i) {
        out << "  f_" << T.player_labels()[i] << " = " << format_vector(w.trade.payoffs[i].values()) << "\n";
    }
    out << "  objective " << w.objective << "\n";
    if (w.component) {
        out << "  agreeable on " << format_state_set(T, *w.component) << "\n";
    }
    out << classification_to_text(T, classify_trade(T, w.trade));
    return out.str();
}

std::string money_pump_to_text(const InformationStructure& T, const MoneyPumpWitness& w)
{
    std::ostringstream out;
    out << "  p = " << format_vector(w.distribution.mass()) << " (maximal " << yes_no(w.maximal)
        << ", strongly maximal " << yes_no(w.strongly_maximal) << ")\n";
    for (PlayerIndex i = 0; i < T.player_count(); ++i) {
        out << "  f_" << T.player_labels()[i] << " = " << format_vector(w.semi_trade.payoffs[i].values()) << "\n";
    }
    out << "  deficit " << w.deficit << "\n";
    return out.str();
}

std::string verdict_to_text(const InformationStructure& T, const DistributionVerdict& v)
{
    std::ostringstream out;
    out << "distribution: " << (v.common_prior ? "common prior" : "multiplayer money pump") << "\n";
    out << "  maximal " << yes_no(v.maximal) << ", strongly maximal " << yes_no(v.strongly_maximal) << "\n";
    if (v.maximal) {
        out << "  " << (v.universal_prior() ? "universal common prior" : "universal money pump") << "\n";
    }
    if (v.strongly_maximal) {
        out << "  " << (v.strong_prior() ? "strong common prior" : "strong money pump") << "\n";
    }
    if (v.common_prior) {
        out << prior_witness_to_text(T, *v.common_prior);
    }
    if (v.money_pump) {
        out << money_pump_to_text(T, *v.money_pump);
    }
    return out.str();
}

std::string report_to_text(const AnalysisReport& r)
{
    const InformationStructure& T = r.structure;
    std::ostringstream out;
    out << "structure: " << T.state_count() << " states, " << T.player_count() << " players\n";
    for (PlayerIndex i = 0; i < T.player_count(); ++i) {
        out << "  " << T.player_labels()[i] << ":";
        for (std::size_t c = 0; c < T.cells(i).size(); ++c) {
            out << " " << cell_label(T, i, c);
        }
        out << "\n";
    }
    out << "minimal components:";
    for (const auto& S : r.components.minimal) {
        out << " " << format_state_set(T, S);
    }
    out << "\n";
    auto prior_line = [&](const char* name, const std::optional<PriorWitness>& w) {
        out << name << ": " << yes_no(w.has_value()) << "\n";
        if (w) {
            out << prior_witness_to_text(T, *w);
        }
    };
    auto trade_line = [&](const char* name, const std::optional<TradeWitness>& w) {
        out << name << ": " << (w ? "found" : "none") << "\n";
        if (w) {
            out << trade_witness_to_text(T, *w);
        }
    };
    prior_line("common prior", r.common_prior);
    prior_line("universal common prior", r.universal_prior);
    prior_line("strong common prior", r.strong_prior);
    trade_line("agreeable trade", r.agreeable_trade);
    trade_line("weakly agreeable trade", r.weakly_agreeable_trade);
    trade_line("acceptable trade", r.acceptable_trade);
    out << "acceptable trade optimum: " << r.acceptable_optimum << "\n";
    if (r.distribution) {
        out << verdict_to_text(T, *r.distribution);
    }
    return out.str();
}

}  // namespace priorforge
