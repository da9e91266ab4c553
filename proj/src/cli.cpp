#include "priorforge/cli.hpp"

#include "priorforge/report.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <ostream>
#include <sstream>

namespace priorforge::cli {

namespace {

struct Options {
    bool json = false;
    bool dump_lp = false;
    std::string structure;
    std::string kind;
    std::string dist;
    std::string trade;
    std::string check;
    std::string require;
    std::string seeds = "1..100";
    std::size_t all_upto = 0;
    std::size_t max_states = 6;
    std::size_t max_players = 3;
    std::int64_t denominator_bound = 6;
    std::size_t samples = 3;
};

void emit(std::ostream& out, const Options& o, const Json& doc, const std::string& text)
{
    if (o.json) {
        out << doc.dump(2) << "\n";
    } else {
        out << text;
    }
}

std::pair<std::uint64_t, std::uint64_t> parse_seeds(const std::string& spec)
{
    const auto dots = spec.find("..");
    auto number = [&](std::string_view s) {
        std::uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
            throw ParseError("--seeds expects a..b or a single seed, got '" + spec + "'");
        }
        return v;
    };
    if (dots == std::string::npos) {
        const auto v = number(spec);
        return {v, v};
    }
    const auto a = number(std::string_view(spec).substr(0, dots));
    const auto b = number(std::string_view(spec).substr(dots + 2));
    if (b < a) {
        throw ParseError("--seeds range is empty: '" + spec + "'");
    }
    return {a, b};
}

std::string prior_label(const std::string& kind)
{
    return kind == "common" ? "common prior" : kind + " common prior";
}

int cmd_check(const Options& o, std::ostream& out)
{
    const auto T = load_structure(o.structure);
    Json doc;
    doc["command"] = "check";
    doc["valid"] = true;
    doc["states"] = T.state_count();
    doc["players"] = T.player_count();
    std::ostringstream text;
    text << "valid: " << T.state_count() << " states, " << T.player_count() << " players\n";
    emit(out, o, doc, text.str());
    return kOk;
}

int cmd_components(const Options& o, std::ostream& out)
{
    const auto T = load_structure(o.structure);
    const auto catalog = minimal_components(T);
    Json doc;
    doc["command"] = "components";
    doc["minimal"] = components_to_json(T, catalog);
    std::ostringstream text;
    text << "minimal components:";
    for (const auto& S : catalog.minimal) {
        text << " " << format_state_set(T, S);
    }
    text << "\n";
    if (o.all_upto > 0) {
        const auto all = all_components(T, o.all_upto);
        Json list = Json::array();
        text << "all components:";
        for (const auto& S : all) {
            list.push_back(state_set_to_json(S, T));
            text << " " << format_state_set(T, S);
        }
        text << "\n";
        doc["all"] = std::move(list);
    }
    emit(out, o, doc, text.str());
    return kOk;
}

int cmd_prior(const Options& o, std::ostream& out)
{
    const auto T = load_structure(o.structure);
    Json doc;
    doc["command"] = "prior";
    doc["kind"] = o.kind;
    std::ostringstream text;

    if (!o.check.empty()) {
        const auto p = load_distribution(o.check, T);
        const auto flags = classify_prior(T, p);
        const bool holds = o.kind == "common" ? flags.common : o.kind == "universal" ? flags.universal : flags.strong;
        doc["holds"] = holds;
        doc["flags"] = prior_flags_to_json(T, flags);
        text << prior_label(o.kind) << ": " << (holds ? "yes" : "no") << "\n";
        for (PlayerIndex i = 0; i < T.player_count(); ++i) {
            text << "  prior for " << T.player_labels()[i] << ": " << (flags.prior_for[i] ? "yes" : "no") << "\n";
        }
        text << "  maximal: " << (flags.maximal ? "yes" : "no")
             << ", strongly maximal: " << (flags.strongly_maximal ? "yes" : "no") << "\n";
        if (!flags.common) {
            const auto pump = find_multiplayer_money_pump(T, p);
            if (!pump) {
                throw VerificationError("distribution is neither a common prior nor a money pump");
            }
            doc["refutation"] = {{"kind", "money_pump"}, {"witness", money_pump_to_json(T, *pump)}};
            text << "refutation: multiplayer money pump\n" << money_pump_to_text(T, *pump);
        }
        emit(out, o, doc, text.str());
        return holds ? kOk : kNotionFails;
    }

    std::optional<PriorWitness> w;
    std::optional<TradeWitness> refutation;
    std::string refutation_kind;
    if (o.kind == "common") {
        w = find_common_prior(T);
        if (!w) {
            refutation = find_agreeable_trade(T);
            refutation_kind = "agreeable_trade";
        }
    } else if (o.kind == "universal") {
        w = find_universal_common_prior(T);
        if (!w) {
            refutation = find_weakly_agreeable_trade(T);
            refutation_kind = "weakly_agreeable_trade";
        }
    } else {
        w = find_strong_common_prior(T);
        if (!w) {
            refutation = find_acceptable_trade(T);
            refutation_kind = "acceptable_trade";
        }
    }
    doc["holds"] = w.has_value();
    text << prior_label(o.kind) << ": " << (w ? "yes" : "no") << "\n";
    if (w) {
        doc["witness"] = prior_witness_to_json(T, *w);
        text << prior_witness_to_text(T, *w);
        emit(out, o, doc, text.str());
        return kOk;
    }
    if (!refutation) {
        throw VerificationError("no " + o.kind + " common prior and no dual trade");
    }
    doc["refutation"] = {{"kind", refutation_kind}, {"witness", trade_witness_to_json(T, *refutation)}};
    text << "refutation: " << refutation_kind << "\n" << trade_witness_to_text(T, *refutation);
    emit(out, o, doc, text.str());
    return kNotionFails;
}

int cmd_trade(const Options& o, std::ostream& out)
{
    const auto T = load_structure(o.structure);
    std::optional<TradeWitness> w;
    std::optional<PriorWitness> refutation;
    std::string refutation_kind;
    if (o.kind == "agreeable") {
        w = find_agreeable_trade(T);
        if (!w) {
            refutation = find_common_prior(T);
            refutation_kind = "common_prior";
        }
    } else if (o.kind == "weak") {
        w = find_weakly_agreeable_trade(T);
        if (!w) {
            refutation = find_universal_common_prior(T);
            refutation_kind = "universal_common_prior";
        }
    } else {
        w = find_acceptable_trade(T);
        if (!w) {
            refutation = find_strong_common_prior(T);
            refutation_kind = "strong_common_prior";
        }
    }
    Json doc;
    doc["command"] = "trade";
    doc["kind"] = o.kind;
    doc["exists"] = w.has_value();
    std::ostringstream text;
    text << o.kind << " trade: " << (w ? "found" : "none") << "\n";
    if (w) {
        doc["witness"] = trade_witness_to_json(T, *w);
        text << trade_witness_to_text(T, *w);
        emit(out, o, doc, text.str());
        return kOk;
    }
    if (!refutation) {
        throw VerificationError("no " + o.kind + " trade and no dual prior");
    }
    doc["refutation"] = {{"kind", refutation_kind}, {"witness", prior_witness_to_json(T, *refutation)}};
    text << "refutation: " << refutation_kind << "\n" << prior_witness_to_text(T, *refutation);
    emit(out, o, doc, text.str());
    return kNotionFails;
}

int cmd_pump(const Options& o, std::ostream& out)
{
    const auto T = load_structure(o.structure);
    const auto p = load_distribution(o.dist, T);
    const auto v = classify_distribution(T, p);
    bool holds = v.money_pump.has_value();
    std::string reason;
    if (o.require == "maximal" && !v.maximal) {
        holds = false;
        reason = "distribution is not maximal";
    } else if (o.require == "strong" && !v.strongly_maximal) {
        holds = false;
        reason = "distribution is not strongly maximal";
    }
    Json doc;
    doc["command"] = "pump";
    doc["require"] = o.require.empty() ? Json(nullptr) : Json(o.require);
    doc["holds"] = holds;
    if (!reason.empty()) {
        doc["reason"] = reason;
    }
    doc["verdict"] = verdict_to_json(T, v);
    std::ostringstream text;
    text << "money pump: " << (holds ? "yes" : "no") << "\n";
    if (!reason.empty()) {
        text << "  " << reason << "\n";
    }
    text << verdict_to_text(T, v);
    emit(out, o, doc, text.str());
    return holds ? kOk : kNotionFails;
}

int cmd_classify(const Options& o, std::ostream& out)
{
    if (o.trade.empty() && o.dist.empty()) {
        throw std::invalid_argument("classify needs --trade, --dist or both");
    }
    const auto T = load_structure(o.structure);
    Json doc;
    doc["command"] = "classify";
    std::ostringstream text;
    if (!o.trade.empty()) {
        const auto f = load_payoffs(o.trade, T);
        const auto c = classify_trade(T, f);
        doc["trade"] = classification_to_json(T, c);
        text << "trade classification:\n" << classification_to_text(T, c);
    }
    if (!o.dist.empty()) {
        const auto p = load_distribution(o.dist, T);
        const auto v = classify_distribution(T, p);
        doc["distribution"] = verdict_to_json(T, v);
        text << verdict_to_text(T, v);
    }
    emit(out, o, doc, text.str());
    return kOk;
}

int cmd_fuzz(const Options& o, std::ostream& out)
{
    const auto [first, last] = parse_seeds(o.seeds);
    GeneratorConfig cfg;
    cfg.max_states = o.max_states;
    cfg.max_players = o.max_players;
    cfg.denominator_bound = o.denominator_bound;
    CrossCheckOptions options;
    options.samples = o.samples;
    bool all_passed = true;
    std::size_t verification_errors = 0;
    for (std::uint64_t seed = first;; ++seed) {
        cfg.seed = seed;
        const auto outcome = fuzz_one(cfg, options);
        all_passed = all_passed && outcome.report.passed;
        verification_errors += outcome.report.verification_errors;
        if (o.json) {
            out << fuzz_to_json(outcome).dump() << "\n";
        } else {
            out << "seed " << seed << ": " << outcome.structure.state_count() << " states, "
                << outcome.structure.player_count() << " players, " << (outcome.report.passed ? "pass" : "FAIL")
                << "\n";
            for (const auto& f : outcome.report.failures) {
                out << "  " << f << "\n";
            }
        }
        if (seed == last) {
            break;
        }
    }
    if (verification_errors > 0) {
        return kVerificationFailure;
    }
    return all_passed ? kOk : kNotionFails;
}

int cmd_report(const Options& o, std::ostream& out)
{
    const auto T = load_structure(o.structure);
    std::optional<Distribution> p;
    if (!o.dist.empty()) {
        p = load_distribution(o.dist, T);
    }
    const auto r = analyze(T, p);
    emit(out, o, report_to_json(r), report_to_text(r));
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact common-prior, trade and money-pump analysis of finite information structures", "prior-forge"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "Emit JSON instead of text");
    app.add_flag("--dump-lp", o.dump_lp, "Write every linear program solved to stderr");
    app.set_version_flag("--version", "prior-forge 0.1.0");

    auto add_structure = [&](CLI::App* sub) {
        sub->add_option("structure", o.structure, "Structure document (JSON)")->required();
    };

    auto* check = app.add_subcommand("check", "Validate a structure document");
    add_structure(check);

    auto* components = app.add_subcommand("components", "Minimal common certainty components");
    add_structure(components);
    components->add_option("--all-upto", o.all_upto, "Also list every component when there are at most K states")
        ->expected(0, 1)
        ->default_str("20");

    auto* prior = app.add_subcommand("prior", "Decide a common prior notion");
    add_structure(prior);
    prior->add_option("--kind", o.kind, "common, universal or strong")
        ->required()
        ->check(CLI::IsMember({"common", "universal", "strong"}));
    prior->add_option("--check", o.check, "Test this distribution instead of searching");

    auto* trade = app.add_subcommand("trade", "Synthesize a trade");
    add_structure(trade);
    trade->add_option("--kind", o.kind, "agreeable, weak or acceptable")
        ->required()
        ->check(CLI::IsMember({"agreeable", "weak", "acceptable"}));

    auto* pump = app.add_subcommand("pump", "Decide whether a distribution is a money pump");
    add_structure(pump);
    pump->add_option("--dist", o.dist, "Distribution document")->required();
    pump->add_option("--require", o.require, "maximal or strong")->check(CLI::IsMember({"maximal", "strong"}));

    auto* classify = app.add_subcommand("classify", "Classify a payoff family or a distribution");
    add_structure(classify);
    classify->add_option("--trade", o.trade, "Payoff document");
    classify->add_option("--dist", o.dist, "Distribution document");
    classify->require_option(1, 2);

    auto* fuzz = app.add_subcommand("fuzz", "Cross-check the theorems on random structures");
    fuzz->add_option("--seeds", o.seeds, "Seed range a..b")->capture_default_str();
    fuzz->add_option("--max-states", o.max_states, "Largest state space")->capture_default_str();
    fuzz->add_option("--max-players", o.max_players, "Largest player count")->capture_default_str();
    fuzz->add_option("--denominator-bound", o.denominator_bound, "Largest type denominator")->capture_default_str();
    fuzz->add_option("--samples", o.samples, "Distributions drawn per constraint")->capture_default_str();

    auto* report = app.add_subcommand("report", "Run every analysis");
    add_structure(report);
    report->add_option("--dist", o.dist, "Also classify this distribution");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }
    if (components->count("--all-upto") > 0 && o.all_upto == 0) {
        o.all_upto = 20;
    }

    try {
        std::optional<lp::ScopedDump> dump;
        if (o.dump_lp) {
            dump.emplace(err);
        }
        if (*check) {
            return cmd_check(o, out);
        }
        if (*components) {
            return cmd_components(o, out);
        }
        if (*prior) {
            return cmd_prior(o, out);
        }
        if (*trade) {
            return cmd_trade(o, out);
        }
        if (*pump) {
            return cmd_pump(o, out);
        }
        if (*classify) {
            return cmd_classify(o, out);
        }
        if (*fuzz) {
            return cmd_fuzz(o, out);
        }
        return cmd_report(o, out);
    } catch (const VerificationError& e) {
        err << "internal verification failure: " << e.what() << "\n";
        return kVerificationFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace priorforge::cli
