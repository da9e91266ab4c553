#include "priorforge/harness.hpp"

#include "priorforge/certainty.hpp"
#include "priorforge/priors.hpp"
#include "priorforge/trades.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace priorforge {

namespace {

constexpr std::size_t kMaxGeneratedStates = 24;
constexpr int kRejectionAttempts = 1000;

}  // namespace

void validate_config(const GeneratorConfig& cfg)
{
    if (cfg.max_states == 0 || cfg.max_states > kMaxGeneratedStates) {
        throw std::invalid_argument("max_states must be in [1, " + std::to_string(kMaxGeneratedStates) + "]");
    }
    if (cfg.max_players == 0) {
        throw std::invalid_argument("max_players must be positive");
    }
    if (cfg.denominator_bound < 1) {
        throw std::invalid_argument("denominator_bound must be positive");
    }
    if (cfg.zero_mass_rate.sign() < 0 || cfg.zero_mass_rate > Rational(1)) {
        throw std::invalid_argument("zero_mass_rate must lie in [0, 1]");
    }
}

const char* to_string(DistributionConstraint c)
{
    switch (c) {
    case DistributionConstraint::Any:
        return "any";
    case DistributionConstraint::Maximal:
        return "maximal";
    case DistributionConstraint::StronglyMaximal:
        return "strongly_maximal";
    }
    return "?";
}

std::uint64_t Rng::below(std::uint64_t n)
{
    if (n == 0) {
        throw std::invalid_argument("Rng::below(0)");
    }
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x = next();
    while (x >= limit) {
        x = next();
    }
    return x % n;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi)
{
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

bool Rng::chance(const Rational& r)
{
    if (r.sign() <= 0) {
        return false;
    }
    if (r >= Rational(1)) {
        return true;
    }
    const auto num = static_cast<std::uint64_t>(r.numerator().to_mpq().get_num().get_ui());
    const auto den = static_cast<std::uint64_t>(r.denominator().to_mpq().get_num().get_ui());
    return below(den) < num;
}

Generator::Generator(const GeneratorConfig& cfg) : cfg_(cfg), rng_(cfg.seed)
{
    validate_config(cfg_);
}

std::vector<Cell> Generator::partition(std::size_t states)
{
    const std::size_t limit = cfg_.max_cells == 0 ? states : std::min(cfg_.max_cells, states);
    // ways[k][j]: completions of a restricted growth string with k elements
    // left and j blocks opened so far.
    std::vector<std::vector<std::uint64_t>> ways(states + 1, std::vector<std::uint64_t>(limit + 2, 0));
    for (std::size_t j = 0; j <= limit; ++j) {
        ways[0][j] = 1;
    }
    for (std::size_t k = 1; k <= states; ++k) {
        for (std::size_t j = 0; j <= limit; ++j) {
            ways[k][j] = j * ways[k - 1][j] + (j < limit ? ways[k - 1][j + 1] : 0);
        }
    }
    std::vector<std::size_t> block(states);
    std::size_t opened = 0;
    for (std::size_t s = 0; s < states; ++s) {
        const std::size_t left = states - s - 1;
        std::uint64_t r = rng_.below(ways[left + 1][opened]);
        const std::uint64_t per_existing = ways[left][opened];
        if (r < opened * per_existing) {
            block[s] = static_cast<std::size_t>(r / per_existing);
        } else {
            block[s] = opened++;
        }
    }
    std::vector<Cell> cells(opened);
    for (std::size_t s = 0; s < states; ++s) {
        cells[block[s]].push_back(s);
    }
    return cells;
}

// Random probability vector of length `size` supported in `pool`, with all
// entries k/d for one d <= denominator_bound.
std::vector<Rational> Generator::bounded_vector(const std::vector<StateIndex>& pool, std::size_t size)
{
    std::vector<StateIndex> support;
    for (StateIndex s : pool) {
        if (!rng_.chance(cfg_.zero_mass_rate)) {
            support.push_back(s);
        }
    }
    if (support.empty()) {
        support.push_back(pool[rng_.below(pool.size())]);
    }
    const auto bound = static_cast<std::size_t>(cfg_.denominator_bound);
    while (support.size() > bound) {
        support.erase(support.begin() + static_cast<std::ptrdiff_t>(rng_.below(support.size())));
    }
    const std::int64_t m = static_cast<std::int64_t>(support.size());
    const std::int64_t d = rng_.between(m, cfg_.denominator_bound);
    // m - 1 distinct cut points in [1, d - 1] split d into m positive parts.
    std::vector<std::int64_t> points(static_cast<std::size_t>(d - 1));
    std::iota(points.begin(), points.end(), 1);
    for (std::size_t k = 0; k + 1 < support.size(); ++k) {
        std::swap(points[k], points[k + rng_.below(points.size() - k)]);
    }
    std::vector<std::int64_t> cuts(points.begin(), points.begin() + (m - 1));
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(d);
    std::vector<Rational> mass(size);
    std::int64_t previous = 0;
    for (std::size_t k = 0; k < support.size(); ++k) {
        mass[support[k]] = Rational(cuts[k] - previous, d);
        previous = cuts[k];
    }
    return mass;
}

InformationStructure Generator::structure()
{
    const auto M = static_cast<std::size_t>(rng_.between(1, static_cast<std::int64_t>(cfg_.max_states)));
    const auto n = static_cast<std::size_t>(rng_.between(1, static_cast<std::int64_t>(cfg_.max_players)));
    RawStructure raw;
    for (std::size_t s = 0; s < M; ++s) {
        raw.states.push_back("w" + std::to_string(s + 1));
    }
    for (std::size_t i = 0; i < n; ++i) {
        raw.players.push_back("p" + std::to_string(i + 1));
        RawStructure::Player player;
        player.cells = partition(M);
        for (std::size_t c = 0; c < player.cells.size(); ++c) {
            player.cell_types.emplace(c, bounded_vector(player.cells[c], M));
        }
        raw.per_player.push_back(std::move(player));
    }
    return validate_structure(raw);
}

Distribution Generator::distribution(const InformationStructure& T, DistributionConstraint constraint)
{
    const std::size_t M = T.state_count();
    std::vector<StateIndex> all(M);
    std::iota(all.begin(), all.end(), 0);
    for (int attempt = 0; attempt < kRejectionAttempts; ++attempt) {
        Distribution p(bounded_vector(all, M));
        const bool ok = constraint == DistributionConstraint::Any ||
                        (constraint == DistributionConstraint::Maximal && is_maximal(T, p)) ||
                        (constraint == DistributionConstraint::StronglyMaximal && is_strongly_maximal(T, p));
        if (ok) {
            return p;
        }
    }
    std::vector<Rational> weights(M);
    std::int64_t total = 0;
    for (auto& w : weights) {
        const std::int64_t k = rng_.between(1, 2);
        w = k;
        total += k;
    }
    for (auto& w : weights) {
        w /= Rational(total);
    }
    return Distribution(std::move(weights));
}

InformationStructure random_structure(const GeneratorConfig& cfg)
{
    return Generator(cfg).structure();
}

Distribution random_distribution(const InformationStructure& T, const GeneratorConfig& cfg,
                                 DistributionConstraint constraint)
{
    return Generator(cfg).distribution(T, constraint);
}

void CrossCheckReport::fail(std::string what)
{
    passed = false;
    failures.push_back(std::move(what));
}

namespace {

std::string describe(const Distribution& p)
{
    std::string out = "(";
    for (std::size_t s = 0; s < p.size(); ++s) {
        out += (s ? "," : "") + p[s].str();
    }
    return out + ")";
}

void check_distribution(const InformationStructure& T, const Distribution& p, const CrossCheckReport& base,
                        CrossCheckReport& report)
{
    const auto v = classify_distribution(T, p);
    ++report.samples;
    if (v.money_pump) {
        ++report.pumps;
    }
    if (v.maximal) {
        ++report.maximal_samples;
        report.maximal_pumps += v.universal_pump() ? 1 : 0;
        if (v.universal_prior() == v.universal_pump()) {
            report.fail("maximal " + describe(p) + ": universal prior and universal pump not exclusive");
        }
        if (!base.universal_prior && !v.universal_pump()) {
            report.fail("no universal common prior, yet maximal " + describe(p) + " is not a pump");
        }
    }
    if (v.strongly_maximal) {
        ++report.strongly_maximal_samples;
        report.strongly_maximal_pumps += v.strong_pump() ? 1 : 0;
        if (v.strong_prior() == v.strong_pump()) {
            report.fail("strongly maximal " + describe(p) + ": strong prior and strong pump not exclusive");
        }
        if (!base.strong_prior && !v.strong_pump()) {
            report.fail("no strong common prior, yet strongly maximal " + describe(p) + " is not a pump");
        }
    }
    if (!base.common_prior && !v.money_pump) {
        report.fail("no common prior, yet " + describe(p) + " is not a pump");
    }
}

void check_trade(const InformationStructure& T, const char* what, const Trade& f, bool agreeable, bool weak,
                 CrossCheckReport& report)
{
    const auto c = classify_trade(T, f);
    if (!c.is_trade || !c.is_semi_trade || !c.acceptable) {
        report.fail(std::string(what) + " trade is not an acceptable trade");
    }
    if (weak && !c.weakly_agreeable) {
        report.fail(std::string(what) + " trade is not weakly agreeable");
    }
    if (agreeable && !c.agreeable) {
        report.fail(std::string(what) + " trade is not agreeable");
    }
}

void check_single_player(const InformationStructure& T, const std::vector<Distribution>& samples,
                         const CrossCheckOptions& options, CrossCheckReport& report)
{
    for (PlayerIndex i = 0; i < T.player_count(); ++i) {
        const auto view = player_view(T, i);
        std::vector<Distribution> probes = samples;
        for (std::size_t c = 0; c < view.cells(0).size(); ++c) {
            probes.push_back(view.cell_type(0, c));
        }
        for (const auto& p : probes) {
            ++report.single_player_checks;
            const auto d = is_disintegrable(view, p);
            const auto pump = find_single_money_pump(view, p);
            if (d.disintegrable == pump.has_value()) {
                report.fail("player " + T.player_labels()[i] + ", " + describe(p) +
                            ": disintegrability and single-player pump not exclusive");
            }
            if (view.state_count() <= options.conglomerability_cap) {
                ++report.conglomerability_checks;
                if (d.disintegrable && !is_conglomerable(view, p, options.conglomerability_cap).conglomerable) {
                    report.fail("player " + T.player_labels()[i] + ", " + describe(p) +
                                ": disintegrable but not conglomerable");
                }
            }
        }
    }
}

void run_checks(const InformationStructure& T, const CrossCheckOptions& options, CrossCheckReport& report)
{
    const auto cp = find_common_prior(T);
    const auto ucp = find_universal_common_prior(T);
    const auto scp = find_strong_common_prior(T);
    const auto ag = find_agreeable_trade(T);
    const auto weak = find_weakly_agreeable_trade(T);
    const auto acc = find_acceptable_trade(T);
    report.common_prior = cp.has_value();
    report.universal_prior = ucp.has_value();
    report.strong_prior = scp.has_value();
    report.agreeable_trade = ag.has_value();
    report.weakly_agreeable_trade = weak.has_value();
    report.acceptable_trade = acc.has_value();

    if (cp.has_value() == ag.has_value()) {
        report.fail("common prior and agreeable trade not exclusive");
    }
    if (ucp.has_value() == weak.has_value()) {
        report.fail("universal common prior and weakly agreeable trade not exclusive");
    }
    if (scp.has_value() == acc.has_value()) {
        report.fail("strong common prior and acceptable trade not exclusive");
    }
    if (scp && !ucp) {
        report.fail("strong common prior without a universal one");
    }
    if (ucp && !cp) {
        report.fail("universal common prior without a common one");
    }
    if (!acc && acceptable_trade_optimum(T).sign() != 0) {
        report.fail("acceptable trade program has a non-zero optimum but no trade");
    }

    for (const auto* w : {&cp, &ucp, &scp}) {
        if (*w && !verify_prior_witness(T, **w)) {
            report.fail("prior witness fails re-verification");
        }
    }
    if (ucp && !is_maximal(T, ucp->prior)) {
        report.fail("universal common prior is not maximal");
    }
    if (scp && !is_strongly_maximal(T, scp->prior)) {
        report.fail("strong common prior is not strongly maximal");
    }
    if (ag) {
        check_trade(T, "agreeable", ag->trade, true, true, report);
    }
    if (weak) {
        check_trade(T, "weakly agreeable", weak->trade, false, true, report);
    }
    if (acc) {
        check_trade(T, "acceptable", acc->trade, false, false, report);
    }

    Generator gen(GeneratorConfig{options.seed, 1, 1, 6, Rational(1, 4), 0});
    std::vector<Distribution> any;
    for (std::size_t k = 0; k < options.samples; ++k) {
        any.push_back(gen.distribution(T, DistributionConstraint::Any));
        check_distribution(T, any.back(), report, report);
        check_distribution(T, gen.distribution(T, DistributionConstraint::Maximal), report, report);
        check_distribution(T, gen.distribution(T, DistributionConstraint::StronglyMaximal), report, report);
    }
    for (const auto* w : {&cp, &ucp, &scp}) {
        if (*w) {
            check_distribution(T, (*w)->prior, report, report);
        }
    }
    check_single_player(T, any, options, report);
}

}  // namespace

CrossCheckReport cross_check(const InformationStructure& T, const CrossCheckOptions& options)
{
    CrossCheckReport report;
    try {
        run_checks(T, options, report);
    } catch (const VerificationError& e) {
        ++report.verification_errors;
        report.fail(std::string("verification: ") + e.what());
    }
    return report;
}

std::optional<InformationStructure> delete_state(const InformationStructure& T, StateIndex s)
{
    if (T.state_count() <= 1 || s >= T.state_count()) {
        return std::nullopt;
    }
    RawStructure full = T.to_raw();
    RawStructure raw;
    for (StateIndex r = 0; r < T.state_count(); ++r) {
        if (r != s) {
            raw.states.push_back(full.states[r]);
        }
    }
    raw.players = full.players;
    auto shrink = [&](const std::vector<Rational>& v) {
        std::vector<Rational> out;
        for (StateIndex r = 0; r < v.size(); ++r) {
            if (r != s) {
                out.push_back(v[r]);
            }
        }
        return out;
    };
    for (PlayerIndex i = 0; i < T.player_count(); ++i) {
        RawStructure::Player player;
        const auto cells = T.cells(i);
        for (std::size_t c = 0; c < cells.size(); ++c) {
            Cell cell;
            for (StateIndex r : cells[c]) {
                if (r != s) {
                    cell.push_back(r < s ? r : r - 1);
                }
            }
            if (cell.empty()) {
                continue;
            }
            const Distribution& t = T.cell_type(i, c);
            const Rational rest = Rational(1) - t[s];
            if (rest.is_zero()) {
                return std::nullopt;
            }
            auto row = shrink(std::vector<Rational>(t.mass().begin(), t.mass().end()));
            for (auto& v : row) {
                v /= rest;
            }
            player.cell_types.emplace(player.cells.size(), std::move(row));
            player.cells.push_back(std::move(cell));
        }
        raw.per_player.push_back(std::move(player));
    }
    return validate_structure(raw);
}

std::optional<InformationStructure> delete_player(const InformationStructure& T, PlayerIndex i)
{
    if (T.player_count() <= 1 || i >= T.player_count()) {
        return std::nullopt;
    }
    RawStructure raw = T.to_raw();
    raw.players.erase(raw.players.begin() + static_cast<std::ptrdiff_t>(i));
    raw.per_player.erase(raw.per_player.begin() + static_cast<std::ptrdiff_t>(i));
    return validate_structure(raw);
}

InformationStructure minimize_failure(const InformationStructure& T,
                                      const std::function<bool(const InformationStructure&)>& fails)
{
    InformationStructure current = T;
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (PlayerIndex i = 0; i < current.player_count() && !shrunk; ++i) {
            if (auto smaller = delete_player(current, i); smaller && fails(*smaller)) {
                current = std::move(*smaller);
                shrunk = true;
            }
        }
        for (StateIndex s = 0; s < current.state_count() && !shrunk; ++s) {
            if (auto smaller = delete_state(current, s); smaller && fails(*smaller)) {
                current = std::move(*smaller);
                shrunk = true;
            }
        }
    }
    return current;
}

FuzzOutcome fuzz_one(const GeneratorConfig& cfg, const CrossCheckOptions& options)
{
    FuzzOutcome out;
    out.seed = cfg.seed;
    out.structure = random_structure(cfg);
    CrossCheckOptions opts = options;
    opts.seed = cfg.seed;
    out.report = cross_check(out.structure, opts);
    if (!out.report.passed) {
        out.minimized = minimize_failure(out.structure,
                                         [&](const InformationStructure& S) { return !cross_check(S, opts).passed; });
    }
    return out;
}

}  // namespace priorforge
