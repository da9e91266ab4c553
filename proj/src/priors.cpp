#include "priorforge/priors.hpp"

#include "priorforge/certainty.hpp"

namespace priorforge {

namespace {

void require_single_player(const InformationStructure& T, const char* what)
{
    if (T.player_count() != 1) {
        throw PlayerCountError(std::string(what) + " needs a single-player structure, got " +
                               std::to_string(T.player_count()) + " players");
    }
}

void require_size(const InformationStructure& T, const Distribution& p)
{
    if (p.size() != T.state_count()) {
        throw DimensionError("distribution has " + std::to_string(p.size()) + " entries, the structure has " +
                             std::to_string(T.state_count()) + " states");
    }
}

void add_common_prior_rows(const InformationStructure& T, lp::LinearProgram& program)
{
    const std::size_t M = T.state_count();
    program.add_constraint(std::vector<Rational>(M, Rational(1)), lp::Relation::Equal, 1, "total");
    for (PlayerIndex i = 0; i < T.player_count(); ++i) {
        const auto cells = T.cells(i);
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const Cell& cell = cells[c];
            const Distribution& t = T.cell_type(i, c);
            for (std::size_t k = 0; k + 1 < cell.size(); ++k) {
                const StateIndex s = cell[k];
                std::vector<Rational> row(M);
                for (StateIndex r : cell) {
                    row[r] = -t[s];
                }
                row[s] += 1;
                program.add_constraint(std::move(row), lp::Relation::Equal, 0,
                                       "prop_" + T.player_labels()[i] + "_" + T.state_labels()[s]);
            }
        }
    }
}

PriorWitness make_witness(const InformationStructure& T, Distribution p)
{
    PriorWitness w{std::move(p), {}};
    for (PlayerIndex i = 0; i < T.player_count(); ++i) {
        w.hull_weights.push_back(hull_weights(T, i, w.prior));
    }
    if (!verify_prior_witness(T, w)) {
        throw VerificationError("common prior returned by the solver fails re-verification");
    }
    return w;
}

// Optimal point of the eps program, or nullopt when infeasible.
std::optional<lp::Outcome> solve_common_prior(const InformationStructure& T)
{
    const auto program = common_prior_program(T);
    auto outcome = lp::solve(program);
    if (outcome.status == lp::Status::Infeasible) {
        return std::nullopt;
    }
    if (outcome.status != lp::Status::Optimal) {
        throw VerificationError("common prior program reported unbounded");
    }
    return outcome;
}

Distribution prior_from_primal(const InformationStructure& T, const std::vector<Rational>& x)
{
    return Distribution(std::vector<Rational>(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(T.state_count())));
}

}  // namespace

bool verify_prior_witness(const InformationStructure& T, const PriorWitness& w)
{
    if (w.prior.size() != T.state_count() || w.hull_weights.size() != T.player_count()) {
        return false;
    }
    for (PlayerIndex i = 0; i < T.player_count(); ++i) {
        const auto& weights = w.hull_weights[i];
        const auto cells = T.cells(i);
        if (weights.size() != cells.size()) {
            return false;
        }
        Rational total;
        std::vector<Rational> rebuilt(T.state_count());
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (weights[c].sign() < 0) {
                return false;
            }
            total += weights[c];
            const Distribution& t = T.cell_type(i, c);
            for (StateIndex s : cells[c]) {
                rebuilt[s] += weights[c] * t[s];
            }
        }
        if (total != Rational(1)) {
            return false;
        }
        for (StateIndex s = 0; s < T.state_count(); ++s) {
            if (rebuilt[s] != w.prior[s]) {
                return false;
            }
        }
    }
    return true;
}

std::vector<Rational> hull_weights(const InformationStructure& T, PlayerIndex i, const Distribution& p)
{
    require_size(T, p);
    std::vector<Rational> out;
    for (const Cell& cell : T.cells(i)) {
        out.push_back(p.measure(cell));
    }
    return out;
}

bool is_prior_for(const InformationStructure& T, PlayerIndex i, const Distribution& p)
{
    require_size(T, p);
    const auto cells = T.cells(i);
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const Rational mass = p.measure(cells[c]);
        const Distribution& t = T.cell_type(i, c);
        for (StateIndex s : cells[c]) {
            if (p[s] != t[s] * mass) {
                return false;
            }
        }
    }
    return true;
}

DisintegrabilityResult is_disintegrable(const InformationStructure& T, const Distribution& p)
{
    require_single_player(T, "disintegrability");
    if (!is_prior_for(T, 0, p)) {
        return {};
    }
    return {true, hull_weights(T, 0, p)};
}

DisintegrabilityResult single_player_prior(const InformationStructure& T, const Distribution& p)
{
    return is_disintegrable(T, p);
}

ConglomerabilityResult is_conglomerable(const InformationStructure& T, const Distribution& p, std::size_t max_states)
{
    require_single_player(T, "conglomerability");
    require_size(T, p);
    const std::size_t M = T.state_count();
    if (M > max_states || M > 62) {
        throw SizeCapError("conglomerability enumerates all events and is capped at " + std::to_string(max_states) +
                           " states; the structure has " + std::to_string(M));
    }
    const auto cells = T.cells(0);
    const std::uint64_t full = (std::uint64_t{1} << M) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
        Rational pe;
        for (StateIndex s = 0; s < M; ++s) {
            if (mask >> s & 1U) {
                pe += p[s];
            }
        }
        // t is constant on cells, so min and max over states are over cells.
        std::optional<Rational> lo;
        std::optional<Rational> hi;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const Distribution& t = T.cell_type(0, c);
            Rational te;
            for (StateIndex s : cells[c]) {
                if (mask >> s & 1U) {
                    te += t[s];
                }
            }
            if (!lo || te < *lo) {
                lo = te;
            }
            if (!hi || te > *hi) {
                hi = te;
            }
        }
        if (pe < *lo || pe > *hi) {
            StateSet event;
            for (StateIndex s = 0; s < M; ++s) {
                if (mask >> s & 1U) {
                    event.push_back(s);
                }
            }
            return {false, std::move(event)};
        }
    }
    return {};
}

lp::LinearProgram common_prior_polytope(const InformationStructure& T)
{
    lp::LinearProgram program;
    program.name = "common_prior";
    for (const auto& label : T.state_labels()) {
        program.add_variable("p_" + label);
    }
    add_common_prior_rows(T, program);
    program.set_objective(lp::Sense::Maximize, {});
    return program;
}

lp::LinearProgram common_prior_program(const InformationStructure& T)
{
    const std::size_t M = T.state_count();
    lp::LinearProgram program;
    program.name = "common_prior_eps";
    for (const auto& label : T.state_labels()) {
        program.add_variable("p_" + label);
    }
    const std::size_t eps = program.add_variable("eps", Rational(0), Rational(1));
    add_common_prior_rows(T, program);
    for (PlayerIndex i = 0; i < T.player_count(); ++i) {
        const auto cells = T.cells(i);
        for (std::size_t c = 0; c < cells.size(); ++c) {
            std::vector<Rational> row(M + 1);
            for (StateIndex s : cells[c]) {
                row[s] = 1;
            }
            row[eps] = -1;
            program.add_constraint(std::move(row), lp::Relation::GreaterEqual, 0,
                                   "cell_" + T.player_labels()[i] + "_" + std::to_string(c));
        }
    }
    std::vector<Rational> objective(M + 1);
    objective[eps] = 1;
    program.set_objective(lp::Sense::Maximize, std::move(objective));
    return program;
}

std::optional<PriorWitness> find_common_prior(const InformationStructure& T)
{
    auto outcome = solve_common_prior(T);
    if (!outcome) {
        return std::nullopt;
    }
    return make_witness(T, prior_from_primal(T, outcome->primal));
}

std::optional<PriorWitness> find_universal_common_prior(const InformationStructure& T)
{
    const auto catalog = minimal_components(T);
    const Rational share(1, static_cast<std::int64_t>(catalog.minimal.size()));
    std::vector<Rational> mixture(T.state_count());
    for (const auto& S : catalog.minimal) {
        const auto sub = induced_substructure(T, S);
        const auto local = find_common_prior(sub);
        if (!local) {
            return std::nullopt;
        }
        const auto extended = zero_extend(local->prior.mass(), S, T.state_count());
        for (StateIndex s = 0; s < T.state_count(); ++s) {
            mixture[s] += share * extended[s];
        }
    }
    auto w = make_witness(T, Distribution(std::move(mixture)));
    if (!is_maximal(T, w.prior)) {
        throw VerificationError("universal common prior misses a common certainty component");
    }
    return w;
}

std::optional<PriorWitness> find_strong_common_prior(const InformationStructure& T)
{
    auto outcome = solve_common_prior(T);
    if (!outcome || outcome->objective_value->sign() <= 0) {
        return std::nullopt;
    }
    auto w = make_witness(T, prior_from_primal(T, outcome->primal));
    if (!is_strongly_maximal(T, w.prior)) {
        throw VerificationError("strong common prior leaves a cell without mass");
    }
    return w;
}

PriorFlags classify_prior(const InformationStructure& T, const Distribution& p)
{
    require_size(T, p);
    PriorFlags flags;
    flags.common = true;
    for (PlayerIndex i = 0; i < T.player_count(); ++i) {
        flags.prior_for.push_back(is_prior_for(T, i, p));
        flags.common = flags.common && flags.prior_for.back();
    }
    flags.maximal = is_maximal(T, p);
    flags.strongly_maximal = is_strongly_maximal(T, p);
    flags.universal = flags.common && flags.maximal;
    flags.strong = flags.common && flags.strongly_maximal;
    return flags;
}

PriorReport analyze_priors(const InformationStructure& T)
{
    PriorReport report;
    report.common = find_common_prior(T);
    if (report.common) {
        report.universal = find_universal_common_prior(T);
        report.strong = find_strong_common_prior(T);
    }
    return report;
}

}  // namespace priorforge
