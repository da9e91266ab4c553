#include "priorforge/structure.hpp"

#include "priorforge/certainty.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace priorforge {

StateSet make_state_set(std::vector<StateIndex> states)
{
    std::sort(states.begin(), states.end());
    states.erase(std::unique(states.begin(), states.end()), states.end());
    return states;
}

Distribution::Distribution(std::vector<Rational> mass) : mass_(std::move(mass))
{
    if (mass_.empty()) {
        throw StochasticityError("distribution over an empty state space");
    }
    Rational total;
    for (std::size_t s = 0; s < mass_.size(); ++s) {
        if (mass_[s].sign() < 0) {
            throw StochasticityError("negative mass " + mass_[s].str() + " at state index " + std::to_string(s));
        }
        total += mass_[s];
    }
    if (total != Rational(1)) {
        throw StochasticityError("mass sums to " + total.str() + ", not 1");
    }
}

Distribution Distribution::point_mass(std::size_t size, StateIndex at)
{
    std::vector<Rational> mass(size);
    mass.at(at) = 1;
    return Distribution(std::move(mass));
}

Distribution Distribution::uniform(std::size_t size)
{
    if (size == 0) {
        throw StochasticityError("distribution over an empty state space");
    }
    return Distribution(std::vector<Rational>(size, Rational(1, static_cast<std::int64_t>(size))));
}

Rational Distribution::measure(std::span<const StateIndex> event) const
{
    Rational total;
    for (StateIndex s : event) {
        total += mass_.at(s);
    }
    return total;
}

StateSet Distribution::support() const
{
    StateSet out;
    for (std::size_t s = 0; s < mass_.size(); ++s) {
        if (!mass_[s].is_zero()) {
            out.push_back(s);
        }
    }
    return out;
}

PayoffVector PayoffVector::scaled(const Rational& factor) const
{
    std::vector<Rational> out(values_.size());
    std::transform(values_.begin(), values_.end(), out.begin(), [&](const Rational& v) { return v * factor; });
    return PayoffVector(std::move(out));
}

PayoffVector PayoffVector::shifted(const Rational& offset) const
{
    std::vector<Rational> out(values_.size());
    std::transform(values_.begin(), values_.end(), out.begin(), [&](const Rational& v) { return v + offset; });
    return PayoffVector(std::move(out));
}

Rational PayoffFamily::pointwise_sum(StateIndex s) const
{
    Rational total;
    for (const auto& f : payoffs) {
        total += f[s];
    }
    return total;
}

Rational expectation(const PayoffVector& f, const Distribution& d)
{
    if (f.size() != d.size()) {
        throw DimensionError("payoff has " + std::to_string(f.size()) + " entries but distribution has " +
                             std::to_string(d.size()));
    }
    Rational total;
    for (std::size_t s = 0; s < f.size(); ++s) {
        if (!d[s].is_zero()) {
            total += f[s] * d[s];
        }
    }
    return total;
}

std::optional<StateIndex> InformationStructure::find_state(std::string_view label) const
{
    const auto it = std::find(states_.begin(), states_.end(), label);
    if (it == states_.end()) {
        return std::nullopt;
    }
    return static_cast<StateIndex>(it - states_.begin());
}

std::optional<PlayerIndex> InformationStructure::find_player(std::string_view label) const
{
    const auto it = std::find(players_.begin(), players_.end(), label);
    if (it == players_.end()) {
        return std::nullopt;
    }
    return static_cast<PlayerIndex>(it - players_.begin());
}

std::size_t InformationStructure::total_cells() const
{
    std::size_t total = 0;
    for (const auto& d : data_) {
        total += d.cells.size();
    }
    return total;
}

RawStructure InformationStructure::to_raw() const
{
    RawStructure raw;
    raw.states = states_;
    raw.players = players_;
    for (const auto& d : data_) {
        RawStructure::Player p;
        p.cells = d.cells;
        for (std::size_t c = 0; c < d.cells.size(); ++c) {
            const auto mass = d.cell_types[c].mass();
            p.cell_types.emplace(c, std::vector<Rational>(mass.begin(), mass.end()));
        }
        raw.per_player.push_back(std::move(p));
    }
    return raw;
}

namespace {

void check_labels(const std::vector<std::string>& labels, const char* what)
{
    std::set<std::string> seen;
    for (const auto& l : labels) {
        if (!seen.insert(l).second) {
            throw StructureError(std::string("duplicate ") + what + " label '" + l + "'");
        }
    }
}

Distribution checked_type(const std::vector<Rational>& row, std::size_t state_count, const std::string& where)
{
    if (row.size() != state_count) {
        throw DimensionError(where + ": type has " + std::to_string(row.size()) + " entries, expected " +
                             std::to_string(state_count));
    }
    try {
        return Distribution(row);
    } catch (const StochasticityError& e) {
        throw StochasticityError(where + ": " + e.what());
    }
}

}  // namespace

InformationStructure validate_structure(const RawStructure& raw)
{
    const std::size_t M = raw.states.size();
    if (M == 0) {
        throw StructureError("state space is empty");
    }
    if (raw.players.empty()) {
        throw StructureError("player set is empty");
    }
    if (raw.per_player.size() != raw.players.size()) {
        throw StructureError("expected partition and types for " + std::to_string(raw.players.size()) +
                             " players, got " + std::to_string(raw.per_player.size()));
    }
    check_labels(raw.states, "state");
    check_labels(raw.players, "player");

    InformationStructure T;
    T.states_ = raw.states;
    T.players_ = raw.players;

    for (std::size_t i = 0; i < raw.players.size(); ++i) {
        const auto& in = raw.per_player[i];
        const std::string& who = raw.players[i];
        InformationStructure::PlayerData data;
        data.cells = in.cells;
        constexpr auto unassigned = static_cast<std::size_t>(-1);
        data.cell_of_state.assign(M, unassigned);

        for (std::size_t c = 0; c < in.cells.size(); ++c) {
            if (in.cells[c].empty()) {
                throw PartitionError("player '" + who + "': cell " + std::to_string(c) + " is empty");
            }
            for (StateIndex s : in.cells[c]) {
                if (s >= M) {
                    throw PartitionError("player '" + who + "': cell " + std::to_string(c) + " names unknown state index " +
                                         std::to_string(s));
                }
                if (data.cell_of_state[s] != unassigned) {
                    throw PartitionError("player '" + who + "': state '" + raw.states[s] + "' lies in cells " +
                                         std::to_string(data.cell_of_state[s]) + " and " + std::to_string(c));
                }
                data.cell_of_state[s] = c;
            }
        }
        for (StateIndex s = 0; s < M; ++s) {
            if (data.cell_of_state[s] == unassigned) {
                throw PartitionError("player '" + who + "': state '" + raw.states[s] + "' is not covered by the partition");
            }
        }
        for (const auto& [c, row] : in.cell_types) {
            if (c >= in.cells.size()) {
                throw StructureError("player '" + who + "': type given for unknown cell " + std::to_string(c));
            }
        }
        for (const auto& [s, row] : in.state_types) {
            if (s >= M) {
                throw StructureError("player '" + who + "': type given for unknown state index " + std::to_string(s));
            }
        }

        for (std::size_t c = 0; c < in.cells.size(); ++c) {
            const Cell& cell = in.cells[c];
            std::vector<std::pair<std::string, Distribution>> given;
            if (auto it = in.cell_types.find(c); it != in.cell_types.end()) {
                const std::string where = "player '" + who + "', cell " + std::to_string(c);
                given.emplace_back(where, checked_type(it->second, M, where));
            }
            for (StateIndex s : cell) {
                if (auto it = in.state_types.find(s); it != in.state_types.end()) {
                    const std::string where = "player '" + who + "', state '" + raw.states[s] + "'";
                    given.emplace_back(where, checked_type(it->second, M, where));
                }
            }
            if (given.empty()) {
                throw StructureError("player '" + who + "': no type given for cell " + std::to_string(c));
            }
            for (const auto& [where, t] : given) {
                Rational inside;
                for (StateIndex s : cell) {
                    inside += t[s];
                }
                if (inside != Rational(1)) {
                    throw SupportError(where + ": type puts mass " + (Rational(1) - inside).str() +
                                       " outside its own cell");
                }
            }
            for (std::size_t k = 1; k < given.size(); ++k) {
                if (!(given[k].second == given[0].second)) {
                    throw InconsistencyError(given[0].first + " and " + given[k].first +
                                             " lie in one cell but have different types");
                }
            }
            data.cell_types.push_back(given.front().second);
        }
        T.data_.push_back(std::move(data));
    }
    return T;
}

InformationStructure induced_substructure(const InformationStructure& T, const StateSet& S)
{
    if (!is_component(T, S)) {
        throw NotAComponentError("state set is not a common certainty component; the restricted types would not be "
                                 "probability distributions");
    }
    const StateSet set = make_state_set(S);
    std::vector<std::size_t> local(T.state_count(), static_cast<std::size_t>(-1));
    for (std::size_t k = 0; k < set.size(); ++k) {
        local[set[k]] = k;
    }

    RawStructure raw;
    for (StateIndex s : set) {
        raw.states.push_back(T.state_labels()[s]);
    }
    raw.players = T.player_labels();
    for (PlayerIndex i = 0; i < T.player_count(); ++i) {
        RawStructure::Player p;
        const auto cells = T.cells(i);
        for (std::size_t c = 0; c < cells.size(); ++c) {
            Cell restricted;
            for (StateIndex s : cells[c]) {
                if (local[s] != static_cast<std::size_t>(-1)) {
                    restricted.push_back(local[s]);
                }
            }
            if (restricted.empty()) {
                continue;
            }
            std::vector<Rational> row;
            row.reserve(set.size());
            for (StateIndex s : set) {
                row.push_back(T.cell_type(i, c)[s]);
            }
            p.cell_types.emplace(p.cells.size(), std::move(row));
            p.cells.push_back(std::move(restricted));
        }
        raw.per_player.push_back(std::move(p));
    }
    return validate_structure(raw);
}

InformationStructure player_view(const InformationStructure& T, PlayerIndex i)
{
    RawStructure full = T.to_raw();
    RawStructure raw;
    raw.states = full.states;
    raw.players = {full.players.at(i)};
    raw.per_player = {full.per_player.at(i)};
    return validate_structure(raw);
}

std::vector<Rational> zero_extend(std::span<const Rational> values, const StateSet& S, std::size_t parent_size)
{
    if (values.size() != S.size()) {
        throw DimensionError("zero_extend: " + std::to_string(values.size()) + " values for a set of " +
                             std::to_string(S.size()) + " states");
    }
    std::vector<Rational> out(parent_size);
    for (std::size_t k = 0; k < S.size(); ++k) {
        out.at(S[k]) = values[k];
    }
    return out;
}

}  // namespace priorforge
