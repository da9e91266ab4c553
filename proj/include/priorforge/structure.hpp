#pragma once

#include "priorforge/errors.hpp"
#include "priorforge/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace priorforge {

using StateIndex = std::size_t;
using PlayerIndex = std::size_t;

/// Sorted list of distinct state indices.
using StateSet = std::vector<StateIndex>;

/// One element of a knowledge partition, states in input order.
using Cell = std::vector<StateIndex>;

/// Sorts and deduplicates.
StateSet make_state_set(std::vector<StateIndex> states);

/// Probability vector over the state space: non-negative, sums to exactly 1.
class Distribution {
public:
    /// Throws StochasticityError on an empty vector, a negative entry, or a
    /// total other than 1.
    explicit Distribution(std::vector<Rational> mass);

    static Distribution point_mass(std::size_t size, StateIndex at);
    static Distribution uniform(std::size_t size);

    [[nodiscard]] std::size_t size() const noexcept { return mass_.size(); }
    [[nodiscard]] const Rational& operator[](StateIndex s) const { return mass_[s]; }
    [[nodiscard]] std::span<const Rational> mass() const noexcept { return mass_; }

    /// p(E)
    [[nodiscard]] Rational measure(std::span<const StateIndex> event) const;
    [[nodiscard]] StateSet support() const;

    friend bool operator==(const Distribution&, const Distribution&) = default;

private:
    std::vector<Rational> mass_;
};

/// A real-valued function on the state space.
class PayoffVector {
public:
    PayoffVector() = default;
    explicit PayoffVector(std::vector<Rational> values) : values_(std::move(values)) {}

    static PayoffVector zeros(std::size_t size) { return PayoffVector(std::vector<Rational>(size)); }

    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] const Rational& operator[](StateIndex s) const { return values_[s]; }
    Rational& operator[](StateIndex s) { return values_[s]; }
    [[nodiscard]] std::span<const Rational> values() const noexcept { return values_; }

    [[nodiscard]] PayoffVector scaled(const Rational& factor) const;
    [[nodiscard]] PayoffVector shifted(const Rational& offset) const;

    friend bool operator==(const PayoffVector&, const PayoffVector&) = default;

private:
    std::vector<Rational> values_;
};

/// One payoff function per player. Used for trades (pointwise sum <= 0) and
/// semi-trades (no sum constraint); the classification lives in trades.hpp.
struct PayoffFamily {
    std::vector<PayoffVector> payoffs;

    [[nodiscard]] Rational pointwise_sum(StateIndex s) const;
    friend bool operator==(const PayoffFamily&, const PayoffFamily&) = default;
};

/// Exact dot product. Throws DimensionError on mismatched sizes.
Rational expectation(const PayoffVector& f, const Distribution& d);

/// Unvalidated description of an information structure, as read from a
/// document. Types may be given per cell, per state, or both; both forms are
/// reconciled by validate_structure.
struct RawStructure {
    struct Player {
        std::vector<Cell> cells;
        std::map<std::size_t, std::vector<Rational>> cell_types;
        std::map<StateIndex, std::vector<Rational>> state_types;
    };

    std::vector<std::string> states;
    std::vector<std::string> players;
    std::vector<Player> per_player;
};

/// Finite information structure: states, players, and per player a knowledge
/// partition with a type function constant on each cell and supported inside
/// it. Immutable once built; only validate_structure constructs one.
class InformationStructure {
public:
    [[nodiscard]] std::size_t state_count() const noexcept { return states_.size(); }
    [[nodiscard]] std::size_t player_count() const noexcept { return players_.size(); }
    [[nodiscard]] const std::vector<std::string>& state_labels() const noexcept { return states_; }
    [[nodiscard]] const std::vector<std::string>& player_labels() const noexcept { return players_; }

    [[nodiscard]] std::span<const Cell> cells(PlayerIndex i) const { return data_.at(i).cells; }
    [[nodiscard]] std::size_t cell_index(PlayerIndex i, StateIndex s) const { return data_.at(i).cell_of_state.at(s); }
    [[nodiscard]] const Cell& cell_of(PlayerIndex i, StateIndex s) const { return data_.at(i).cells[cell_index(i, s)]; }

    /// t_i(s)
    [[nodiscard]] const Distribution& type(PlayerIndex i, StateIndex s) const
    {
        return data_.at(i).cell_types[cell_index(i, s)];
    }
    [[nodiscard]] const Distribution& cell_type(PlayerIndex i, std::size_t cell) const
    {
        return data_.at(i).cell_types.at(cell);
    }

    [[nodiscard]] std::optional<StateIndex> find_state(std::string_view label) const;
    [[nodiscard]] std::optional<PlayerIndex> find_player(std::string_view label) const;

    /// Total number of cells over all players.
    [[nodiscard]] std::size_t total_cells() const;

    /// Canonical per-cell description; validate_structure(to_raw()) == *this.
    [[nodiscard]] RawStructure to_raw() const;

    friend bool operator==(const InformationStructure&, const InformationStructure&) = default;

private:
    friend InformationStructure validate_structure(const RawStructure& raw);

    struct PlayerData {
        std::vector<Cell> cells;
        std::vector<std::size_t> cell_of_state;
        std::vector<Distribution> cell_types;
        friend bool operator==(const PlayerData&, const PlayerData&) = default;
    };

    std::vector<std::string> states_;
    std::vector<std::string> players_;
    std::vector<PlayerData> data_;
};

/// Checks every invariant and expands per-state types onto cells.
///
/// Errors: PartitionError (cells overlap, miss a state, are empty, or name an
/// unknown state), DimensionError (type vector of the wrong length),
/// StochasticityError (negative mass or total != 1), SupportError (mass
/// outside the cell), InconsistencyError (two states of one cell given
/// different types), StructureError (anything else, e.g. a cell with no type).
InformationStructure validate_structure(const RawStructure& raw);

/// Restriction of T to a common certainty component S: states S in their
/// original order, cells intersected with S, types restricted to S.
/// Throws NotAComponentError if S is not forward-closed, EmptySetError if S
/// is empty.
InformationStructure induced_substructure(const InformationStructure& T, const StateSet& S);

/// The single-player structure (Omega, Pi_i, t_i).
InformationStructure player_view(const InformationStructure& T, PlayerIndex i);

/// Zero-extends a vector over the states of an induced substructure back to
/// the parent's state space.
std::vector<Rational> zero_extend(std::span<const Rational> values, const StateSet& S, std::size_t parent_size);

}  // namespace priorforge
