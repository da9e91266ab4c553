#pragma once

#include "priorforge/lp.hpp"
#include "priorforge/structure.hpp"

#include <optional>
#include <vector>

namespace priorforge {

/// A prior together with, for every player, the convex weights over that
/// player's types (one per cell) reproducing it: prior = sum_c w[i][c] t_i(c).
struct PriorWitness {
    Distribution prior;
    std::vector<std::vector<Rational>> hull_weights;
};

/// Exact re-check of a witness: weights non-negative, summing to 1, and
/// reconstructing the prior for every player.
bool verify_prior_witness(const InformationStructure& T, const PriorWitness& w);

/// The only candidate weights for player i: the mass p puts on each cell.
std::vector<Rational> hull_weights(const InformationStructure& T, PlayerIndex i, const Distribution& p);

/// p lies in conv{t_i(c)}, i.e. p(s) = t_i(s)(s) * p(cell of s) for all s.
bool is_prior_for(const InformationStructure& T, PlayerIndex i, const Distribution& p);

struct DisintegrabilityResult {
    bool disintegrable = false;
    std::optional<std::vector<Rational>> weights;
};

/// Single-player structures only (PlayerCountError otherwise).
DisintegrabilityResult is_disintegrable(const InformationStructure& T, const Distribution& p);
DisintegrabilityResult single_player_prior(const InformationStructure& T, const Distribution& p);

struct ConglomerabilityResult {
    bool conglomerable = true;
    /// First failing event in bitmask order (state s is bit s).
    std::optional<StateSet> violating_event;
};

/// min_s t(s)(E) <= p(E) <= max_s t(s)(E) for every event E. Exhaustive;
/// throws SizeCapError above `max_states` and PlayerCountError unless T has
/// one player.
ConglomerabilityResult is_conglomerable(const InformationStructure& T, const Distribution& p,
                                        std::size_t max_states = 24);

/// Variables p_0..p_{M-1} then eps. Sum p = 1, every player's proportionality
/// rows p(s) = t(cell)(s) p(cell), p(cell) >= eps for every cell of every
/// player, eps in [0, 1]; maximize eps. Feasible iff a common prior exists;
/// optimum > 0 iff a strong common prior exists.
lp::LinearProgram common_prior_program(const InformationStructure& T);

/// Same constraints without eps or objective (pure feasibility polytope).
lp::LinearProgram common_prior_polytope(const InformationStructure& T);

std::optional<PriorWitness> find_common_prior(const InformationStructure& T);
std::optional<PriorWitness> find_universal_common_prior(const InformationStructure& T);
std::optional<PriorWitness> find_strong_common_prior(const InformationStructure& T);

struct PriorFlags {
    std::vector<bool> prior_for;
    bool common = false;
    bool maximal = false;
    bool strongly_maximal = false;
    bool universal = false;
    bool strong = false;
};

PriorFlags classify_prior(const InformationStructure& T, const Distribution& p);

struct PriorReport {
    std::optional<PriorWitness> common;
    std::optional<PriorWitness> universal;
    std::optional<PriorWitness> strong;
};

PriorReport analyze_priors(const InformationStructure& T);

}  // namespace priorforge
