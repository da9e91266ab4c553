#pragma once

#include "priorforge/structure.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace priorforge {

struct GeneratorConfig {
    std::uint64_t seed = 1;
    std::size_t max_states = 6;
    std::size_t max_players = 3;
    /// Every generated probability has a denominator dividing some d <= bound.
    std::int64_t denominator_bound = 6;
    /// Chance that a state is left out of a type's (or a sample's) support.
    Rational zero_mass_rate = Rational(1, 4);
    /// Upper limit on cells per partition; 0 means no limit.
    std::size_t max_cells = 0;
};

/// Throws std::invalid_argument on an unusable configuration.
void validate_config(const GeneratorConfig& cfg);

enum class DistributionConstraint { Any, Maximal, StronglyMaximal };

const char* to_string(DistributionConstraint c);

/// 64-bit Mersenne Twister with its own range reduction, so draws are
/// identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n);
    /// Uniform in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi);
    /// True with probability r, r in [0, 1].
    bool chance(const Rational& r);

private:
    std::mt19937_64 engine_;
};

class Generator {
public:
    explicit Generator(const GeneratorConfig& cfg);

    /// Sizes uniform in [1, max]; each partition uniform over set partitions
    /// with at most max_cells cells.
    InformationStructure structure();

    /// Rejection sampling, at most 1000 draws, then a perturbed uniform
    /// distribution (which satisfies every constraint).
    Distribution distribution(const InformationStructure& T, DistributionConstraint constraint);

    Rng& rng() { return rng_; }

private:
    std::vector<Cell> partition(std::size_t states);
    std::vector<Rational> bounded_vector(const std::vector<StateIndex>& support_pool, std::size_t size);

    GeneratorConfig cfg_;
    Rng rng_;
};

InformationStructure random_structure(const GeneratorConfig& cfg);
Distribution random_distribution(const InformationStructure& T, const GeneratorConfig& cfg,
                                 DistributionConstraint constraint);

struct CrossCheckReport {
    bool passed = true;
    std::vector<std::string> failures;
    std::size_t verification_errors = 0;

    bool common_prior = false;
    bool universal_prior = false;
    bool strong_prior = false;
    bool agreeable_trade = false;
    bool weakly_agreeable_trade = false;
    bool acceptable_trade = false;

    std::size_t samples = 0;
    std::size_t pumps = 0;
    std::size_t maximal_samples = 0;
    std::size_t maximal_pumps = 0;
    std::size_t strongly_maximal_samples = 0;
    std::size_t strongly_maximal_pumps = 0;
    std::size_t single_player_checks = 0;
    std::size_t conglomerability_checks = 0;

    void fail(std::string what);
};

struct CrossCheckOptions {
    /// Distributions drawn per constraint kind.
    std::size_t samples = 3;
    std::uint64_t seed = 0;
    /// Conglomerability is only checked up to this many states.
    std::size_t conglomerability_cap = 12;
};

/// Runs the six exactly-one dualities, the prior and trade chains, witness
/// re-verification, the whole-space equivalences on sampled distributions,
/// and the single-player checks on each player's own structure.
CrossCheckReport cross_check(const InformationStructure& T, const CrossCheckOptions& options = {});

/// Removes state s: its cell loses it and the cell's type is renormalized.
/// Empty when the type put all its mass on s or s is the only state.
std::optional<InformationStructure> delete_state(const InformationStructure& T, StateIndex s);
std::optional<InformationStructure> delete_player(const InformationStructure& T, PlayerIndex i);

/// Greedy deletion of states and players while `fails` stays true.
InformationStructure minimize_failure(const InformationStructure& T,
                                      const std::function<bool(const InformationStructure&)>& fails);

struct FuzzOutcome {
    std::uint64_t seed = 0;
    InformationStructure structure;
    CrossCheckReport report;
    std::optional<InformationStructure> minimized;
};

/// random_structure(cfg) followed by cross_check; failures get minimized.
FuzzOutcome fuzz_one(const GeneratorConfig& cfg, const CrossCheckOptions& options = {});

}  // namespace priorforge
