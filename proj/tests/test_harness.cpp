#include "priorforge/certainty.hpp"
#include "priorforge/harness.hpp"
#include "priorforge/priors.hpp"

#include "support.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace priorforge;
using pf_test::example;

TEST_CASE("rng ranges")
{
    Rng rng(7);
    for (int k = 0; k < 1000; ++k) {
        CHECK(rng.below(3) < 3);
        const auto v = rng.between(-2, 2);
        CHECK(v >= -2);
        CHECK(v <= 2);
    }
    CHECK_FALSE(rng.chance(Rational(0)));
    CHECK(rng.chance(Rational(1)));
}

TEST_CASE("generation is deterministic in the seed")
{
    GeneratorConfig cfg;
    cfg.seed = 42;
    CHECK(random_structure(cfg) == random_structure(cfg));
    const auto T = random_structure(cfg);
    CHECK(random_distribution(T, cfg, DistributionConstraint::Maximal) ==
          random_distribution(T, cfg, DistributionConstraint::Maximal));
    bool differs = false;
    for (std::uint64_t s = 43; s < 60 && !differs; ++s) {
        cfg.seed = s;
        differs = !(random_structure(cfg) == T);
    }
    CHECK(differs);
}

TEST_CASE("generated structures respect the configuration")
{
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        GeneratorConfig cfg{seed, 6, 3, 6, Rational(1, 4), 3};
        const auto T = random_structure(cfg);
        CHECK(T.state_count() >= 1);
        CHECK(T.state_count() <= 6);
        CHECK(T.player_count() >= 1);
        CHECK(T.player_count() <= 3);
        for (PlayerIndex i = 0; i < T.player_count(); ++i) {
            CHECK(T.cells(i).size() <= 3);
            for (std::size_t c = 0; c < T.cells(i).size(); ++c) {
                for (const auto& m : T.cell_type(i, c).mass()) {
                    CHECK(m.denominator() <= 6);
                }
            }
        }
    }
}

TEST_CASE("one-state structures")
{
    GeneratorConfig cfg{5, 1, 2, 6, Rational(1, 4), 0};
    const auto T = random_structure(cfg);
    CHECK(T.state_count() == 1);
    CHECK(random_distribution(T, cfg, DistributionConstraint::StronglyMaximal) == Distribution::point_mass(1, 0));
    CHECK(cross_check(T).passed);
}

TEST_CASE("zero mass rate 0 gives full-support types and samples")
{
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        GeneratorConfig cfg{seed, 6, 3, 6, Rational(0), 0};
        Generator gen(cfg);
        const auto T = gen.structure();
        for (PlayerIndex i = 0; i < T.player_count(); ++i) {
            for (std::size_t c = 0; c < T.cells(i).size(); ++c) {
                const auto& cell = T.cells(i)[c];
                if (cell.size() <= 6) {
                    CHECK(T.cell_type(i, c).support().size() == cell.size());
                }
            }
        }
        CHECK(gen.distribution(T, DistributionConstraint::Any).support().size() == T.state_count());
    }
}

TEST_CASE("constrained distributions satisfy their constraint")
{
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        GeneratorConfig cfg{seed, 6, 3, 6, Rational(1, 2), 0};
        Generator gen(cfg);
        const auto T = gen.structure();
        CHECK(is_maximal(T, gen.distribution(T, DistributionConstraint::Maximal)));
        CHECK(is_strongly_maximal(T, gen.distribution(T, DistributionConstraint::StronglyMaximal)));
    }
}

TEST_CASE("invalid configurations")
{
    GeneratorConfig cfg;
    cfg.max_states = 0;
    CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
    cfg = {};
    cfg.max_states = 25;
    CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
    cfg = {};
    cfg.denominator_bound = 0;
    CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
    cfg = {};
    cfg.zero_mass_rate = Rational(3, 2);
    CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
    CHECK_NOTHROW(validate_config(GeneratorConfig{}));
}

TEST_CASE("cross-check passes on the examples")
{
    for (const char* name : {"ex_pl1.json", "ex_pl2.json", "pl4.json", "ex_plbet4.json", "intro.json", "pl.json"}) {
        const auto report = cross_check(example(name));
        CAPTURE(name);
        CHECK(report.passed);
        CHECK(report.failures.empty());
        CHECK(report.verification_errors == 0);
    }
    const auto r = cross_check(example("ex_pl1.json"));
    CHECK(r.common_prior);
    CHECK(r.universal_prior);
    CHECK_FALSE(r.strong_prior);
    CHECK_FALSE(r.agreeable_trade);
    CHECK_FALSE(r.weakly_agreeable_trade);
    CHECK(r.acceptable_trade);
}

TEST_CASE("state and player deletion")
{
    const auto T = example("intro.json");
    const auto smaller = delete_state(T, 4);
    REQUIRE(smaller);
    CHECK(smaller->state_count() == 4);
    CHECK(smaller->type(1, 2) == pf_test::dist({"0", "0", "1/2", "1/2"}));
    CHECK(smaller->type(0, 3) == Distribution::point_mass(4, 3));

    CHECK_FALSE(delete_state(example("ex_pl1.json"), 0));

    const auto solo = delete_player(T, 1);
    REQUIRE(solo);
    CHECK(solo->player_count() == 1);
    CHECK(solo->player_labels() == std::vector<std::string>{"1"});
    CHECK_FALSE(delete_player(*solo, 0));
}

TEST_CASE("minimization shrinks while the predicate holds")
{
    const auto T = example("intro.json");
    const auto minimized = minimize_failure(T, [](const InformationStructure& S) { return S.state_count() >= 2; });
    CHECK(minimized.state_count() == 2);
    CHECK(minimized.player_count() == 1);
}

TEST_CASE("fuzz over a seed range")
{
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        GeneratorConfig cfg{seed, 6, 3, 6, Rational(1, 4), 0};
        const auto outcome = fuzz_one(cfg);
        CAPTURE(seed);
        CHECK(outcome.report.passed);
        CHECK_FALSE(outcome.minimized);
        CHECK(outcome.seed == seed);
    }
}
