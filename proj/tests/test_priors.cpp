#include "priorforge/certainty.hpp"
#include "priorforge/harness.hpp"
#include "priorforge/priors.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace priorforge;
using pf_test::dist;
using pf_test::example;
using pf_test::q;

TEST_CASE("prior membership on the introductory example")
{
    const auto T = example("intro.json");
    const auto p1 = dist({"1/6", "1/6", "1/6", "1/4", "1/4"});
    CHECK(is_prior_for(T, 0, p1));
    CHECK_FALSE(is_prior_for(T, 1, p1));
    CHECK(hull_weights(T, 0, p1) == q({"1/2", "1/2"}));
    const auto flags = classify_prior(T, p1);
    CHECK(flags.prior_for == std::vector<bool>{true, false});
    CHECK_FALSE(flags.common);
    CHECK_FALSE(flags.universal);
    const auto uniform = classify_prior(T, Distribution::uniform(5));
    CHECK(uniform.common);
    CHECK(uniform.universal);
    CHECK(uniform.strong);
}

TEST_CASE("common priors of the examples")
{
    SUBCASE("ex_pl1")
    {
        const auto T = example("ex_pl1.json");
        const auto common = find_common_prior(T);
        REQUIRE(common);
        CHECK(verify_prior_witness(T, *common));
        const auto universal = find_universal_common_prior(T);
        REQUIRE(universal);
        CHECK(universal->prior == dist({"1/2", "0", "0", "1/2"}));
        CHECK(universal->hull_weights[0] == q({"1/2", "0", "1/2"}));
        CHECK(verify_prior_witness(T, *universal));
        CHECK_FALSE(find_strong_common_prior(T));
    }
    SUBCASE("ex_pl2")
    {
        const auto T = example("ex_pl2.json");
        CHECK_FALSE(find_common_prior(T));
        CHECK_FALSE(find_universal_common_prior(T));
        CHECK_FALSE(find_strong_common_prior(T));
    }
    SUBCASE("pl4")
    {
        const auto T = example("pl4.json");
        const auto common = find_common_prior(T);
        REQUIRE(common);
        CHECK(common->prior == dist({"1/2", "1/2", "0", "0"}));
        CHECK_FALSE(find_universal_common_prior(T));
        CHECK_FALSE(find_strong_common_prior(T));
    }
    SUBCASE("ex_plbet4")
    {
        const auto T = example("ex_plbet4.json");
        const auto strong = find_strong_common_prior(T);
        REQUIRE(strong);
        CHECK(strong->prior == Distribution::uniform(4));
        CHECK(lp::solve(common_prior_program(T)).objective_value == Rational(1, 2));
    }
    SUBCASE("intro")
    {
        const auto T = example("intro.json");
        const auto common = find_common_prior(T);
        REQUIRE(common);
        CHECK(common->prior == Distribution::uniform(5));
        REQUIRE(find_strong_common_prior(T));
    }
}

TEST_CASE("a tampered witness is rejected")
{
    const auto T = example("pl4.json");
    auto w = *find_common_prior(T);
    CHECK(verify_prior_witness(T, w));
    w.hull_weights[1] = q({"0", "1"});
    CHECK_FALSE(verify_prior_witness(T, w));
    PriorWitness wrong{dist({"1/4", "1/4", "1/4", "1/4"}), {q({"1/2", "1/2"}), q({"1/2", "1/2"})}};
    CHECK_FALSE(verify_prior_witness(T, wrong));
}

TEST_CASE("single-player disintegrability and conglomerability")
{
    const auto T = example("pl.json");
    const auto mix = dist({"9/20", "1/20", "1/2"});
    const auto d = is_disintegrable(T, mix);
    CHECK(d.disintegrable);
    REQUIRE(d.weights);
    CHECK(*d.weights == q({"1/2", "1/2"}));
    CHECK(is_conglomerable(T, mix).conglomerable);
    CHECK(single_player_prior(T, mix).disintegrable);

    const auto point = Distribution::point_mass(3, 0);
    CHECK_FALSE(is_disintegrable(T, point).disintegrable);
    const auto c = is_conglomerable(T, point);
    CHECK_FALSE(c.conglomerable);
    REQUIRE(c.violating_event);
    CHECK(*c.violating_event == StateSet{0});

    CHECK_FALSE(is_disintegrable(T, dist({"1/10", "0", "9/10"})).disintegrable);

    const auto two = example("pl4.json");
    CHECK_THROWS_AS(is_disintegrable(two, Distribution::uniform(4)), PlayerCountError);
    CHECK_THROWS_AS(is_conglomerable(two, Distribution::uniform(4)), PlayerCountError);
    CHECK_THROWS_AS(is_conglomerable(T, mix, 2), SizeCapError);
}

TEST_CASE("prior chain and polytope agreement on random structures")
{
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        GeneratorConfig cfg{seed, 5, 2, 6, Rational(1, 4), 0};
        const auto T = random_structure(cfg);
        const auto report = analyze_priors(T);
        if (report.strong) {
            CHECK(report.universal);
            CHECK(verify_prior_witness(T, *report.strong));
            CHECK(is_strongly_maximal(T, report.strong->prior));
        }
        if (report.universal) {
            CHECK(report.common);
            CHECK(verify_prior_witness(T, *report.universal));
            CHECK(is_maximal(T, report.universal->prior));
        }
        const auto polytope = common_prior_polytope(T);
        if (polytope.variable_count() <= 12 && polytope.constraints.size() <= 24) {
            const auto verts = lp::enumerate_basic_solutions(polytope);
            CHECK(verts.empty() == !report.common.has_value());
            for (const auto& v : verts) {
                CHECK(classify_prior(T, Distribution(v)).common);
            }
        }
    }
}
