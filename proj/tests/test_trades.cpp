#include "priorforge/certainty.hpp"
#include "priorforge/harness.hpp"
#include "priorforge/json_io.hpp"
#include "priorforge/trades.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace priorforge;
using pf_test::dist;
using pf_test::example;
using pf_test::example_path;
using pf_test::family;
using pf_test::q;

TEST_CASE("the three betting examples classify as stated")
{
    SUBCASE("agreeable bet on ex_pl2")
    {
        const auto T = example("ex_pl2.json");
        const auto c = classify_trade(T, load_payoffs(example_path("ex_plbet1_trade.json"), T));
        CHECK(c.is_trade);
        CHECK(c.agreeable);
        CHECK(c.weakly_agreeable);
        CHECK(c.acceptable);
        CHECK(c.expectations == ExpectationTable{q({"1/2", "1/2"}), q({"1/2", "1"})});
    }
    SUBCASE("weakly agreeable bet on pl4")
    {
        const auto T = example("pl4.json");
        const auto c = classify_trade(T, load_payoffs(example_path("ex_plbet2_trade.json"), T));
        CHECK(c.is_trade);
        CHECK_FALSE(c.agreeable);
        CHECK(c.weakly_agreeable);
        CHECK(c.acceptable);
        REQUIRE(c.positive_component);
        CHECK(*c.positive_component == StateSet{2, 3});
        REQUIRE(c.non_positive_expectation);
        CHECK(*c.non_positive_expectation == CellRef{0, 0});
    }
    SUBCASE("acceptable bet on ex_pl1")
    {
        const auto T = example("ex_pl1.json");
        const auto c = classify_trade(T, load_payoffs(example_path("ex_plbet3_trade.json"), T));
        CHECK(c.is_trade);
        CHECK(c.acceptable);
        CHECK_FALSE(c.weakly_agreeable);
        CHECK_FALSE(c.agreeable);
        REQUIRE(c.strict_expectation);
        CHECK(*c.strict_expectation == CellRef{0, 1});
    }
}

TEST_CASE("classification evidence")
{
    const auto T = example("pl4.json");
    const auto over = classify_trade(T, family({q({"1", "0", "0", "0"}), q({"0", "0", "0", "0"})}));
    CHECK_FALSE(over.is_trade);
    REQUIRE(over.budget_violation);
    CHECK(*over.budget_violation == 0);
    CHECK(over.is_semi_trade);

    const auto neg = classify_trade(T, family({q({"-1", "0", "0", "0"}), q({"1", "0", "0", "0"})}));
    CHECK(neg.is_trade);
    CHECK_FALSE(neg.is_semi_trade);
    CHECK_FALSE(neg.acceptable);
    REQUIRE(neg.negative_expectation);
    CHECK(*neg.negative_expectation == CellRef{0, 0});

    CHECK_THROWS_AS(classify_trade(T, family({q({"0", "0", "0", "0"})})), DimensionError);
    CHECK_THROWS_AS(classify_trade(T, family({q({"0", "0"}), q({"0", "0"})})), DimensionError);
}

TEST_CASE("weak agreeability need not give acceptability")
{
    const auto T = example("pl4.json");
    const auto c = classify_trade(T, family({q({"0", "0", "-1", "2"}), q({"-1", "-1", "1", "-2"})}));
    CHECK(c.is_trade);
    CHECK(c.weakly_agreeable);
    CHECK_FALSE(c.acceptable);
}

TEST_CASE("trade synthesis on the examples")
{
    SUBCASE("ex_pl2 admits an agreeable trade")
    {
        const auto T = example("ex_pl2.json");
        const auto w = find_agreeable_trade(T);
        REQUIRE(w);
        CHECK(w->objective > Rational(0));
        CHECK(classify_trade(T, w->trade).agreeable);
        CHECK(find_weakly_agreeable_trade(T));
    }
    SUBCASE("pl4 admits a weakly agreeable trade only")
    {
        const auto T = example("pl4.json");
        CHECK_FALSE(find_agreeable_trade(T));
        const auto w = find_weakly_agreeable_trade(T);
        REQUIRE(w);
        REQUIRE(w->component);
        CHECK(*w->component == StateSet{2, 3});
        const auto c = classify_trade(T, w->trade);
        CHECK(c.weakly_agreeable);
        CHECK(c.acceptable);
    }
    SUBCASE("ex_pl1 admits an acceptable trade only")
    {
        const auto T = example("ex_pl1.json");
        CHECK_FALSE(find_agreeable_trade(T));
        CHECK_FALSE(find_weakly_agreeable_trade(T));
        const auto w = find_acceptable_trade(T);
        REQUIRE(w);
        CHECK(w->objective == Rational(2));
        CHECK(acceptable_trade_optimum(T) == Rational(2));
    }
    SUBCASE("ex_plbet4 admits none")
    {
        const auto T = example("ex_plbet4.json");
        CHECK_FALSE(find_agreeable_trade(T));
        CHECK_FALSE(find_weakly_agreeable_trade(T));
        CHECK_FALSE(find_acceptable_trade(T));
        CHECK(acceptable_trade_optimum(T) == Rational(0));
    }
}

TEST_CASE("single-player money pump on pl")
{
    const auto T = example("pl.json");
    const auto p = dist({"1/10", "0", "9/10"});
    const auto w = find_single_money_pump(T, p);
    REQUIRE(w);
    CHECK(w->deficit == Rational(-1, 90));
    CHECK(w->semi_trade.payoffs[0] == PayoffVector(q({"-1/9", "1", "0"})));
    CHECK(verify_money_pump(T, *w));
    CHECK(w->maximal);
    CHECK(w->strongly_maximal);

    CHECK_FALSE(find_single_money_pump(T, dist({"9/20", "1/20", "1/2"})));
    CHECK_THROWS_AS(find_single_money_pump(example("pl4.json"), Distribution::uniform(4)), PlayerCountError);
}

TEST_CASE("the ex_pl2 pump needs a shifted second payoff")
{
    const auto T = example("ex_pl2.json");
    const auto p = Distribution::uniform(4);
    const auto f1 = q({"3/2", "-3/2", "7/2", "-7/2"});

    MoneyPumpWitness unshifted{p, family({f1, pf_test::negated(f1)}), Rational(0), true, true};
    CHECK(expectation(PayoffVector(f1), p) + expectation(PayoffVector(pf_test::negated(f1)), p) == Rational(0));
    CHECK_FALSE(verify_money_pump(T, unshifted));

    const Rational scale(2, 9);
    const auto f2 = PayoffVector(pf_test::negated(f1)).shifted(Rational(-1));
    CHECK(f2 == PayoffVector(q({"-5/2", "1/2", "-9/2", "5/2"})));
    MoneyPumpWitness shifted{p, PayoffFamily{{PayoffVector(f1).scaled(scale), f2.scaled(scale)}}, Rational(-2, 9), true,
                             true};
    CHECK(verify_money_pump(T, shifted));

    const auto found = find_multiplayer_money_pump(T, p);
    REQUIRE(found);
    CHECK(found->deficit < Rational(0));
    CHECK(verify_money_pump(T, *found));
}

TEST_CASE("distribution verdicts")
{
    SUBCASE("uniform on ex_pl1 is pumped")
    {
        const auto v = classify_distribution(example("ex_pl1.json"), Distribution::uniform(4));
        CHECK_FALSE(v.common_prior);
        REQUIRE(v.money_pump);
        CHECK(v.universal_pump());
        CHECK(v.strong_pump());
    }
    SUBCASE("a point mass on pl4 is pumped but not maximal")
    {
        const auto v = classify_distribution(example("pl4.json"), dist({"0", "0", "1", "0"}));
        CHECK(v.money_pump);
        CHECK_FALSE(v.maximal);
        CHECK_FALSE(v.universal_pump());
    }
    SUBCASE("the pl4 common prior is not universal")
    {
        const auto v = classify_distribution(example("pl4.json"), dist({"1/2", "1/2", "0", "0"}));
        REQUIRE(v.common_prior);
        CHECK_FALSE(v.money_pump);
        CHECK_FALSE(v.universal_prior());
    }
    SUBCASE("uniform on ex_plbet4 is a strong common prior")
    {
        const auto v = classify_distribution(example("ex_plbet4.json"), Distribution::uniform(4));
        CHECK(v.strong_prior());
    }
}

TEST_CASE("existence dualities on random structures")
{
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        GeneratorConfig cfg{seed, 5, 3, 6, Rational(1, 4), 0};
        const auto T = random_structure(cfg);
        const auto priors = analyze_priors(T);
        const auto agreeable = find_agreeable_trade(T);
        const auto weak = find_weakly_agreeable_trade(T);
        const auto acceptable = find_acceptable_trade(T);
        CHECK(priors.common.has_value() != agreeable.has_value());
        CHECK(priors.universal.has_value() != weak.has_value());
        CHECK(priors.strong.has_value() != acceptable.has_value());
        if (agreeable) {
            CHECK(weak);
        }
        if (weak) {
            CHECK(acceptable);
            CHECK(classify_trade(T, weak->trade).acceptable);
        }
        const auto& minimal = minimal_components(T).minimal;
        if (minimal.size() == 1 && minimal.front().size() == T.state_count()) {
            CHECK(agreeable.has_value() == weak.has_value());
        }
    }
}
