#include "priorforge/structure.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace priorforge;
using pf_test::dist;
using pf_test::example;
using pf_test::q;

namespace {

RawStructure pl_raw()
{
    RawStructure raw;
    raw.states = {"w1", "w2", "w3"};
    raw.players = {"1"};
    RawStructure::Player p;
    p.cells = {{0, 1}, {2}};
    p.cell_types[0] = q({"9/10", "1/10", "0"});
    p.cell_types[1] = q({"0", "0", "1"});
    raw.per_player.push_back(p);
    return raw;
}

}  // namespace

TEST_CASE("validate_structure accepts Example pl and expands types per state")
{
    const auto T = validate_structure(pl_raw());
    CHECK(T.state_count() == 3);
    CHECK(T.player_count() == 1);
    CHECK(T.type(0, 0) == dist({"9/10", "1/10", "0"}));
    CHECK(T.type(0, 1) == T.type(0, 0));
    CHECK(T.type(0, 2) == Distribution::point_mass(3, 2));
    CHECK(T.cell_index(0, 1) == 0);
    CHECK(T.total_cells() == 2);
}

TEST_CASE("validate_structure accepts the one-state structure")
{
    RawStructure raw;
    raw.states = {"w"};
    raw.players = {"solo"};
    raw.per_player.push_back({{{0}}, {{0, q({"1"})}}, {}});
    const auto T = validate_structure(raw);
    CHECK(T.state_count() == 1);
    CHECK(T.type(0, 0) == Distribution::point_mass(1, 0));
}

TEST_CASE("validate_structure rejects mass outside the cell")
{
    auto raw = pl_raw();
    raw.per_player[0].cell_types.clear();
    raw.per_player[0].state_types[0] = q({"1/2", "0", "1/2"});
    raw.per_player[0].state_types[1] = q({"9/10", "1/10", "0"});
    raw.per_player[0].state_types[2] = q({"0", "0", "1"});
    CHECK_THROWS_AS(validate_structure(raw), SupportError);
}

TEST_CASE("validate_structure error categories")
{
    SUBCASE("overlapping cells")
    {
        auto raw = pl_raw();
        raw.per_player[0].cells = {{0, 1}, {1, 2}};
        CHECK_THROWS_AS(validate_structure(raw), PartitionError);
    }
    SUBCASE("missing state")
    {
        auto raw = pl_raw();
        raw.per_player[0].cells = {{0, 1}};
        raw.per_player[0].cell_types.erase(1);
        CHECK_THROWS_AS(validate_structure(raw), PartitionError);
    }
    SUBCASE("mass not summing to one")
    {
        auto raw = pl_raw();
        raw.per_player[0].cell_types[0] = q({"9/10", "0", "0"});
        CHECK_THROWS_AS(validate_structure(raw), StochasticityError);
    }
    SUBCASE("negative mass")
    {
        auto raw = pl_raw();
        raw.per_player[0].cell_types[0] = q({"11/10", "-1/10", "0"});
        CHECK_THROWS_AS(validate_structure(raw), StochasticityError);
    }
    SUBCASE("two types in one cell")
    {
        auto raw = pl_raw();
        raw.per_player[0].cell_types.clear();
        raw.per_player[0].state_types[0] = q({"9/10", "1/10", "0"});
        raw.per_player[0].state_types[1] = q({"1/2", "1/2", "0"});
        raw.per_player[0].state_types[2] = q({"0", "0", "1"});
        CHECK_THROWS_AS(validate_structure(raw), InconsistencyError);
    }
    SUBCASE("cell without a type")
    {
        auto raw = pl_raw();
        raw.per_player[0].cell_types.erase(1);
        CHECK_THROWS_AS(validate_structure(raw), StructureError);
    }
    SUBCASE("wrong type length")
    {
        auto raw = pl_raw();
        raw.per_player[0].cell_types[1] = q({"0", "1"});
        CHECK_THROWS_AS(validate_structure(raw), DimensionError);
    }
    SUBCASE("no players")
    {
        auto raw = pl_raw();
        raw.players.clear();
        raw.per_player.clear();
        CHECK_THROWS_AS(validate_structure(raw), StructureError);
    }
}

TEST_CASE("validate_structure is idempotent on the examples")
{
    for (const char* name : {"ex_pl1.json", "ex_pl2.json", "pl4.json", "ex_plbet4.json", "intro.json", "pl.json"}) {
        const auto T = example(name);
        CHECK(validate_structure(T.to_raw()) == T);
        for (PlayerIndex i = 0; i < T.player_count(); ++i) {
            for (StateIndex s = 0; s < T.state_count(); ++s) {
                std::vector<Rational> indicator(T.state_count());
                for (StateIndex r : T.cell_of(i, s)) {
                    indicator[r] = 1;
                }
                CHECK(expectation(PayoffVector(indicator), T.type(i, s)) == Rational(1));
            }
        }
    }
}

TEST_CASE("induced substructure of ex_pl1 on {w1,w4}")
{
    const auto T = example("ex_pl1.json");
    const auto sub = induced_substructure(T, {0, 3});
    CHECK(sub.state_count() == 2);
    CHECK(sub.state_labels() == std::vector<std::string>{"w1", "w4"});
    for (PlayerIndex i = 0; i < 2; ++i) {
        CHECK(sub.cells(i).size() == 2);
        CHECK(sub.type(i, 0) == Distribution::point_mass(2, 0));
        CHECK(sub.type(i, 1) == Distribution::point_mass(2, 1));
    }
    CHECK(induced_substructure(T, {0, 1, 2, 3}) == T);
    CHECK_THROWS_AS(induced_substructure(T, {1, 2}), NotAComponentError);
    CHECK_THROWS_AS(induced_substructure(T, {}), EmptySetError);
}

TEST_CASE("expectation examples from Example pl")
{
    const PayoffVector f(q({"-1", "9", "0"}));
    CHECK(expectation(f, dist({"9/10", "1/10", "0"})) == Rational(0));
    CHECK(expectation(f, dist({"1/10", "0", "9/10"})) == Rational(-1, 10));
    for (StateIndex s = 0; s < 3; ++s) {
        CHECK(expectation(f, Distribution::point_mass(3, s)) == f[s]);
    }
    CHECK_THROWS_AS(expectation(f, Distribution::uniform(2)), DimensionError);
}

TEST_CASE("player view and zero extension")
{
    const auto T = example("ex_pl1.json");
    const auto ben = player_view(T, 1);
    CHECK(ben.player_count() == 1);
    CHECK(ben.player_labels()[0] == "Ben");
    CHECK(ben.cells(0).size() == 2);
    CHECK(zero_extend(q({"1/2", "1/2"}), {0, 3}, 4) == q({"1/2", "0", "0", "1/2"}));
    CHECK_THROWS_AS(zero_extend(q({"1"}), {0, 3}, 4), DimensionError);
}
