#include "priorforge/json_io.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace priorforge;
using pf_test::example;
using pf_test::q;

TEST_CASE("rationals parse from integers, strings and num/den objects")
{
    CHECK(parse_rational(Json(3)) == Rational(3));
    CHECK(parse_rational(Json("-9/10")) == Rational(-9, 10));
    CHECK(parse_rational(Json::parse(R"({"num": 2, "den": 4})")) == Rational(1, 2));
    CHECK_THROWS_AS(parse_rational(Json(0.5)), ParseError);
    CHECK_THROWS_AS(parse_rational(Json("0.5")), ParseError);
    CHECK_THROWS_AS(parse_rational(Json::parse(R"({"num": 1, "den": 0})")), ParseError);
    CHECK_THROWS_AS(parse_rational(Json(nullptr)), ParseError);
    CHECK(rational_to_json(Rational(-3, 4)) == Json("-3/4"));
}

TEST_CASE("structure documents round-trip exactly")
{
    for (const char* name : {"ex_pl1.json", "ex_pl2.json", "pl4.json", "ex_plbet4.json", "intro.json", "pl.json"}) {
        const auto T = example(name);
        const auto doc = structure_to_json(T);
        CHECK(doc["schema"] == kSchemaTag);
        CHECK(structure_from_json(doc) == T);
        CHECK(structure_from_text(doc.dump()) == T);
    }
}

TEST_CASE("per-state types and label-keyed vectors are accepted")
{
    const char* text = R"({
      "states": ["a", "b", "c"],
      "players": ["solo"],
      "partitions": {"solo": [["a", "b"], ["c"]]},
      "state_types": {"solo": {"a": {"a": "9/10", "b": "1/10"}, "b": ["9/10", "1/10", 0], "c": {"c": 1}}}
    })";
    const auto T = structure_from_text(text);
    CHECK(T.type(0, 0) == Distribution(q({"9/10", "1/10", "0"})));
    CHECK(T.cell_type(0, 1) == Distribution::point_mass(3, 2));
}

TEST_CASE("structure documents reject malformed input")
{
    CHECK_THROWS_AS(structure_from_text("{"), ParseError);
    CHECK_THROWS_AS(structure_from_text(R"({"schema": "other/2", "states": ["a"], "players": ["x"], "partitions": {"x": [["a"]]}, "types": {"x": {"0": [1]}}})"),
                    ParseError);
    CHECK_THROWS_AS(structure_from_text(R"({"states": ["a"], "players": ["x"], "partitions": {"x": [["a"]]}, "types": {"x": {"0": [1.0]}}})"),
                    ParseError);
    CHECK_THROWS_AS(structure_from_text(R"({"states": ["a"], "players": ["x"], "partitions": {"x": [["b"]]}, "types": {"x": {"0": [1]}}})"),
                    PartitionError);
    CHECK_THROWS_AS(structure_from_text(R"({"states": ["a"], "players": ["x"], "partitions": {}, "types": {}})"),
                    StructureError);
    CHECK_THROWS_AS(structure_from_text(R"({"states": ["a"], "players": ["x"], "partitions": {"x": [["a"]]}, "types": {"x": {"zero": [1]}}})"),
                    ParseError);
    CHECK_THROWS_AS(load_structure(pf_test::example_path("does_not_exist.json")), ParseError);
}

TEST_CASE("distribution and payoff documents")
{
    const auto T = example("pl.json");
    CHECK(parse_distribution(Json::parse(R"({"distribution": ["1/10", 0, "9/10"]})"), T) ==
          Distribution(q({"1/10", "0", "9/10"})));
    CHECK(parse_distribution(Json::parse(R"({"w3": "9/10", "w1": "1/10"})"), T) ==
          Distribution(q({"1/10", "0", "9/10"})));
    CHECK_THROWS_AS(parse_distribution(Json::parse(R"(["1/2", "1/2"])"), T), DimensionError);
    CHECK_THROWS_AS(parse_distribution(Json::parse(R"(["1/2", "1/4", "0"])"), T), StochasticityError);

    const auto f = parse_payoffs(Json::parse(R"({"payoffs": {"1": {"w1": -1, "w2": 9}}})"), T);
    CHECK(f.payoffs.size() == 1);
    CHECK(f.payoffs[0] == PayoffVector(q({"-1", "9", "0"})));
    CHECK_THROWS_AS(parse_payoffs(Json::parse(R"({"payoffs": {"2": [0, 0, 0]}})"), T), ParseError);

    const auto out = distribution_to_json(Distribution(q({"1/10", "0", "9/10"})), T);
    CHECK(out.dump() == R"({"w1":"1/10","w2":"0","w3":"9/10"})");
}
