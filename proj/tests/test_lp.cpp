#include "priorforge/lp.hpp"
#include "priorforge/priors.hpp"

#include "support.hpp"

#include <doctest.h>

#include <sstream>

using namespace priorforge;
using pf_test::example;
using pf_test::q;

namespace {

lp::LinearProgram simplex_polytope(std::size_t n)
{
    lp::LinearProgram program;
    for (std::size_t k = 0; k < n; ++k) {
        program.add_variable("x" + std::to_string(k));
    }
    program.add_constraint(std::vector<Rational>(n, Rational(1)), lp::Relation::Equal, Rational(1), "sum");
    return program;
}

}  // namespace

TEST_CASE("small maximization")
{
    lp::LinearProgram program;
    program.add_variable("x");
    program.add_variable("y");
    program.add_constraint(q({"1", "1"}), lp::Relation::LessEqual, Rational(4));
    program.add_constraint(q({"1", "3"}), lp::Relation::LessEqual, Rational(6));
    program.set_objective(lp::Sense::Maximize, q({"1", "2"}));
    const auto out = lp::solve(program);
    REQUIRE(out.status == lp::Status::Optimal);
    CHECK(out.primal == q({"3", "1"}));
    CHECK(*out.objective_value == Rational(5));
    CHECK(lp::is_feasible_point(program, out.primal));
}

TEST_CASE("free variables and minimization")
{
    lp::LinearProgram program;
    program.add_variable("x", std::nullopt, std::nullopt);
    program.add_constraint(q({"1"}), lp::Relation::GreaterEqual, Rational(-7, 2));
    program.set_objective(lp::Sense::Minimize, q({"1"}));
    const auto out = lp::solve(program);
    REQUIRE(out.status == lp::Status::Optimal);
    CHECK(*out.objective_value == Rational(-7, 2));
}

TEST_CASE("unbounded program")
{
    lp::LinearProgram program;
    program.add_variable("x");
    program.set_objective(lp::Sense::Maximize, q({"1"}));
    CHECK(lp::solve(program).status == lp::Status::Unbounded);
}

TEST_CASE("infeasible program carries a checked Farkas certificate")
{
    lp::LinearProgram program;
    program.add_variable("x");
    program.add_variable("y");
    program.add_constraint(q({"1", "1"}), lp::Relation::LessEqual, Rational(1));
    program.add_constraint(q({"1", "1"}), lp::Relation::GreaterEqual, Rational(2));
    const auto out = lp::solve(program);
    REQUIRE(out.status == lp::Status::Infeasible);
    REQUIRE(out.certificate);
    CHECK(lp::verify_farkas(program, *out.certificate));
    auto broken = *out.certificate;
    broken.rows[0] = Rational(0);
    CHECK_FALSE(lp::verify_farkas(program, broken));
}

TEST_CASE("ex_pl2 has no common prior; the certificate checks")
{
    const auto program = common_prior_program(example("ex_pl2.json"));
    const auto out = lp::solve(program);
    REQUIRE(out.status == lp::Status::Infeasible);
    REQUIRE(out.certificate);
    CHECK(lp::verify_farkas(program, *out.certificate));
    CHECK(lp::enumerate_basic_solutions(common_prior_polytope(example("ex_pl2.json"))).empty());
}

TEST_CASE("ex_plbet4 minimum cell mass is one half")
{
    const auto program = common_prior_program(example("ex_plbet4.json"));
    const auto out = lp::solve(program);
    REQUIRE(out.status == lp::Status::Optimal);
    CHECK(*out.objective_value == Rational(1, 2));
}

TEST_CASE("vertex enumeration")
{
    SUBCASE("simplex has the unit vectors")
    {
        const auto verts = lp::enumerate_basic_solutions(simplex_polytope(3));
        CHECK(verts == std::vector<std::vector<Rational>>{q({"0", "0", "1"}), q({"0", "1", "0"}), q({"1", "0", "0"})});
    }
    SUBCASE("ex_pl1 common priors are the two point masses")
    {
        const auto verts = lp::enumerate_basic_solutions(common_prior_polytope(example("ex_pl1.json")));
        CHECK(verts == std::vector<std::vector<Rational>>{q({"0", "0", "0", "1"}), q({"1", "0", "0", "0"})});
    }
    SUBCASE("pl4 has one common prior")
    {
        const auto verts = lp::enumerate_basic_solutions(common_prior_polytope(example("pl4.json")));
        CHECK(verts == std::vector<std::vector<Rational>>{q({"1/2", "1/2", "0", "0"})});
    }
    SUBCASE("caps")
    {
        CHECK_THROWS_AS(lp::enumerate_basic_solutions(simplex_polytope(13)), SizeCapError);
        CHECK_NOTHROW(lp::enumerate_basic_solutions(simplex_polytope(13), lp::EnumerationCaps{13, 24}));
    }
}

TEST_CASE("malformed programs are rejected")
{
    lp::LinearProgram program;
    program.add_variable("x");
    program.constraints.push_back({q({"1", "2"}), lp::Relation::Equal, Rational(1), "wide"});
    CHECK_THROWS_AS(program.validate(), MalformedProgramError);
    CHECK_THROWS_AS(lp::solve(program), MalformedProgramError);
}

TEST_CASE("solve is deterministic and the dump is stable")
{
    const auto program = common_prior_program(example("intro.json"));
    const auto a = lp::solve(program);
    const auto b = lp::solve(program);
    CHECK(a.primal == b.primal);
    CHECK(a.objective_value == b.objective_value);
    std::ostringstream first;
    std::ostringstream second;
    {
        lp::ScopedDump dump(first);
        lp::solve(program);
    }
    lp::solve(program);
    {
        lp::ScopedDump dump(second);
        lp::solve(program);
    }
    CHECK_FALSE(first.str().empty());
    CHECK(first.str() == second.str());
    CHECK(first.str() == program.dump());
}
