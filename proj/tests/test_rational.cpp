#include "priorforge/rational.hpp"

#include <doctest.h>

#include <limits>
#include <sstream>

using priorforge::Rational;

TEST_CASE("rational normalizes sign and lowest terms")
{
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(10, 5).is_integer());
    CHECK(Rational(10, 5) == Rational(2));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational parse accepts integers and fractions only")
{
    CHECK(Rational::parse("9/10") == Rational(9, 10));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK(Rational::parse("+4/8") == Rational(1, 2));
    CHECK_THROWS_AS(Rational::parse("0.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1e3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact")
{
    const Rational a(1, 3);
    const Rational b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK(Rational(9, 10) * Rational(-1) + Rational(1, 10) * Rational(9) == Rational(0));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("rational overflows into GMP and comes back")
{
    const Rational big(std::numeric_limits<std::int64_t>::max());
    const Rational sq = big * big;
    CHECK(sq.str() == "85070591730234615847396907784232501249");
    CHECK(sq / big == big);
    const Rational tiny(1, std::numeric_limits<std::int64_t>::max());
    CHECK((tiny * tiny * big * big) == Rational(1));
    CHECK(Rational(std::numeric_limits<std::int64_t>::min()).str() == "-9223372036854775808");
    CHECK(Rational(std::numeric_limits<std::int64_t>::min()) + Rational(1) == Rational(std::numeric_limits<std::int64_t>::min() + 1));
}

TEST_CASE("rational ordering")
{
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK((Rational(1, 2) <=> Rational(1, 2)) == std::strong_ordering::equal);
    const Rational big = Rational(std::numeric_limits<std::int64_t>::max()) * Rational(3);
    CHECK(big > Rational(std::numeric_limits<std::int64_t>::max()));
    CHECK(-big < Rational(std::numeric_limits<std::int64_t>::min()));
    CHECK(Rational(3).sign() == 1);
    CHECK(Rational(-3, 7).abs() == Rational(3, 7));
    std::ostringstream os;
    os << Rational(-7, 21);
    CHECK(os.str() == "-1/3");
}
