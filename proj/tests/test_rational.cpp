#include <catch2/catch_amalgamated.hpp>

#include "tlat/prob_vector.hpp"
#include "tlat/rational.hpp"

#include "helpers.hpp"

using tlat::parse_rational;
using tlat::Rational;

TEST_CASE("rational parsing accepts fractions, integers and decimals") {
    CHECK(parse_rational("3/20") == Rational(3, 20));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("0.15") == Rational(3, 20));
    CHECK(parse_rational("-1/2") == Rational(-1, 2));
    CHECK(parse_rational("+0.25") == Rational(1, 4));
    CHECK(parse_rational(".5") == Rational(1, 2));
    CHECK(parse_rational("6/8") == Rational(3, 4));  // normalized
}

TEST_CASE("rational parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_rational(""), tlat::DomainError);
    CHECK_THROWS_AS(parse_rational("1/0"), tlat::DomainError);
    CHECK_THROWS_AS(parse_rational("1e-3"), tlat::DomainError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), tlat::DomainError);
    CHECK_THROWS_AS(parse_rational("abc"), tlat::DomainError);
    CHECK_THROWS_AS(parse_rational("1.2.3"), tlat::DomainError);
}

TEST_CASE("rational formatting round-trips") {
    for (const char* s : {"3/20", "1", "0", "22/7", "1/3"}) {
        Rational r = parse_rational(s);
        CHECK(parse_rational(tlat::to_string(r)) == r);
        CHECK(tlat::to_string(r) == s);
    }
}

TEST_CASE("probability vectors validate mass and sign") {
    CHECK_NOTHROW(PV({"1/2", "1/2"}));
    CHECK_NOTHROW(PV({"1", "0", "0"}));
    CHECK_THROWS_AS(PV({"1/2", "1/3"}), tlat::DomainError);
    CHECK_THROWS_AS(PV({"3/2", "-1/2"}), tlat::DomainError);

    auto n = tlat::ProbVector::normalized({Rational(2), Rational(1), Rational(1)});
    CHECK(n == PV({"1/2", "1/4", "1/4"}));

    CHECK(tlat::ProbVector::uniform(4) == PV({"1/4", "1/4", "1/4", "1/4"}));
}
