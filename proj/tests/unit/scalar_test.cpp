#include <doctest.h>

#include "socineff/extended.hpp"
#include "socineff/scalar.hpp"

using namespace socineff;

TEST_CASE("parse_rational accepts p/q and integers") {
    CHECK(parse_rational("3/4") == Rat(3) / 4);
    CHECK(parse_rational("-3/4") == Rat(-3) / 4);
    CHECK(parse_rational("7") == Rat(7));
    CHECK(parse_rational("0") == Rat(0));
    CHECK(parse_rational("6/8") == Rat(3) / 4);
}

TEST_CASE("parse_rational rejects malformed input") {
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
}

TEST_CASE("format_scalar prints rationals in lowest terms") {
    CHECK(format_scalar(Rat(6) / 8) == "3/4");
    CHECK(format_scalar(Rat(5)) == "5");
    CHECK(format_scalar(Rat(-1) / 3) == "-1/3");
}

TEST_CASE("extended ratio conventions") {
    using E = ExtendedRat;
    CHECK(E::ratio(Rat(0), Rat(0)) == E(Rat(0)));
    CHECK(E::ratio(Rat(-1), Rat(0)).is_neg_inf());
    CHECK(E::ratio(Rat(1), Rat(0)).is_pos_inf());
    CHECK(E::ratio(Rat(3), Rat(4)) == E(Rat(3) / 4));
}

TEST_CASE("extended addition and scaling") {
    using E = ExtendedRat;
    CHECK((E(Rat(2)) + E::neg_inf()).is_neg_inf());
    CHECK((E::neg_inf() + E::neg_inf()).is_neg_inf());
    CHECK_THROWS_AS(E::pos_inf() + E::neg_inf(), std::logic_error);
    CHECK(Rat(0) * E::pos_inf() == E(Rat(0)));
    CHECK((Rat(2) * E::pos_inf()).is_pos_inf());
    CHECK((Rat(-2) * E::pos_inf()).is_neg_inf());
    CHECK(Rat(1) / 2 * E(Rat(4)) == E(Rat(2)));
    CHECK((E(Rat(3)) - E::neg_inf()).is_pos_inf());
}

TEST_CASE("extended ordering") {
    using E = ExtendedRat;
    CHECK(E::neg_inf() < E(Rat(0)));
    CHECK(E(Rat(0)) < E::pos_inf());
    CHECK(E::neg_inf() < E::pos_inf());
    CHECK(E(Rat(1)) < E(Rat(2)));
    CHECK_FALSE(E::pos_inf() < E::pos_inf());
    CHECK(E::pos_inf() == E::pos_inf());
    CHECK(E(Rat(1) / 2).str() == "1/2");
    CHECK(E::pos_inf().str() == "inf");
    CHECK(E::neg_inf().str() == "-inf");
}
