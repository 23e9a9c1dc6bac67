#include <doctest.h>

#include "fixtures.hpp"
#include "socineff/inefficiency.hpp"

using namespace socineff;
using test::arrow_context;
using test::opposed_2x2_context;

TEST_CASE("normalized utilities in the three-alternative fixture") {
    auto c = arrow_context<Rat>();
    auto f = frontier_summary(c);
    CHECK(normalized_utility(c, f, 0, c.point(1)) == ExtendedRat(Rat(0)));
    CHECK(normalized_utility(c, f, 0, c.point(2)) == ExtendedRat(Rat(-9)));
    CHECK(normalized_utility(c, f, 0, c.point(0)) == ExtendedRat(Rat(1)));
}

TEST_CASE("social value in the three-alternative fixture") {
    auto c = arrow_context<Rat>();
    auto f = frontier_summary(c);
    CHECK(social_value(c, f, c.point(0)) == ExtendedRat(Rat(2) / 3));
    CHECK(social_value(c, f, c.point(2)) == ExtendedRat(Rat(-19) / 3));
}

TEST_CASE("inefficiency values in the three-alternative fixture") {
    auto c = arrow_context<Rat>();
    auto f = frontier_summary(c);
    CHECK(ihat(c, f, c.point(0)).value == ExtendedRat(Rat(0)));
    CHECK(ihat(c, f, c.point(1)).value == ExtendedRat(Rat(1) / 3));
    CHECK(ihat(c, f, c.point(2)).value == ExtendedRat(Rat(7)));
    Lottery<Rat> half(3, {{0, Rat(1) / 2}, {1, Rat(1) / 2}});
    CHECK(ihat(c, f, half).value == ExtendedRat(Rat(1) / 6));
    auto r = ihat(c, f, c.point(2));
    CHECK(r.v_max == Rat(2) / 3);
    CHECK(r.argmax_pure == 0);
    CHECK_FALSE(r.infinite_witness.has_value());
}

TEST_CASE("deleting the dominated alternative changes nothing") {
    auto c = arrow_context<Rat>();
    auto r = restrict_by_name(c, {"x", "y"});
    CHECK(ihat(r, r.point(0)).value == ihat(c, c.point(0)).value);
    CHECK(ihat(r, r.point(1)).value == ihat(c, c.point(1)).value);
}

TEST_CASE("indicator fixture values") {
    auto c = make_context<Rat>({"0", "1", "2"},
                               {{Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}});
    auto f = frontier_summary(c);
    CHECK(social_value(c, f, c.point(0)) == ExtendedRat(Rat(0)));
    CHECK(ihat(c, f, c.point(0)).value == ExtendedRat(Rat(1) / 2));
    CHECK(ihat(c, f, c.point(1)).value == ExtendedRat(Rat(0)));
    CHECK(ihat(c, f, c.point(2)).value == ExtendedRat(Rat(0)));
}

TEST_CASE("infinite inefficiency with frontier-indifferent individuals") {
    auto c = opposed_2x2_context<Rat>();
    auto f = frontier_summary(c);
    CHECK(ihat(c, f, c.point(0)).value == ExtendedRat(Rat(0)));
    auto r = ihat(c, f, c.point(1));
    CHECK(r.value.is_pos_inf());
    REQUIRE(r.infinite_witness.has_value());
    CHECK(*r.infinite_witness == 0);
    CHECK(is_infinite(c, f, c.point(1)));
    CHECK_FALSE(is_infinite(c, f, c.point(0)));
}

TEST_CASE("is_infinite agrees with ihat on mixed cases") {
    auto c = opposed_2x2_context<Rat>();
    auto f = frontier_summary(c);
    Lottery<Rat> mix(2, {{0, Rat(1) / 2}, {1, Rat(1) / 2}});
    CHECK(ihat(c, f, mix).value.is_pos_inf());
    CHECK(is_infinite(c, f, mix));
    // no frontier-indifferent individual: never infinite
    auto a = arrow_context<Rat>();
    auto fa = frontier_summary(a);
    for (std::size_t alt = 0; alt < 3; ++alt) CHECK_FALSE(is_infinite(a, fa, a.point(alt)));
}

TEST_CASE("affine reparameterization leaves inefficiency unchanged") {
    auto c = arrow_context<Rat>();
    // row i -> a_i * row_i + b_i with a_i > 0
    std::vector<Rat> scale = {Rat(3), Rat(1) / 7, Rat(5) / 2};
    std::vector<Rat> shift = {Rat(-2), Rat(10), Rat(1) / 3};
    std::vector<std::vector<Rat>> u;
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<Rat> row;
        for (std::size_t a = 0; a < 3; ++a) row.push_back(scale[i] * c.utility(i, a) + shift[i]);
        u.push_back(row);
    }
    auto c2 = make_context<Rat>(c.alternative_names(), u);
    for (std::size_t a = 0; a < 3; ++a)
        CHECK(ihat(c2, c2.point(a)).value == ihat(c, c.point(a)).value);
}

TEST_CASE("expected inefficiency is linear in the lottery") {
    auto c = arrow_context<Rat>();
    auto f = frontier_summary(c);
    auto x = c.point(0);
    auto y = Lottery<Rat>(3, {{1, Rat(1) / 3}, {2, Rat(2) / 3}});
    for (Rat alpha : {Rat(1) / 4, Rat(1) / 2, Rat(9) / 10}) {
        auto mix = Lottery<Rat>::mix(alpha, x, y);
        CHECK(ihat(c, f, mix).value ==
              alpha * ihat(c, f, x).value + (Rat(1) - alpha) * ihat(c, f, y).value);
    }
}
