#include <doctest.h>

#include "fixtures.hpp"
#include "socineff/context.hpp"

using namespace socineff;
using test::arrow_context;

TEST_CASE("make_context validates input") {
    CHECK_NOTHROW(make_context<Rat>({"x"}, {{Rat(0)}}));
    CHECK_THROWS_AS(make_context<Rat>({"x", "x"}, {{Rat(0), Rat(1)}}), DuplicateName);
    CHECK_THROWS_AS(make_context<Rat>({}, {}), EmptyAlternatives);
    CHECK_THROWS_AS(make_context<Rat>({"x", "y"}, {{Rat(0)}}), RaggedMatrix);
}

TEST_CASE("lottery validation") {
    CHECK_NOTHROW(Lottery<Rat>(2, {{0, Rat(1) / 2}, {1, Rat(1) / 2}}));
    CHECK_THROWS_AS(Lottery<Rat>(2, {{0, Rat(1) / 2}}), InvalidLottery);
    CHECK_THROWS_AS(Lottery<Rat>(2, {{0, Rat(3) / 2}, {1, Rat(-1) / 2}}), InvalidLottery);
    CHECK_THROWS_AS(Lottery<Rat>(2, {{2, Rat(1)}}), IndexOutOfRange);
    // duplicate atoms merge
    Lottery<Rat> merged(2, {{0, Rat(1) / 2}, {0, Rat(1) / 2}});
    CHECK(merged.probability_of(0) == Rat(1));
    // float mode tolerates 1e-13 slack but not 1e-6
    CHECK_NOTHROW(Lottery<double>(2, {{0, 0.5}, {1, 0.5 + 1e-13}}));
    CHECK_THROWS_AS(Lottery<double>(2, {{0, 0.5}, {1, 0.5 + 1e-6}}), InvalidLottery);
}

TEST_CASE("expected utility on the three-alternative fixture") {
    auto c = arrow_context<Rat>();
    CHECK(expected_utility(c, 2, c.point(c.index_of("y"))) == Rat(1));
    CHECK(expected_utility(c, 0, c.point(2)) == Rat(0));
    Lottery<Rat> half(3, {{0, Rat(1) / 2}, {1, Rat(1) / 2}});
    CHECK(expected_utility(c, 0, half) == Rat(19) / 20);
    CHECK_THROWS_AS(expected_utility(c, 5, half), IndexOutOfRange);
}

TEST_CASE("expected utility is affine in the lottery") {
    auto c = arrow_context<Rat>();
    auto x = Lottery<Rat>(3, {{0, Rat(1) / 3}, {2, Rat(2) / 3}});
    auto y = c.point(1);
    Rat alpha = Rat(2) / 7;
    auto mix = Lottery<Rat>::mix(alpha, x, y);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(expected_utility(c, i, mix) ==
              alpha * expected_utility(c, i, x) + (1 - alpha) * expected_utility(c, i, y));
}

TEST_CASE("compose shapes and utilities") {
    auto c1 = make_context<Rat>({"a", "b"}, {{Rat(1), Rat(0)}});
    auto c2 = make_context<Rat>({"p", "q", "r"}, {{Rat(0), Rat(1), Rat(2)}, {Rat(2), Rat(1), Rat(0)}});
    auto cc = compose(c1, c2);
    CHECK(cc.n_alternatives() == 6);
    CHECK(cc.n_individuals() == 3);
    // individual 0 sees only the first coordinate
    CHECK(cc.utility(0, 0) == Rat(1));  // (a,p)
    CHECK(cc.utility(0, 2) == Rat(1));  // (a,r)
    CHECK(cc.utility(0, 3) == Rat(0));  // (b,p)
    // individual 2 (= second of c2) sees only the second coordinate
    CHECK(cc.utility(2, 0) == Rat(2));
    CHECK(cc.utility(2, 3) == Rat(2));
    CHECK(cc.utility(2, 5) == Rat(0));
    CHECK_THROWS_AS(compose(c1, c2, 5), SizeLimitExceeded);
}

TEST_CASE("self_compose") {
    auto c = arrow_context<Rat>();
    CHECK(self_compose(c, 1) == c);
    auto c3 = self_compose(c, 3);
    CHECK(c3.n_alternatives() == 27);
    CHECK(c3.n_individuals() == 9);
    CHECK(self_compose(c, 2) == compose(c, c));
    CHECK_THROWS_AS(self_compose(c, 0), IndexOutOfRange);
}

TEST_CASE("product lottery") {
    Lottery<Rat> pa = Lottery<Rat>::point(2, 0);
    Lottery<Rat> pc = Lottery<Rat>::point(3, 2);
    auto prod = product_lottery<Rat>({pa, pc});
    CHECK(prod.domain() == 6);
    CHECK(prod.probability_of(2) == Rat(1));

    Lottery<Rat> mix(2, {{0, Rat(1) / 2}, {1, Rat(1) / 2}});
    auto prod2 = product_lottery<Rat>({mix, mix});
    CHECK(prod2.weights().size() == 4);
    for (const auto& [a, w] : prod2.weights()) CHECK(w == Rat(1) / 4);
    CHECK_THROWS_AS(product_lottery<Rat>({}), FactorMismatch);
}

TEST_CASE("permute individuals is a group action") {
    auto c = arrow_context<Rat>();
    CHECK(permute_individuals(c, {0, 1, 2}) == c);
    auto swapped = permute_individuals(c, {2, 1, 0});
    CHECK(swapped.row(0) == c.row(2));
    CHECK(permute_individuals(swapped, {2, 1, 0}) == c);
    CHECK_THROWS_AS(permute_individuals(c, {0, 0, 1}), NotAPermutation);
    CHECK_THROWS_AS(permute_individuals(c, {0, 1}), NotAPermutation);
}

TEST_CASE("restrict") {
    auto c = arrow_context<Rat>();
    auto r = restrict_by_name(c, {"x", "y"});
    CHECK(r.n_alternatives() == 2);
    CHECK(r.utility(2, 1) == Rat(1));
    CHECK(restrict(c, {0, 1, 2}) == c);
    CHECK_THROWS_AS(restrict(c, {}), EmptySubset);
    CHECK_THROWS_AS(restrict_by_name(c, {"w"}), UnknownAlternative);
}

TEST_CASE("rename alternatives") {
    auto c = arrow_context<Rat>();
    auto r = rename_alternatives(c, {{"x", "p"}, {"y", "q"}, {"z", "r"}});
    CHECK(r.alternative_names() == std::vector<std::string>{"p", "q", "r"});
    CHECK(r.row(0) == c.row(0));
    CHECK_THROWS_AS(rename_alternatives(c, {{"x", "p"}, {"y", "p"}, {"z", "r"}}), NotInjective);
    CHECK_THROWS_AS(rename_alternatives(c, {{"x", "p"}}), MissingName);
}
