#include "doctest.h"

#include "cstrig/parse.hpp"

using namespace cstrig;

TEST_CASE("expression parser basics") {
    ZPolyK p = parse_zk_expression("z1^2 - 2 z3 - 2 z1 - 7", 7);
    CHECK(p.term_count() == 4);
    CHECK(p.coefficient(Weight{2, 0, 0, 0, 0, 0, 0}) == KappaRational(1));
    CHECK(p.coefficient(Weight{0, 0, 1, 0, 0, 0, 0}) == KappaRational(-2));
    CHECK(p.coefficient(Weight::zero(7)) == KappaRational(-7));

    CHECK(parse_zk_expression("2 + 3", 1) == ZPolyK::constant(1, KappaRational(5)));
    CHECK(parse_zk_expression("2 * 3 z1", 1) == parse_zk_expression("6 z1", 1));
    CHECK(parse_zk_expression("-(1 - z1)", 1) == parse_zk_expression("z1 - 1", 1));
    CHECK(parse_zk_expression("(1 + k)^2", 1) ==
          parse_zk_expression("1 + 2 k + k^2", 1));
}

TEST_CASE("fractions bind to a single factor") {
    ZPolyK p = parse_zk_expression("(-10 k z6)/((1 + k) (1 + 4 k))", 7);
    CHECK(p.term_count() == 1);
    KappaRational c = p.coefficient(Weight{0, 0, 0, 0, 0, 1, 0});
    CHECK(c.den() == (KappaPoly(1) + KappaPoly::variable()) *
                         (KappaPoly(1) + KappaPoly(4) * KappaPoly::variable()));
    // a/b c multiplies c back in
    CHECK(parse_zk_expression("4/2 z1", 1) == parse_zk_expression("2 z1", 1));
}

TEST_CASE("parser rejects bad input") {
    CHECK_THROWS_AS(parse_zk_expression("z1 +", 1), ParseError);
    CHECK_THROWS_AS(parse_zk_expression("z2", 1), ParseError);
    CHECK_THROWS_AS(parse_zk_expression("z0", 1), ParseError);
    CHECK_THROWS_AS(parse_zk_expression("1/(z1)", 1), ParseError);
    CHECK_THROWS_AS(parse_zk_expression("(1 + k", 1), ParseError);
    CHECK_THROWS_AS(parse_zk_expression("x + 1", 1), ParseError);
}

TEST_CASE("rendered polynomials re-parse to the same value") {
    const char* samples[] = {
        "z1^2 - 2 z3 - 2 z1 - 7",
        "(7 (-1 + k))/((1 + 17 k)) + z1",
        "3 z7 + 54 k z7",
        "(-2 (1 + 59 k^2))/((1 + k) (1 + 5 k) (1 + 9 k)) + z7^2",
    };
    for (const char* src : samples) {
        ZPolyK p = parse_zk_expression(src, 7);
        CHECK(parse_zk_expression(p.to_string(Style::plain), 7) == p);
        CHECK(parse_zk_expression(p.to_string(Style::mathematica), 7) == p);
    }
}

TEST_CASE("digit-string weights") {
    CHECK(weight_from_digits("0000002", 7) == Weight{0, 0, 0, 0, 0, 0, 2});
    CHECK_THROWS_AS(weight_from_digits("123", 7), ParseError);
}
