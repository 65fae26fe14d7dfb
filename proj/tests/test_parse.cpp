#include <doctest.h>

#include "heightlab/parse.hpp"

using namespace hl;

TEST_CASE("polynomial grammar") {
    CHECK(parse_poly("Y^2 - X^3") == parse_poly("Y*Y - X*X*X"));
    CHECK(parse_poly("(Y - X)*(Y + X)") == parse_poly("Y^2 - X^2"));
    CHECK(parse_poly("2X^3") == parse_poly("2 * X^3"));
    CHECK(parse_poly("1/2*Y - X").coeff(0, 1) == make_rat(1, 2));
    CHECK(parse_poly("-Y") == parse_poly("0 - Y"));
    CHECK(parse_poly(" Y ^ 2 - X ") == parse_poly("Y^2-X"));
    CHECK(parse_poly("0").is_zero());
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_poly("Y +"), ParseError);
    CHECK_THROWS_AS(parse_poly("Z"), ParseError);
    CHECK_THROWS_AS(parse_poly("(Y"), ParseError);
    CHECK_THROWS_AS(parse_poly("1/0"), ParseError);
    CHECK_THROWS_AS(parse_poly("Y^"), ParseError);
    CHECK_THROWS_AS(parse_rational("a/b"), ParseError);
}

TEST_CASE("printing round-trips") {
    for (const char* txt :
         {"Y^2 - X^3", "Y^2 - X^2 - X^3", "-3/2*X^2*Y + X - 1", "Y - X^2",
          "3*Y^2 - Y + 2*X - X^2", "Y^3 - X*Y - X^3", "Y^5 - X^2"}) {
        BivarPoly p = parse_poly(txt);
        CHECK(parse_poly(p.str()) == p);
    }
}

TEST_CASE("rational literals") {
    CHECK(parse_rational("-3/6") == make_rat(-1, 2));
    CHECK(parse_rational("12") == 12);
    CHECK(parse_rational(" 7 / 2 ") == make_rat(7, 2));
}

TEST_CASE("curve and config files") {
    CurveSpec spec = parse_curve_text(
        "# comment\nname = cusp\npoly = Y^2 - X^3\nabs_irreducible = true\n",
        "inline");
    CHECK(spec.name == "cusp");
    CHECK(spec.abs_irreducible);
    CHECK(spec.poly == parse_poly("Y^2 - X^3"));
    CHECK_THROWS_AS(parse_curve_text("name = x\n", "inline"), ParseError);

    auto kv = parse_kv_text("a = 1\n\n# c\nb = two words\n", "inline");
    CHECK(kv.at("a") == "1");
    CHECK(kv.at("b") == "two words");
    CHECK_THROWS_AS(parse_kv_text("nonsense\n", "inline"), ParseError);
}
