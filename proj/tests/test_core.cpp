#include <doctest.h>

#include <set>

#include "heightlab/algebraic.hpp"
#include "heightlab/factor.hpp"
#include "heightlab/parse.hpp"
#include "heightlab/resultant.hpp"

using namespace hl;

TEST_CASE("rational construction stays canonical") {
    CHECK(make_rat(2, 4) == make_rat(1, 2));
    CHECK(make_rat(3, -6) == make_rat(-1, 2));
    CHECK_THROWS_AS(make_rat(1, 0), std::domain_error);
}

TEST_CASE("integer polynomial basics") {
    IntPoly f = IntPoly::from_long({-2, 0, 1});  // X^2 - 2
    CHECK(f.degree() == 2);
    CHECK(f.eval(Int(3)) == 7);
    CHECK(f.derivative() == IntPoly::from_long({0, 2}));
    CHECK(f.sup_norm() == 2);
    CHECK(IntPoly::from_long({0, 0, 3, 6}).content() == 3);
    CHECK(IntPoly::from_long({0, 0, 1}).order_at_zero() == 2);
}

TEST_CASE("squarefree_part removes repeated factors") {
    IntPoly xm1 = IntPoly::from_long({-1, 1});
    IntPoly xp2 = IntPoly::from_long({2, 1});
    CHECK(squarefree_part(xm1 * xm1 * xp2) == xm1 * xp2);
    CHECK(squarefree_part(IntPoly::from_long({-2, 0, 1})) ==
          IntPoly::from_long({-2, 0, 1}));
    // 4X^2 - 4X + 1 = (2X - 1)^2
    CHECK(squarefree_part(IntPoly::from_long({1, -4, 4})) ==
          IntPoly::from_long({-1, 2}));
}

TEST_CASE("rational factorization is exact and complete") {
    // (2X+1)(3X-5)(X^2+X+1)
    IntPoly f = IntPoly::from_long({1, 2}) * IntPoly::from_long({-5, 3}) *
                IntPoly::from_long({1, 1, 1});
    auto fac = factor(f);
    CHECK(fac.factors.size() == 3);
    CHECK(fac.content == 1);
    IntPoly prod = IntPoly::constant(Int(1));
    for (auto& [g, mult] : fac.factors) {
        CHECK(is_irreducible(g));
        for (unsigned i = 0; i < mult; ++i) prod = prod * g;
    }
    CHECK(prod == f);
    CHECK_FALSE(is_irreducible(IntPoly::from_long({4, 0, 0, 0, 1})));  // X^4+4
    CHECK(is_irreducible(IntPoly::from_long({-2, 0, 1})));
}

TEST_CASE("resultant_y matches hand-computed eliminations") {
    BivarPoly F = parse_poly("Y^2 - X^3 - X");
    BivarPoly G = parse_poly("2*Y");
    RatPoly r = resultant_y(F, G);
    // det of the 3x3 Sylvester matrix: -4(X^3 + X)
    RatPoly want = parse_poly("-4*X^3 - 4*X").specialize_y(Rat(0));
    CHECK(r == want);

    CHECK(resultant_y(parse_poly("Y - X"), parse_poly("Y - X")).is_zero());

    RatPoly s = resultant_y(parse_poly("Y - X^2"), parse_poly("Y - 1"));
    // direct elimination: X^2 - 1 up to sign
    RatPoly pm = parse_poly("X^2 - 1").specialize_y(Rat(0));
    CHECK((s == pm || s == -pm));

    CHECK_THROWS(resultant_y(parse_poly("X"), parse_poly("X + 1")));
}

TEST_CASE("bivariate irreducibility over Q") {
    CHECK(is_irreducible(parse_poly("Y^2 - X^3 - X^2")));
    CHECK_FALSE(is_irreducible(parse_poly("Y^2 - X^2")));
    CHECK(is_irreducible(parse_poly("Y^2 - Y + X")));
}

TEST_CASE("min_poly_of_root selects the factor containing the root") {
    Rat tol = default_root_tol();
    BivarPoly E = parse_poly("Y^2 - X^3 - X");
    CHECK(min_poly_of_root(E, Rat(2), 0, tol).minpoly ==
          IntPoly::from_long({-10, 0, 1}));

    BivarPoly P = parse_poly("Y - X^2");
    AlgebraicNumber b = min_poly_of_root(P, Rat(3), 0, tol);
    CHECK(b.is_rational());
    CHECK(b.as_rational() == 9);

    BivarPoly S = parse_poly("Y^2 - X^2");
    auto roots = roots_of_specialization(S, Rat(1), tol);
    REQUIRE(roots.size() == 2);
    std::set<Rat> vals{roots[0].as_rational(), roots[1].as_rational()};
    CHECK(vals == std::set<Rat>{Rat(-1), Rat(1)});

    // specialization identically zero: the fiber is a vertical line
    CHECK_THROWS_WITH(specialize_to_int(parse_poly("X*Y - X"), Rat(0)),
                      "vertical line");
}

TEST_CASE("bivariate normal form and evaluation") {
    BivarPoly F = parse_poly("1/2*Y^2 - X");
    CHECK(F.deg_x() == 1);
    CHECK(F.deg_y() == 2);
    CHECK(F.scale() == make_rat(1, 2));  // primitive grid Y^2 - 2X
    CHECK(F.eval(Rat(2), Rat(2)) == 0);
    CHECK(F.derivative_y() == parse_poly("Y"));
    CHECK(parse_poly("Y^2 - X^3").substitute_x_power(2) ==
          parse_poly("Y^2 - X^6"));
    CHECK(parse_poly("Y - X^2").transpose() == parse_poly("X - Y^2"));
}
