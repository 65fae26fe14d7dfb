#include <doctest.h>

#include "heightlab/aux_poly.hpp"
#include "heightlab/parse.hpp"

using namespace hl;

TEST_CASE("auxiliary polynomial reaches the forced vanishing order") {
    BivarPoly F = parse_poly("Y^2 - Y + X");
    PuiseuxBranch br = expand_branch(F, 1, 0, 30);
    AuxPolynomial a = build_aux_poly(F, br, 2, make_rat(1, 4));
    CHECK(a.target_order == 3);
    CHECK_FALSE(a.G.is_zero());
    CHECK(a.G.deg_x() <= 2);
    CHECK(a.G.deg_y() <= 1);
    CHECK(a.achieved_order >= 3);

    // the hand solution Y - X - X^2 also lies in the kernel: its residual
    // y - x - x^2 = 2x^3 + ... has order exactly 3
    RatPoly y = br.as_series();
    RatPoly res = y - RatPoly({Rat(0), Rat(1), Rat(1)});
    CHECK(res.order_at_zero() == 3);
    CHECK(res.coeff(3) == 2);
}

TEST_CASE("trivial instances") {
    // F = Y - X^2: any multiple of (Y - X^2) or a power of X works; order >= 1
    BivarPoly F = parse_poly("Y - X^2");
    PuiseuxBranch br = expand_branch(F, 1, 0, 12);
    AuxPolynomial a = build_aux_poly(F, br, 2, make_rat(1, 2));
    CHECK(a.target_order == 1);
    CHECK(a.achieved_order >= 1);

    BivarPoly C = parse_poly("Y^2 - Y + X");
    PuiseuxBranch bc = expand_branch(C, 1, 0, 12);
    AuxPolynomial ac = build_aux_poly(C, bc, 1, make_rat(1, 2));
    CHECK(ac.target_order == 1);
    CHECK(ac.achieved_order >= 1);
}

TEST_CASE("construction is deterministic and validates inputs") {
    BivarPoly F = parse_poly("Y^3 - Y + X");
    PuiseuxBranch br = expand_branch(F, 1, 0, 30);
    AuxPolynomial a1 = build_aux_poly(F, br, 4, make_rat(1, 4));
    AuxPolynomial a2 = build_aux_poly(F, br, 4, make_rat(1, 4));
    CHECK(a1.G == a2.G);
    CHECK(a1.achieved_order == a2.achieved_order);
    CHECK(a1.achieved_order >= a1.target_order);

    CHECK_THROWS(build_aux_poly(F, br, 4, Rat(1)));  // delta > 1/2
    PuiseuxBranch ram = expand_branch(parse_poly("Y^2 - X^3"), 2, 0, 30);
    CHECK_THROWS(build_aux_poly(parse_poly("Y^2 - X^3"), ram, 2, make_rat(1, 4)));
}
