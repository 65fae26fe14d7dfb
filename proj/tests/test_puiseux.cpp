#include <doctest.h>

#include "heightlab/eisenstein.hpp"
#include "heightlab/parse.hpp"

using namespace hl;

TEST_CASE("vanishing order at the origin") {
    CHECK(vanishing_order(parse_poly("Y^2 - X^3")) == 2);
    CHECK(vanishing_order(parse_poly("Y - X^2")) == 1);
    CHECK(vanishing_order(parse_poly("Y^3 - X*Y - X^3")) == 2);
    CHECK_THROWS(vanishing_order(parse_poly("X*Y - 1")));
}

TEST_CASE("puiseux exponents and the vanishing-order identity") {
    struct Case {
        const char* poly;
        long r;
    };
    for (auto& c : std::initializer_list<Case>{{"Y^2 - X^3", 2},
                                               {"Y^2 - X^2 - X^3", 2},
                                               {"Y^2 - X^3 - X", 1},
                                               {"Y^3 - X^4", 3},
                                               {"Y^3 - X^2", 2},
                                               {"Y^4 - X^5", 4},
                                               {"Y^5 - X^2", 2},
                                               {"Y^3 - X*Y - X^3", 2}}) {
        BivarPoly F = parse_poly(c.poly);
        CHECK(vanishing_order(F) == c.r);
        BranchSummary bs = puiseux_exponents(F);
        CHECK(bs.r_from_exponents == Rat(c.r));
        CHECK(check_pfs(F).holds);
    }
    // cusp: two roots of valuation 3/2
    BranchSummary cusp = puiseux_exponents(parse_poly("Y^2 - X^3"));
    REQUIRE(cusp.exponents.size() == 1);
    CHECK(cusp.exponents[0].nu() == make_rat(3, 2));
    CHECK(cusp.exponents[0].multiplicity == 2);
    CHECK(cusp.ell == 2);
}

TEST_CASE("catalan branch expansion") {
    BivarPoly F = parse_poly("Y^2 - Y + X");
    REQUIRE(count_rational_branches(F, 1) == 1);
    PuiseuxBranch br = expand_branch(F, 1, 0, 10);
    long want[] = {0, 1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
    for (long k = 1; k <= 10; ++k) CHECK(br.coeff(k) == want[k]);
    CHECK(branch_residual_ok(F, br));
}

TEST_CASE("ramified branch of the cusp") {
    BivarPoly F = parse_poly("Y^2 - X^3");
    CHECK(count_rational_branches(F, 1) == 0);
    REQUIRE(count_rational_branches(F, 2) == 2);
    PuiseuxBranch br = expand_branch(F, 2, 1, 12);
    CHECK(br.e == 2);
    CHECK(br.coeff(3) == 1);  // y = x^(3/2)
    CHECK(branch_residual_ok(F, br));
}

TEST_CASE("node splits into two unramified branches") {
    BivarPoly F = parse_poly("Y^2 - X^2 - X^3");
    REQUIRE(count_rational_branches(F, 1) == 2);
    PuiseuxBranch a = expand_branch(F, 1, 0, 8);
    PuiseuxBranch b = expand_branch(F, 1, 1, 8);
    // y = +-(x + x^2/2 - x^3/8 + ...)
    CHECK(a.coeff(1) == -b.coeff(1));
    CHECK((a.coeff(1) == 1 || b.coeff(1) == 1));
    PuiseuxBranch plus = a.coeff(1) == 1 ? a : b;
    CHECK(plus.coeff(2) == make_rat(1, 2));
    CHECK(plus.coeff(3) == make_rat(-1, 8));
    CHECK(branch_residual_ok(F, a));
    CHECK(branch_residual_ok(F, b));
}

TEST_CASE("irrational branches are reported, not silently dropped") {
    // Y^2 - 2X^2 - X^3: leading coefficients +-sqrt(2) are not rational
    BivarPoly F = parse_poly("Y^2 - 2*X^2 - X^3");
    CHECK(count_rational_branches(F, 1) == 0);
}

TEST_CASE("eisenstein divisor of the catalan branch") {
    BivarPoly F = parse_poly("Y^2 - Y + X");
    PuiseuxBranch br = expand_branch(F, 1, 0, 30);
    EisensteinReport rep = measure_eisenstein(br, F);
    CHECK(rep.holds);
    CHECK(rep.observed.prime_exponents.empty());  // catalan numbers are integers
    CHECK(rep.growth_estimate > 3.5);
    CHECK(rep.growth_estimate < 4.0);
}

TEST_CASE("eisenstein divisor picks up 2-adic denominators") {
    // Y^2 - 2Y + X: y = (x/2)(1 + x/4 + ...) has growing powers of 2 below
    BivarPoly F = parse_poly("Y^2 - 2*Y + X");
    PuiseuxBranch br = expand_branch(F, 1, 0, 30);
    EisensteinReport rep = measure_eisenstein(br, F);
    CHECK(rep.holds);
    REQUIRE(rep.observed.prime_exponents.count(Int(2)) == 1);
    CHECK(rep.observed.prime_exponents.at(Int(2)) > 0);
}
