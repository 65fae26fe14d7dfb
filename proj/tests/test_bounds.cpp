#include <doctest.h>

#include "heightlab/bounds.hpp"
#include "heightlab/parse.hpp"

using namespace hl;

TEST_CASE("schmidt resultant-height bound") {
    CHECK(check_schmidt(parse_poly("Y^2 - X^3")).holds);
    CHECK(check_schmidt(parse_poly("Y^2 - X^2 - X^3")).holds);
    // n = 1: the resultant is the constant leading coefficient, lhs = 0
    InequalityReport r = check_schmidt(parse_poly("Y - X"));
    CHECK(r.lhs.mid_d() == 0.0);
    CHECK(r.holds);
    CHECK_THROWS(check_schmidt(parse_poly("Y^2 - 2*X*Y + X^2")));  // (Y-X)^2
}

TEST_CASE("root-height bound per irreducible factor") {
    IntPoly f = IntPoly::from_long({-2, 0, 1}) * IntPoly::from_long({1, 2});
    auto reps = check_root_height(f);
    REQUIRE(reps.size() == 2);
    for (auto& r : reps) CHECK(r.holds);
}

TEST_CASE("evaluation bounds") {
    BivarPoly F = parse_poly("Y^2 - X^3 - X");
    Rat tol = default_root_tol();
    auto b = roots_of_specialization(F, Rat(2), tol)[0];
    CHECK(check_eval_bound2(F, Rat(2), b).holds);
    CHECK(check_eval_bound1(F, Rat(2), Rat(3)).holds);
    CHECK_THROWS(check_eval_bound1(parse_poly("Y - X"), Rat(1), Rat(1)));
}

TEST_CASE("coefficient versus smallest roots, all places") {
    IntPoly f = IntPoly::from_long({-2, 0, 1}) * IntPoly::from_long({1, 2});
    for (long ell = 0; ell < 3; ++ell) {
        CHECK(check_coeff_vs_roots(f, ell, Int(0)).holds);
        for (const Int& p : {Int(2), Int(3), Int(5)})
            CHECK(check_coeff_vs_roots(f, ell, p).holds);
    }
    // zero roots are the smallest possible subset members
    IntPoly g = IntPoly::from_long({0, -2, 0, 1});
    for (long ell = 0; ell < 3; ++ell) {
        CHECK(check_coeff_vs_roots(g, ell, Int(0)).holds);
        CHECK(check_coeff_vs_roots(g, ell, Int(2)).holds);
    }
    CHECK_THROWS(check_coeff_vs_roots(IntPoly::from_long({1, 2, 1}), 0, Int(0)));
}

TEST_CASE("system bound at a common point") {
    CHECK(check_system_bound(parse_poly("Y - X"), parse_poly("Y - 1"), Rat(1)).holds);
    CHECK_THROWS(check_system_bound(parse_poly("Y - X"), parse_poly("Y - X"), Rat(0)));
    CHECK_THROWS(check_system_bound(parse_poly("Y - X"), parse_poly("Y - 1"), Rat(5)));
}

TEST_CASE("main theorem dichotomy on the cusp") {
    BivarPoly F = parse_poly("Y^2 - X^3");
    Rat tol = default_root_tol();
    auto b = roots_of_specialization(F, Rat(4), tol)[1];  // beta = 8
    DichotomyReport d = main_theorem_check(F, Rat(4), b, make_rat(1, 2));
    CHECK(d.r == 2);
    CHECK(d.n == 2);
    CHECK(d.branch_taken == DichotomyBranch::small_height);
    CHECK(d.invariant_holds);
    // lgcd(4, 8)/2 = h(4)/2 = log 2 exactly
    CHECK(d.lhs_main.contains_zero());
    CHECK(d.lhs_main.hi_d() < 1e-30);
    CHECK_THROWS(main_theorem_check(F, Rat(4), b, Rat(2)));
}

TEST_CASE("main lemma right-hand sides are positive and ordered in e") {
    BivarPoly F = parse_poly("Y^2 - X^3 - X");
    RealInterval ha = RealInterval::exact(Rat(10));
    auto v1 = main_lemma_rhs(F, make_rat(1, 2), MainLemmaKind::eml1);
    auto v2 = main_lemma_rhs(F, make_rat(1, 2), MainLemmaKind::eml2, 1, ha);
    auto r1 = main_lemma_rhs(F, make_rat(1, 2), MainLemmaKind::erml1, 3);
    auto r2 = main_lemma_rhs(F, make_rat(1, 2), MainLemmaKind::erml2, 3, ha);
    CHECK(v1.definitely_positive());
    CHECK(v2.definitely_positive());
    // the ramified variant with e=3 dominates the unramified one (e^2 factor)
    CHECK(v1.definitely_lt(r1));
    CHECK(r2.definitely_positive());
}
