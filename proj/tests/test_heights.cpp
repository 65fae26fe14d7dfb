#include <doctest.h>

#include <cmath>

#include "heightlab/heights.hpp"
#include "heightlab/parse.hpp"

using namespace hl;

namespace {
bool close(const RealInterval& x, double v, double tol = 1e-12) {
    return std::abs(x.mid_d() - v) <= tol;
}
}  // namespace

TEST_CASE("height of rationals") {
    CHECK(height_rational(Rat(0)).total.mid_d() == 0.0);
    CHECK(height_rational(Rat(1)).total.mid_d() == 0.0);
    CHECK(close(height_rational(make_rat(3, 2)).total, std::log(3.0)));
    CHECK(close(height_rational(make_rat(-7, 10)).total, std::log(10.0)));
    // breakdown: h(3/2) = log 3 = arch log 3/2 + one 2-adic unit
    auto h = height_rational(make_rat(3, 2));
    CHECK(h.nonarch.at(Int(2)) == 1);
}

TEST_CASE("mahler and places routes agree") {
    Rat tol = default_root_tol();
    for (const char* txt : {"Y^2 - 2", "2*Y^2 - 1", "Y^2 - 10", "3*Y^3 - Y + 6"}) {
        IntPoly f = parse_poly(txt).specialize_x(Rat(0)).clear_denominators().first;
        for (auto& b : AlgebraicNumber::roots_of(f, tol)) {
            auto hm = height_algebraic(b, HeightRoute::mahler);
            auto hp = height_algebraic(b, HeightRoute::places);
            CHECK(std::abs(hm.total.mid_d() - hp.total.mid_d()) < 1e-12);
            CHECK(hm.total.overlaps(hp.total));
        }
    }
    // h of a root of Y^2 - 2 and of 2Y^2 - 1 are both (1/2) log 2
    auto r1 = AlgebraicNumber::roots_of(IntPoly::from_long({-2, 0, 1}), tol)[0];
    auto r2 = AlgebraicNumber::roots_of(IntPoly::from_long({-1, 0, 2}), tol)[0];
    CHECK(close(height_algebraic(r1, HeightRoute::mahler).total, 0.5 * std::log(2.0)));
    CHECK(close(height_algebraic(r2, HeightRoute::mahler).total, 0.5 * std::log(2.0)));
}

TEST_CASE("lgcd of integers is log gcd") {
    CHECK(close(lgcd(Rat(12), Rat(18)), std::log(6.0)));
    CHECK(close(lgcd(Rat(4), make_rat(1, 2)), 0.0));
    CHECK(close(lgcd(Rat(100), Rat(10)), std::log(10.0)));
}

TEST_CASE("lgcd with an algebraic second argument") {
    Rat tol = default_root_tol();
    // beta = sqrt(10): h_2(beta) = (1/2) log 2 at p=2, so lgcd(2, sqrt10) = (1/2) log 2
    auto b = AlgebraicNumber::roots_of(IntPoly::from_long({-10, 0, 1}), tol)[1];
    CHECK(close(lgcd(Rat(2), b), 0.5 * std::log(2.0)));
    // alpha = 1/2 shares nothing: lgcd counts only common smallness
    CHECK(close(lgcd(make_rat(1, 2), b), 0.0));
}

TEST_CASE("vector and polynomial heights") {
    CHECK(close(height_vector({Rat(1), Rat(2)}, VectorHeightKind::projective),
                std::log(2.0)));
    CHECK(close(height_vector({Rat(1), Rat(2)}, VectorHeightKind::euclidean),
                0.5 * std::log(5.0)));
    CHECK(close(height_vector({make_rat(1, 2), Rat(1)}, VectorHeightKind::projective),
                std::log(2.0)));
    // h_p of (1/2)Y - 1: cleared form Y - 2, so log 2
    CHECK(close(height_poly(parse_poly("1/2*Y - 1"), PolyHeightKind::projective),
                std::log(2.0)));
    // affine height sees the scale
    CHECK(close(height_poly(parse_poly("1/2*Y - 1"), PolyHeightKind::affine),
                std::log(2.0)));
    CHECK(close(height_poly(parse_poly("Y^2 - X^3"), PolyHeightKind::projective),
                0.0));
}
