#include <doctest.h>

#include <set>

#include "heightlab/newton_polygon.hpp"
#include "heightlab/roots.hpp"

using namespace hl;

TEST_CASE("p-adic Newton polygon root valuations") {
    // X^2 - 7 at p=7: both roots have valuation 1/2
    auto v = padic_root_valuations(IntPoly::from_long({-7, 0, 1}), Int(7));
    REQUIRE(v.size() == 1);
    CHECK(v[0].first == make_rat(1, 2));
    CHECK(v[0].second == 2);

    // X^2 - X + 7 at p=7: valuations 0 and 1
    v = padic_root_valuations(IntPoly::from_long({7, -1, 1}), Int(7));
    REQUIRE(v.size() == 2);
    std::set<Rat> vals{v[0].first, v[1].first};
    CHECK(vals == std::set<Rat>{Rat(0), Rat(1)});

    // 4X^2 - 1 at p=2: roots +-1/2, valuation -1 twice
    v = padic_root_valuations(IntPoly::from_long({-1, 0, 4}), Int(2));
    REQUIRE(v.size() == 1);
    CHECK(v[0].first == -1);
    CHECK(v[0].second == 2);

    CHECK_THROWS(padic_newton_polygon(IntPoly::from_long({1, 1}), Int(4)));
}

TEST_CASE("valuation profile sums to v_p(a_0) - v_p(a_d)") {
    // random-ish fixed samples, checked against the polygon telescoping sum
    std::vector<IntPoly> fs = {
        IntPoly::from_long({12, 5, -8, 3}),
        IntPoly::from_long({100, 0, 7, 0, 2}),
        IntPoly::from_long({-18, 27, 4, 9}),
    };
    for (const Int& p : {Int(2), Int(3), Int(5)}) {
        for (auto& f : fs) {
            Rat total(0);
            for (auto& [val, mult] : padic_root_valuations(f, p))
                total += val * mult;
            CHECK(total == Rat(vp(f.coeff(f.order_at_zero()), p) - vp(f.lead(), p)));
        }
    }
}

TEST_CASE("certified complex roots of x^2 - 2") {
    auto boxes = complex_roots(IntPoly::from_long({-2, 0, 1}), default_root_tol());
    REQUIRE(boxes.size() == 2);
    // sorted by (re, im): -sqrt2 then +sqrt2
    CHECK(boxes[0].re < 0);
    CHECK(boxes[1].re > 0);
    for (auto& b : boxes) {
        CHECK(b.radius <= default_root_tol());
        CHECK(b.excludes_zero());
        // |root|^2 = 2: the enclosure of |z| must straddle sqrt(2)
        RealInterval sq = b.abs_interval() * b.abs_interval();
        CHECK(sq.contains(Rat(2)));
    }
}

TEST_CASE("rational roots come out exact (radius zero)") {
    // (2X - 1)(X + 3)
    auto boxes = complex_roots(IntPoly::from_long({-1, 2}) * IntPoly::from_long({3, 1}),
                               default_root_tol());
    REQUIRE(boxes.size() == 2);
    CHECK(boxes[0].radius == 0);
    CHECK(boxes[0].re == -3);
    CHECK(boxes[1].radius == 0);
    CHECK(boxes[1].re == make_rat(1, 2));
}

TEST_CASE("complex conjugate pair of x^2 + 1") {
    auto boxes = complex_roots(IntPoly::from_long({1, 0, 1}), default_root_tol());
    REQUIRE(boxes.size() == 2);
    CHECK(boxes[0].im == -boxes[1].im);
    CHECK(boxes[0].re == 0);
    CHECK_THROWS(complex_roots(IntPoly::from_long({1, 2, 1}), default_root_tol()));
}
