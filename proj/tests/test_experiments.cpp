#include <doctest.h>

#include "heightlab/experiments.hpp"
#include "heightlab/parse.hpp"

using namespace hl;

namespace {
ExperimentConfig small_config(const char* poly) {
    ExperimentConfig cfg;
    cfg.curve = parse_poly(poly);
    cfg.sample_count = 5;
    cfg.height_ceiling = 6;
    return cfg;
}
}  // namespace

TEST_CASE("sampling is deterministic and respects invariants") {
    ExperimentConfig cfg = small_config("Y^2 - X^3 - X");
    long skipped = 0;
    auto pts = sample_points(cfg.curve, cfg, &skipped);
    auto pts2 = sample_points(cfg.curve, cfg, nullptr);
    REQUIRE(pts.size() == pts2.size());
    for (size_t i = 0; i < pts.size(); ++i) {
        CHECK(pts[i].alpha == pts2[i].alpha);
        CHECK(pts[i].beta.minpoly == pts2[i].beta.minpoly);
        CHECK(pts[i].dichotomy.h_alpha.mid_d() > 0);
        // exact incidence: minpoly divides the cleared specialization
        IntPoly s = specialize_to_int(cfg.curve, pts[i].alpha);
        CHECK(pts[i].beta.minpoly.divides(s));
    }
}

TEST_CASE("precondition rejections") {
    ExperimentConfig cfg = small_config("X*Y - X^2");  // X | F
    CHECK_THROWS(sample_points(cfg.curve, cfg, nullptr));
    cfg = small_config("Y - X - 1");  // origin not on curve
    CHECK_THROWS(sample_points(cfg.curve, cfg, nullptr));
    cfg = small_config("Y^2 - X^3 - X");
    cfg.epsilon = Rat(1);
    CHECK_THROWS(sample_points(cfg.curve, cfg, nullptr));
}

TEST_CASE("parametric family (t^2, t^3) on the cusp is exact") {
    BivarPoly F = parse_poly("Y^2 - X^3");
    Rat tol = default_root_tol();
    for (long t = 2; t <= 20; ++t) {
        Rat alpha(Int(t) * t);
        auto betas = roots_of_specialization(F, alpha, tol);
        // pick beta = +t^3
        bool found = false;
        for (auto& b : betas) {
            if (!b.is_rational() || b.as_rational() != Int(t) * t * t) continue;
            found = true;
            DichotomyReport d = main_theorem_check(F, alpha, b, make_rat(1, 2));
            CHECK(d.r == 2);
            CHECK(d.lhs_main.contains_zero());
            CHECK(d.lhs_main.hi_d() < 1e-30);
        }
        CHECK(found);
    }
}

TEST_CASE("experiment summary and CSV are stable") {
    ExperimentConfig cfg = small_config("Y^2 - Y + X");
    cfg.curve_name = "catalan";
    ExperimentResult res = run_experiment(cfg);
    CHECK(res.failed_points == 0);
    CHECK(res.all_dichotomy_ok);
    CHECK(res.csv() == run_experiment(cfg).csv());
    CHECK(res.csv().rfind("alpha_num,alpha_den,minpoly,h_alpha,h_beta,lgcd,"
                          "r,n,m,lhs_main,rhs_main,branch\n", 0) == 0);
    std::string js = res.json_summary(cfg);
    CHECK(js.find("\"curve\": \"catalan\"") != std::string::npos);
    CHECK(js.find("\"failed_points\": 0") != std::string::npos);
}
