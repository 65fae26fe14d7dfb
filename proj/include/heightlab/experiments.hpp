#ifndef HEIGHTLAB_EXPERIMENTS_HPP
#define HEIGHTLAB_EXPERIMENTS_HPP

#include "heightlab/bounds.hpp"

namespace hl {

struct ExperimentConfig {
    BivarPoly curve;
    std::string curve_name = "curve";
    Rat epsilon = make_rat(1, 2);
    long sample_count = 50;       // number of alpha values
    long height_ceiling = 12;     // h(alpha) up to log(10^height_ceiling)
    unsigned long rng_seed = 1;
    long precision_cap = 1 << 16;
    long truncation_order = 30;   // used by branch-expansion consumers

    void validate() const;  // throws std::domain_error
};

struct SamplePoint {
    Rat alpha;
    AlgebraicNumber beta;
    DichotomyReport dichotomy;   // holds h_alpha, h_beta, lgcd, r, n, m, ...
    double ratio_alpha = 0.0;    // lgcd / (r h(alpha)/n)
    double ratio_beta = 0.0;     // lgcd / (r h(beta)/m); 0 when h(beta) = 0
    bool failed = false;         // precision exhaustion; other fields partial
    std::string note;
};

/// Deterministic seeded sample: alpha = +-a/b with h(alpha) spread
/// log-uniformly up to log(10^height_ceiling); every root beta of F(alpha,Y)
/// yields one point. Degenerate specializations (degree drop or repeated
/// roots, i.e. R_F(alpha)=0) and h(alpha)=0 draws are skipped and counted in
/// *skipped if given. Throws if F(0,Y) is identically zero or F(0,0) != 0.
std::vector<SamplePoint> sample_points(const BivarPoly& F,
                                       const ExperimentConfig& config,
                                       long* skipped = nullptr);

struct ExperimentResult {
    std::vector<SamplePoint> points;
    long skipped_degenerate = 0;
    long failed_points = 0;
    bool all_dichotomy_ok = true;
    /// median over the top height decile of |lgcd/r - h(alpha)/n| / h(alpha)
    double median_top_decile_deviation = 0.0;

    /// One row per point, stable column order:
    /// alpha_num, alpha_den, minpoly, h_alpha, h_beta, lgcd, r, n, m,
    /// lhs_main, rhs_main, branch. minpoly is space-separated ascending
    /// integer coefficients.
    std::string csv() const;
    std::string json_summary(const ExperimentConfig& config) const;
};

ExperimentResult run_experiment(const ExperimentConfig& config);

}  // namespace hl

#endif
