#include "heightlab/experiments.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hl {

void ExperimentConfig::validate() const {
    if (curve.is_zero()) throw std::domain_error("empty curve");
    if (epsilon <= 0 || epsilon >= 1)
        throw std::domain_error("epsilon out of range (0,1)");
    if (sample_count < 1) throw std::domain_error("sample_count must be >= 1");
    if (height_ceiling < 1 || height_ceiling > 18)
        throw std::domain_error("height_ceiling out of range [1,18]");
    if (precision_cap < 128) throw std::domain_error("precision_cap too low (< 128)");
    if (truncation_order < 8)
        throw std::domain_error("truncation_order must be >= 8");
}

namespace {

// draws uniform in [1, bound] from the raw generator; avoids the
// implementation-defined std::uniform_int_distribution for reproducibility
unsigned long draw(std::mt19937_64& rng, unsigned long bound) {
    return static_cast<unsigned long>(rng() % bound) + 1;
}

double deviation(const SamplePoint& pt) {
    double ha = pt.dichotomy.h_alpha.mid_d();
    return pt.dichotomy.lhs_main.mid_d() / ha;
}

}  // namespace

std::vector<SamplePoint> sample_points(const BivarPoly& F,
                                       const ExperimentConfig& config,
                                       long* skipped) {
    config.validate();
    if (F.coeff(0, 0) != 0) throw std::domain_error("origin not on curve");
    if (F.specialize_x(Rat(0)).is_zero())
        throw std::domain_error("x divides F");
    const long n = F.deg_y();
    if (n < 1) throw std::domain_error("deg_Y F must be >= 1");
    const long m = F.deg_x();

    std::mt19937_64 rng(config.rng_seed);
    std::vector<SamplePoint> out;
    long skip_count = 0;
    long accepted = 0;
    const long max_attempts = config.sample_count * 200;
    for (long attempt = 0;
         accepted < config.sample_count && attempt < max_attempts; ++attempt) {
        // log-uniform magnitude: pick a digit count first
        long t = static_cast<long>(draw(rng, config.height_ceiling));
        unsigned long bound = 1;
        for (long i = 0; i < t; ++i) bound *= 10;
        Int a(draw(rng, bound)), b(draw(rng, bound));
        bool negative = (rng() & 1) != 0;
        Rat alpha = make_rat(negative ? Int(-a) : a, b);
        if (abs(num(alpha)) == den(alpha)) {  // h(alpha) = 0
            ++skip_count;
            continue;
        }
        IntPoly s = specialize_to_int(F, alpha);
        if (s.degree() < n || !is_squarefree(s)) {  // R_F(alpha) = 0
            ++skip_count;
            continue;
        }
        ++accepted;
        std::vector<AlgebraicNumber> betas;
        try {
            betas = roots_of_specialization(F, alpha, default_root_tol(),
                                            config.precision_cap);
        } catch (const PrecisionExhausted& e) {
            SamplePoint pt;
            pt.alpha = alpha;
            pt.failed = true;
            pt.note = e.what();
            pt.dichotomy.n = n;
            pt.dichotomy.m = m;
            out.push_back(std::move(pt));
            continue;
        }
        for (auto& beta : betas) {
            SamplePoint pt;
            pt.alpha = alpha;
            pt.beta = beta;
            try {
                pt.dichotomy = main_theorem_check(F, alpha, beta, config.epsilon);
                double ha = pt.dichotomy.h_alpha.mid_d();
                double hb = pt.dichotomy.h_beta.mid_d();
                double lg = pt.dichotomy.lgcd_value.mid_d();
                pt.ratio_alpha =
                    lg / (static_cast<double>(pt.dichotomy.r) * ha / n);
                pt.ratio_beta =
                    hb > 0 ? lg / (static_cast<double>(pt.dichotomy.r) * hb / m)
                           : 0.0;
            } catch (const PrecisionExhausted& e) {
                pt.failed = true;
                pt.note = e.what();
            }
            out.push_back(std::move(pt));
        }
    }
    if (accepted < config.sample_count)
        throw std::runtime_error("sampling stalled: too many degenerate draws");
    if (skipped) *skipped = skip_count;
    return out;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    ExperimentResult res;
    res.points = sample_points(config.curve, config, &res.skipped_degenerate);
    std::vector<double> devs;
    std::vector<const SamplePoint*> ok_points;
    for (auto& pt : res.points) {
        if (pt.failed) {
            ++res.failed_points;
            continue;
        }
        if (!pt.dichotomy.invariant_holds) res.all_dichotomy_ok = false;
        ok_points.push_back(&pt);
    }
    if (!ok_points.empty()) {
        std::sort(ok_points.begin(), ok_points.end(),
                  [](const SamplePoint* x, const SamplePoint* y) {
                      return x->dichotomy.h_alpha.mid_d() >
                             y->dichotomy.h_alpha.mid_d();
                  });
        size_t decile = (ok_points.size() + 9) / 10;
        for (size_t i = 0; i < decile; ++i) devs.push_back(deviation(*ok_points[i]));
        std::sort(devs.begin(), devs.end());
        res.median_top_decile_deviation = devs[devs.size() / 2];
    }
    return res;
}

std::string ExperimentResult::csv() const {
    std::ostringstream os;
    os << "alpha_num,alpha_den,minpoly,h_alpha,h_beta,lgcd,r,n,m,lhs_main,"
          "rhs_main,branch\n";
    for (auto& pt : points) {
        os << num(pt.alpha).get_str() << ',' << den(pt.alpha).get_str() << ',';
        if (pt.failed) {
            os << ",,,," << pt.dichotomy.r << ',' << pt.dichotomy.n << ','
               << pt.dichotomy.m << ",,,failed\n";
            continue;
        }
        const auto& c = pt.beta.minpoly.coeffs();
        for (size_t i = 0; i < c.size(); ++i)
            os << (i ? " " : "") << c[i].get_str();
        os << ',' << pt.dichotomy.h_alpha.str() << ','
           << pt.dichotomy.h_beta.str() << ',' << pt.dichotomy.lgcd_value.str()
           << ',' << pt.dichotomy.r << ',' << pt.dichotomy.n << ','
           << pt.dichotomy.m << ',' << pt.dichotomy.lhs_main.str() << ','
           << pt.dichotomy.rhs_main.str() << ','
           << (pt.dichotomy.branch_taken == DichotomyBranch::small_height
                   ? "small_height"
                   : "asymptotic")
           << '\n';
    }
    return os.str();
}

std::string ExperimentResult::json_summary(const ExperimentConfig& config) const {
    nlohmann::ordered_json j;
    j["curve"] = config.curve_name;
    j["poly"] = config.curve.str();
    j["epsilon"] = config.epsilon.get_str();
    j["seed"] = config.rng_seed;
    j["sample_count"] = config.sample_count;
    j["height_ceiling"] = config.height_ceiling;
    j["points"] = points.size();
    j["skipped_degenerate"] = skipped_degenerate;
    j["failed_points"] = failed_points;
    j["all_dichotomy_ok"] = all_dichotomy_ok;
    j["median_top_decile_deviation"] = median_top_decile_deviation;
    nlohmann::ordered_json fails = nlohmann::ordered_json::array();
    for (auto& pt : points)
        if (pt.failed)
            fails.push_back({{"alpha", num(pt.alpha).get_str() + "/" +
                                           den(pt.alpha).get_str()},
                             {"note", pt.note}});
    j["failures"] = fails;
    return j.dump(2) + "\n";
}

}  // namespace hl
