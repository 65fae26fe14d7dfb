#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

#include "heightlab/aux_poly.hpp"
#include "heightlab/bounds.hpp"
#include "heightlab/eisenstein.hpp"
#include "heightlab/experiments.hpp"
#include "heightlab/factor.hpp"
#include "heightlab/parse.hpp"

namespace fs = std::filesystem;
using namespace hl;

namespace {

constexpr int EXIT_OK = 0;
constexpr int EXIT_PARTIAL = 1;
constexpr int EXIT_USAGE = 2;
constexpr int EXIT_PRECONDITION = 3;

std::string rat_str(const Rat& q) { return q.get_str(); }

Rat parse_eps(const std::string& text) {
    Rat eps;
    try {
        eps = parse_rational(text);
    } catch (const ParseError& e) {
        throw CLI::ValidationError("--eps", e.what());
    }
    if (eps <= 0 || eps >= 1)
        throw CLI::ValidationError("--eps", "epsilon out of range (0,1)");
    return eps;
}

void require_curve(const BivarPoly& F) {
    if (F.is_zero() || F.deg_y() < 1)
        throw std::domain_error("curve must have deg_Y >= 1");
    if (F.coeff(0, 0) != 0) throw std::domain_error("origin not on curve");
}

int cmd_analyze(const std::string& curve_file, long truncation) {
    CurveSpec spec = parse_curve_file(curve_file);
    const BivarPoly& F = spec.poly;
    require_curve(F);
    std::cout << "curve: " << spec.name << "\n";
    std::cout << "poly: " << F.str() << "\n";
    std::cout << "deg_X m = " << F.deg_x() << ", deg_Y n = " << F.deg_y()
              << "\n";
    bool irred = is_irreducible(F);
    std::cout << "irreducible over Q: " << (irred ? "yes" : "no") << "\n";
    if (spec.abs_irreducible && !irred)
        std::cout << "warning: asserted absolutely irreducible, but F is "
                     "reducible over Q\n";
    long r = vanishing_order(F);
    std::cout << "vanishing order r = " << r << "\n";

    if (F.specialize_x(Rat(0)).is_zero())
        throw std::domain_error("x divides F");
    BranchSummary bs = puiseux_exponents(F);
    std::cout << "puiseux exponents:";
    for (auto& e : bs.exponents)
        std::cout << " " << rat_str(e.nu()) << " x" << e.multiplicity;
    if (bs.zero_roots > 0) std::cout << " (plus " << bs.zero_roots << " zero roots)";
    std::cout << "\n";
    std::cout << "l (roots with positive valuation) = " << bs.ell << "\n";
    std::cout << "erke sum = " << rat_str(bs.r_from_exponents)
              << (bs.r_from_exponents == Rat(r) ? " (matches r)"
                                                : " (MISMATCH with r)")
              << "\n";
    PfsReport pfs = check_pfs(F);
    std::cout << "f_k(0) = 0 for k < l and f_l(0) != 0: "
              << (pfs.holds ? "holds" : "FAILS") << "\n";
    try {
        InequalityReport sch = check_schmidt(F);
        std::cout << "schmidt bound: lhs = " << sch.lhs.str(8)
                  << ", rhs = " << sch.rhs.str(8) << ", "
                  << (sch.holds ? "holds" : "FAILS") << "\n";
    } catch (const std::domain_error& e) {
        std::cout << "schmidt bound: skipped (" << e.what() << ")\n";
    }

    // ramification indices present among the exponents, always including 1
    std::set<long> es{1};
    for (auto& e : bs.exponents)
        if (e.nu() > 0) es.insert(e.e);
    for (long e : es) {
        size_t count = count_rational_branches(F, e);
        std::cout << "rational branches with e = " << e << ": " << count
                  << "\n";
        for (size_t i = 0; i < count; ++i) {
            PuiseuxBranch br = expand_branch(F, e, i, truncation);
            std::cout << "  branch " << i << ": y =";
            int shown = 0;
            for (auto& [k, a] : br.coeffs) {
                if (a == 0) continue;
                if (shown++ == 5) {
                    std::cout << " + ...";
                    break;
                }
                std::cout << (shown == 1 ? " " : " + ") << rat_str(a) << " x^"
                          << (e == 1 ? std::to_string(k)
                                     : std::to_string(k) + "/" +
                                           std::to_string(e));
            }
            std::cout << "\n";
            std::cout << "    residual order > " << br.truncation_order << ": "
                      << (branch_residual_ok(F, br) ? "verified" : "FAILS")
                      << "\n";
            if (br.truncation_order >= 8) {
                EisensteinReport eis = measure_eisenstein(br, F);
                std::cout << "    eisenstein: h(A) = "
                          << eis.observed.height.str(8)
                          << ", bound = " << eis.paper_bound.str(8) << ", "
                          << (eis.holds ? "holds" : "FAILS")
                          << ", growth ~ " << eis.growth_estimate << "\n";
            }
        }
    }
    return EXIT_OK;
}

int cmd_verify(const std::string& curve_file, const std::string& alpha_text,
               const Rat& eps) {
    CurveSpec spec = parse_curve_file(curve_file);
    const BivarPoly& F = spec.poly;
    require_curve(F);
    Rat alpha = parse_rational(alpha_text);
    auto betas = roots_of_specialization(F, alpha, default_root_tol());
    if (betas.empty()) throw std::domain_error("F(alpha, Y) is constant");
    std::cout << "curve: " << spec.name << "  alpha = " << rat_str(alpha)
              << "  eps = " << rat_str(eps) << "\n";
    bool all_ok = true;
    for (size_t i = 0; i < betas.size(); ++i) {
        DichotomyReport d = main_theorem_check(F, alpha, betas[i], eps);
        std::cout << "root " << i << ": minpoly "
                  << betas[i].minpoly.str("Y") << "\n";
        std::cout << "  h(alpha) = " << d.h_alpha.str(12)
                  << "  h(beta) = " << d.h_beta.str(12)
                  << "  lgcd = " << d.lgcd_value.str(12) << "\n";
        std::cout << "  r = " << d.r << "  n = " << d.n << "  m = " << d.m
                  << "\n";
        std::cout << "  branch: "
                  << (d.branch_taken == DichotomyBranch::small_height
                          ? "small_height (h(alpha) <= threshold "
                          : "asymptotic (h(alpha) > threshold ")
                  << d.threshold.str(6) << ")\n";
        std::cout << "  |lgcd/r - h(alpha)/n| = " << d.lhs_main.str(12)
                  << "  rhs = " << d.rhs_main.str(12) << "\n";
        std::cout << "  invariant: " << (d.invariant_holds ? "holds" : "FAILS")
                  << "\n";
        all_ok = all_ok && d.invariant_holds;
    }
    return all_ok ? EXIT_OK : EXIT_PARTIAL;
}

struct ExperimentOverrides {
    std::string eps;
    long seed = -1, points = -1, ceiling = -1, prec_cap = -1, truncation = -1;
};

int cmd_experiment(const std::string& config_file, const std::string& out_dir,
                   const ExperimentOverrides& ov) {
    auto kv = parse_kv_file(config_file);
    fs::path base = fs::path(config_file).parent_path();
    auto resolve = [&](const std::string& p) {
        fs::path q(p);
        if (q.is_absolute() || fs::exists(q)) return q;
        return base / q;
    };

    std::vector<CurveSpec> curves;
    if (kv.count("curve_dir")) {
        std::vector<fs::path> files;
        for (auto& entry : fs::directory_iterator(resolve(kv["curve_dir"])))
            if (entry.path().extension() == ".curve") files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        for (auto& f : files) curves.push_back(parse_curve_file(f.string()));
    }
    if (kv.count("curve"))
        curves.push_back(parse_curve_file(resolve(kv["curve"]).string()));
    if (curves.empty())
        throw ParseError(config_file + ": no curves (need curve= or curve_dir=)");

    ExperimentConfig proto;
    if (kv.count("epsilon")) proto.epsilon = parse_rational(kv["epsilon"]);
    if (kv.count("points")) proto.sample_count = std::stol(kv["points"]);
    if (kv.count("height_ceiling"))
        proto.height_ceiling = std::stol(kv["height_ceiling"]);
    if (kv.count("seed")) proto.rng_seed = std::stoul(kv["seed"]);
    if (kv.count("precision_cap"))
        proto.precision_cap = std::stol(kv["precision_cap"]);
    if (kv.count("truncation"))
        proto.truncation_order = std::stol(kv["truncation"]);
    if (!ov.eps.empty()) proto.epsilon = parse_eps(ov.eps);
    if (ov.seed >= 0) proto.rng_seed = static_cast<unsigned long>(ov.seed);
    if (ov.points >= 0) proto.sample_count = ov.points;
    if (ov.ceiling >= 0) proto.height_ceiling = ov.ceiling;
    if (ov.prec_cap >= 0) proto.precision_cap = ov.prec_cap;
    if (ov.truncation >= 0) proto.truncation_order = ov.truncation;

    fs::create_directories(out_dir);
    std::string summaries = "[\n";
    long total_failed = 0;
    bool all_ok = true;
    for (size_t i = 0; i < curves.size(); ++i) {
        ExperimentConfig cfg = proto;
        cfg.curve = curves[i].poly;
        cfg.curve_name = curves[i].name;
        require_curve(cfg.curve);
        ExperimentResult res = run_experiment(cfg);
        total_failed += res.failed_points;
        all_ok = all_ok && res.all_dichotomy_ok;
        fs::path csv_path = fs::path(out_dir) / (cfg.curve_name + ".csv");
        std::ofstream(csv_path) << res.csv();
        std::string js = res.json_summary(cfg);
        while (!js.empty() && (js.back() == '\n')) js.pop_back();
        summaries += js;
        summaries += (i + 1 < curves.size()) ? ",\n" : "\n";
        std::cout << cfg.curve_name << ": " << res.points.size() << " points, "
                  << res.skipped_degenerate << " skipped, "
                  << res.failed_points << " failed, dichotomy "
                  << (res.all_dichotomy_ok ? "ok" : "VIOLATED") << "\n";
    }
    summaries += "]\n";
    std::ofstream(fs::path(out_dir) / "summary.json") << summaries;
    if (!all_ok) return EXIT_PARTIAL;
    return total_failed > 0 ? EXIT_PARTIAL : EXIT_OK;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "heightlab: heights, logarithmic gcd, Puiseux data and explicit "
        "bounds for plane curves F(X,Y) = 0 through the origin"};
    app.require_subcommand(1);

    std::string curve_file, alpha_text, eps_text = "1/2";
    std::string config_file, out_dir = "out";
    long truncation = 30;
    ExperimentOverrides ov;

    CLI::App* analyze = app.add_subcommand(
        "analyze", "Curve report: r, Puiseux data, Schmidt and Eisenstein bounds");
    analyze->add_option("curve", curve_file, "curve file (key=value)")
        ->required();
    analyze->add_option("--truncation", truncation, "branch truncation order")
        ->envname("HEIGHTLAB_TRUNCATION");

    CLI::App* verify = app.add_subcommand(
        "verify", "Main-theorem dichotomy at one rational abscissa");
    verify->add_option("curve", curve_file, "curve file (key=value)")
        ->required();
    verify->add_option("--alpha", alpha_text, "rational abscissa a/b")
        ->envname("HEIGHTLAB_ALPHA")
        ->required();
    verify->add_option("--eps", eps_text, "epsilon in (0,1)")
        ->envname("HEIGHTLAB_EPS");

    CLI::App* experiment = app.add_subcommand(
        "experiment", "Sample points on a curve corpus; write CSV + JSON");
    experiment->add_option("config", config_file, "config file (key=value)")
        ->required();
    experiment->add_option("--out", out_dir, "output directory")
        ->envname("HEIGHTLAB_OUT");
    experiment->add_option("--eps", ov.eps, "override epsilon")
        ->envname("HEIGHTLAB_EPS");
    experiment->add_option("--seed", ov.seed, "override RNG seed")
        ->envname("HEIGHTLAB_SEED");
    experiment->add_option("--points", ov.points, "override sample count")
        ->envname("HEIGHTLAB_POINTS");
    experiment
        ->add_option("--height-ceiling", ov.ceiling,
                     "override height ceiling (decimal digits)")
        ->envname("HEIGHTLAB_HEIGHT_CEILING");
    experiment
        ->add_option("--precision-cap", ov.prec_cap,
                     "override MPFR precision cap (bits)")
        ->envname("HEIGHTLAB_PRECISION_CAP");
    experiment
        ->add_option("--truncation", ov.truncation,
                     "override branch truncation order")
        ->envname("HEIGHTLAB_TRUNCATION");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? EXIT_OK : EXIT_USAGE;
    }

    try {
        if (*analyze) return cmd_analyze(curve_file, truncation);
        if (*verify) return cmd_verify(curve_file, alpha_text, parse_eps(eps_text));
        if (*experiment) return cmd_experiment(config_file, out_dir, ov);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const std::domain_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return EXIT_PRECONDITION;
    } catch (const PrecisionExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_PARTIAL;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_PARTIAL;
    }
    return EXIT_USAGE;
}
