// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Usage: acceptance <source_dir> <cli_binary>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "heightlab/aux_poly.hpp"
#include "heightlab/bounds.hpp"
#include "heightlab/eisenstein.hpp"
#include "heightlab/experiments.hpp"
#include "heightlab/parse.hpp"
#include "heightlab/siegel.hpp"

namespace fs = std::filesystem;
using namespace hl;
using Clock = std::chrono::steady_clock;

namespace {

std::vector<CurveSpec> g_corpus;
std::string g_source_dir, g_cli;

std::string fail_note;

bool all_corpus_erke() {
    for (auto& c : g_corpus) {
        long r = vanishing_order(c.poly);
        BranchSummary bs = puiseux_exponents(c.poly);
        if (bs.r_from_exponents != Rat(r)) {
            fail_note = c.name + ": erke sum " + bs.r_from_exponents.get_str() +
                        " != r " + std::to_string(r);
            return false;
        }
        if (!check_pfs(c.poly).holds) {
            fail_note = c.name + ": f_l(0) criterion failed";
            return false;
        }
    }
    return true;
}

bool height_cross_validation() {
    // 200 algebraic numbers of degree <= 6 from corpus specializations
    std::vector<Rat> alphas = {Rat(2),          Rat(3),         make_rat(1, 2),
                               make_rat(-5, 3), make_rat(7, 4), Rat(10),
                               Rat(-2),         make_rat(5, 2), make_rat(-9, 7),
                               Rat(6)};
    Rat tol = default_root_tol();
    long count = 0;
    for (auto& c : g_corpus) {
        for (auto& a : alphas) {
            if (count >= 200) break;
            IntPoly s = specialize_to_int(c.poly, a);
            if (s.degree() < 1 || s.degree() > 6 || !is_squarefree(s)) continue;
            for (auto& b : roots_of_specialization(c.poly, a, tol)) {
                if (count >= 200) break;
                auto hm = height_algebraic(b, HeightRoute::mahler);
                auto hp = height_algebraic(b, HeightRoute::places);
                if (std::abs(hm.total.mid_d() - hp.total.mid_d()) > 1e-12 ||
                    !hm.total.overlaps(hp.total)) {
                    fail_note = c.name + " alpha=" + a.get_str() +
                                ": route disagreement";
                    return false;
                }
                ++count;
            }
        }
    }
    if (count < 200) {
        fail_note = "only " + std::to_string(count) + " algebraic numbers";
        return false;
    }
    // product formula, exactly, for 1000 rationals: |q| recomposes from the
    // p-adic valuations, and the height breakdown re-sums to the total
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 1000; ++i) {
        Int n(static_cast<unsigned long>(rng() % 1000000000ull) + 1);
        Int d(static_cast<unsigned long>(rng() % 1000000000ull) + 1);
        Rat q = make_rat((rng() & 1) ? n : Int(-n), d);
        Int renum(1), reden(1);
        for (auto& [p, e] : factorize(num(q))) {
            Int pe;
            mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
            renum *= pe;
        }
        for (auto& [p, e] : factorize(den(q))) {
            Int pe;
            mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
            reden *= pe;
        }
        if (renum != abs(num(q)) || reden != den(q)) {
            fail_note = "recomposition failed for " + q.get_str();
            return false;
        }
        auto h = height_rational(q);
        RealInterval sum = h.archimedean;
        for (auto& [p, e] : h.nonarch)
            sum += RealInterval::exact(e) * RealInterval::log_of(Rat(p));
        if (!sum.overlaps(h.total) ||
            std::abs(sum.mid_d() - h.total.mid_d()) > 1e-12) {
            fail_note = "breakdown mismatch for " + q.get_str();
            return false;
        }
    }
    return true;
}

bool lgcd_ground_truth() {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 1000; ++i) {
        Int a(static_cast<unsigned long>(rng() % 1000000000ull) + 1);
        Int b(static_cast<unsigned long>(rng() % 1000000000ull) + 1);
        Int g = gcd(a, b);
        RealInterval l = lgcd(Rat(a), Rat(b));
        RealInterval lg = g == 1 ? RealInterval::zero()
                                 : RealInterval::log_of(Rat(g));
        if (!l.overlaps(lg) || std::abs(l.mid_d() - lg.mid_d()) > 1e-12) {
            fail_note = "lgcd(" + a.get_str() + "," + b.get_str() + ") != log gcd";
            return false;
        }
    }
    // parametric family (t^2, t^3) on Y^2 - X^3: zero deviation, certified
    BivarPoly F = parse_poly("Y^2 - X^3");
    Rat tol = default_root_tol();
    for (long t = 2; t <= 100; ++t) {
        Rat alpha(Int(t) * t);
        bool found = false;
        for (auto& bt : roots_of_specialization(F, alpha, tol)) {
            if (!bt.is_rational() || bt.as_rational() != Int(t) * t * t) continue;
            found = true;
            DichotomyReport d = main_theorem_check(F, alpha, bt, make_rat(1, 2));
            if (!d.lhs_main.contains_zero() || d.lhs_main.hi_d() > 1e-25) {
                fail_note = "t=" + std::to_string(t) + ": |lgcd/r - h/n| not 0";
                return false;
            }
        }
        if (!found) {
            fail_note = "t=" + std::to_string(t) + ": beta = t^3 not found";
            return false;
        }
    }
    return true;
}

Int rnd_int(std::mt19937_64& rng, long lo, long hi) {
    return Int(static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)) + lo);
}

BivarPoly random_curve_poly(std::mt19937_64& rng, long m, long n) {
    std::vector<std::vector<Rat>> grid(m + 1, std::vector<Rat>(n + 1, Rat(0)));
    for (long i = 0; i <= m; ++i)
        for (long j = 0; j <= n; ++j) grid[i][j] = Rat(rnd_int(rng, -9, 9));
    return BivarPoly::from_rational_grid(grid);
}

IntPoly random_int_poly(std::mt19937_64& rng, long deg) {
    std::vector<Int> c(deg + 1);
    for (long i = 0; i <= deg; ++i) c[i] = rnd_int(rng, -20, 20);
    if (c[deg] == 0) c[deg] = 1;
    return IntPoly(c);
}

bool inequality_suite() {
    std::mt19937_64 rng(42);
    Rat tol = default_root_tol();

    long done = 0;
    while (done < 100) {  // schmidt
        BivarPoly F = random_curve_poly(rng, 3, 1 + static_cast<long>(rng() % 3));
        if (F.is_zero() || F.deg_y() < 1) continue;
        try {
            if (!check_schmidt(F).holds) {
                fail_note = "schmidt failed on " + F.str();
                return false;
            }
        } catch (const std::domain_error&) {
            continue;  // resultant vanished: F not squarefree in Y
        }
        ++done;
    }

    for (done = 0; done < 100;) {  // root height
        IntPoly f = random_int_poly(rng, 2 + static_cast<long>(rng() % 5));
        if (f.degree() < 1) continue;
        for (auto& r : check_root_height(f))
            if (!r.holds) {
                fail_note = "root_height failed on " + f.str();
                return false;
            }
        ++done;
    }

    for (done = 0; done < 100;) {  // eval bounds, both forms
        const CurveSpec& c = g_corpus[rng() % g_corpus.size()];
        Rat a = make_rat(rnd_int(rng, -99, 99), rnd_int(rng, 1, 99));
        IntPoly s = specialize_to_int(c.poly, a);
        if (s.degree() < c.poly.deg_y() || !is_squarefree(s)) continue;
        auto b = roots_of_specialization(c.poly, a, tol)[0];
        if (!check_eval_bound2(c.poly, a, b).holds) {
            fail_note = "eval_bound2 failed on " + c.name + " alpha=" + a.get_str();
            return false;
        }
        Rat y = make_rat(rnd_int(rng, -99, 99), rnd_int(rng, 1, 99));
        if (c.poly.eval(a, y) != 0 &&
            !check_eval_bound1(c.poly, a, y).holds) {
            fail_note = "eval_bound1 failed on " + c.name;
            return false;
        }
        ++done;
    }

    for (done = 0; done < 100;) {  // coeff vs roots, archimedean + 3 primes
        IntPoly f = random_int_poly(rng, 2 + static_cast<long>(rng() % 5));
        if (f.degree() < 1 || !is_squarefree(f)) continue;
        long ell = static_cast<long>(rng() % f.degree());
        for (const Int& place : {Int(0), Int(2), Int(3), Int(5)})
            if (!check_coeff_vs_roots(f, ell, place).holds) {
                fail_note = "coeff_vs_roots failed on " + f.str() + " ell=" +
                            std::to_string(ell) + " place=" + place.get_str();
                return false;
            }
        ++done;
    }

    for (done = 0; done < 100;) {  // system bound at a built-in common point
        Rat a = make_rat(rnd_int(rng, -20, 20), rnd_int(rng, 1, 9));
        Rat b = make_rat(rnd_int(rng, -20, 20), rnd_int(rng, 1, 9));
        long c1 = rnd_int(rng, -5, 5).get_si(), c2 = rnd_int(rng, -5, 5).get_si();
        if (c1 == c2) continue;
        // two distinct lines through (a, b): F_i = (Y - b) - c_i (X - a)
        BivarPoly F1 = parse_poly("Y - " + b.get_str() + " - (" +
                                  std::to_string(c1) + ")*(X - (" + a.get_str() +
                                  "))");
        BivarPoly F2 = parse_poly("Y - " + b.get_str() + " - (" +
                                  std::to_string(c2) + ")*(X - (" + a.get_str() +
                                  "))");
        try {
            if (!check_system_bound(F1, F2, a).holds) {
                fail_note = "system_bound failed at a=" + a.get_str();
                return false;
            }
        } catch (const std::domain_error&) {
            continue;
        }
        ++done;
    }
    return true;
}

bool theorem_dichotomy() {
    for (const Rat& eps : {make_rat(1, 10), make_rat(1, 2), make_rat(9, 10)}) {
        for (auto& c : g_corpus) {
            ExperimentConfig cfg;
            cfg.curve = c.poly;
            cfg.curve_name = c.name;
            cfg.epsilon = eps;
            cfg.sample_count = 50;
            cfg.height_ceiling = 12;
            ExperimentResult res = run_experiment(cfg);
            if (res.failed_points > 0 || !res.all_dichotomy_ok) {
                fail_note = c.name + " eps=" + eps.get_str() + ": dichotomy failed";
                return false;
            }
            for (auto& pt : res.points)
                if (!pt.dichotomy.lhs_main.definitely_le(pt.dichotomy.rhs_main)) {
                    fail_note = c.name + ": lhs_main > rhs_main at alpha=" +
                                pt.alpha.get_str();
                    return false;
                }
        }
    }
    return true;
}

bool auxiliary_polynomial() {
    for (const char* txt : {"Y^2 - Y + X", "Y^2 - Y + X - X^2", "Y^3 - Y + X"}) {
        BivarPoly F = parse_poly(txt);
        PuiseuxBranch br = expand_branch(F, 1, 0, 30);
        for (long N : {2L, 4L, 8L}) {
            for (const Rat& delta : {make_rat(1, 4), make_rat(1, 2)}) {
                AuxPolynomial a = build_aux_poly(F, br, N, delta);
                if (a.G.is_zero() || a.achieved_order < a.target_order) {
                    fail_note = std::string(txt) + " N=" + std::to_string(N) +
                                " delta=" + delta.get_str() + ": order " +
                                std::to_string(a.achieved_order) + " < target";
                    return false;
                }
            }
        }
    }
    PuiseuxBranch cat = expand_branch(parse_poly("Y^2 - Y + X"), 1, 0, 30);
    long want[] = {0, 1, 1, 2, 5};
    for (long k = 1; k <= 4; ++k)
        if (cat.coeff(k) != want[k]) {
            fail_note = "catalan coefficient a_" + std::to_string(k) + " wrong";
            return false;
        }
    return true;
}

bool eisenstein_bound() {
    for (auto& c : g_corpus) {
        BranchSummary bs = puiseux_exponents(c.poly);
        std::set<long> es{1};
        for (auto& e : bs.exponents)
            if (e.nu() > 0) es.insert(e.e);
        for (long e : es) {
            size_t count = count_rational_branches(c.poly, e);
            for (size_t i = 0; i < count; ++i) {
                PuiseuxBranch br = expand_branch(c.poly, e, i, 30);
                EisensteinReport rep = measure_eisenstein(br, c.poly);
                if (!rep.holds) {
                    fail_note = c.name + " e=" + std::to_string(e) + " branch " +
                                std::to_string(i) + ": divisor exceeds bound";
                    return false;
                }
            }
        }
    }
    EisensteinReport cat = measure_eisenstein(
        expand_branch(parse_poly("Y^2 - Y + X"), 1, 0, 30),
        parse_poly("Y^2 - Y + X"));
    if (cat.growth_estimate < 3.5 || cat.growth_estimate > 4.0) {
        fail_note = "catalan growth " + std::to_string(cat.growth_estimate) +
                    " outside [3.5, 4.0]";
        return false;
    }
    return true;
}

bool siegel_suite() {
    std::mt19937_64 rng(7);
    const size_t dim = 6;
    long done = 0;
    while (done < 200) {
        size_t k = 1 + rng() % 4;
        RatMatrix W(k, std::vector<Rat>(dim));
        for (auto& row : W)
            for (auto& v : row) v = Rat(rnd_int(rng, -9, 9));
        if (rational_rank(W) != k) continue;
        RealInterval hw = subspace_height(W).h_s;
        RealInterval hc = subspace_height(orthogonal_complement(W, dim)).h_s;
        if (std::abs(hw.mid_d() - hc.mid_d()) > 1e-12) {
            fail_note = "h_s(W) != h_s(W perp)";
            return false;
        }
        // Hadamard: h_s(W) <= sum of the row heights
        double had = 0;
        for (auto& row : W)
            had += height_vector(row, VectorHeightKind::euclidean).mid_d();
        if (hw.mid_d() > had + 1e-9) {
            fail_note = "Hadamard inequality failed";
            return false;
        }
        // solution-space height bound for the forms given by the rows
        if (k < dim) {
            RatMatrix sol = rational_kernel(W, dim);
            double rhs = 0;
            for (auto& row : W)
                rhs += height_vector(row, VectorHeightKind::projective).mid_d();
            rhs += 0.5 * static_cast<double>(k) * std::log(static_cast<double>(dim));
            if (subspace_height(sol).h_s.mid_d() > rhs + 1e-9) {
                fail_note = "solution-space height bound failed";
                return false;
            }
        }
        ++done;
    }
    for (done = 0; done < 100;) {
        size_t m = 1 + rng() % 3;
        size_t n = m + 1 + rng() % (dim - m);
        RatMatrix forms(m, std::vector<Rat>(n));
        bool zero = false;
        for (auto& row : forms) {
            for (auto& v : row) v = Rat(rnd_int(rng, -9, 9));
            zero = zero || std::all_of(row.begin(), row.end(),
                                       [](const Rat& q) { return q == 0; });
        }
        if (zero || rational_rank(forms) != m) continue;
        KernelVectorReport rep = small_kernel_vector(forms, n);
        if (!rep.meets_bound) {
            fail_note = "kernel vector misses the bound (m=" + std::to_string(m) +
                        ", n=" + std::to_string(n) + ")";
            return false;
        }
        ++done;
    }
    return true;
}

bool determinism() {
    fs::path tmp = fs::temp_directory_path() / "heightlab_accept";
    fs::remove_all(tmp);
    fs::create_directories(tmp);
    std::ofstream(tmp / "exp.cfg") << "curve = " << g_source_dir
                                   << "/data/curves/catalan.curve\n"
                                   << "points = 10\nseed = 7\n";
    auto run = [&](const std::string& out) {
        std::string cmd = "\"" + g_cli + "\" experiment \"" +
                          (tmp / "exp.cfg").string() + "\" --out \"" +
                          (tmp / out).string() + "\" > /dev/null 2>&1";
        return std::system(cmd.c_str()) == 0;
    };
    if (!run("a") || !run("b")) {
        fail_note = "cli invocation failed";
        return false;
    }
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    std::string a = slurp(tmp / "a" / "catalan.csv");
    std::string b = slurp(tmp / "b" / "catalan.csv");
    if (a.empty() || a != b) {
        fail_note = "CSV outputs differ or are empty";
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: acceptance <source_dir> <cli_binary>\n");
        return 2;
    }
    g_source_dir = argv[1];
    g_cli = argv[2];
    std::vector<fs::path> files;
    for (auto& entry :
         fs::directory_iterator(fs::path(g_source_dir) / "data" / "curves"))
        if (entry.path().extension() == ".curve") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (auto& f : files) g_corpus.push_back(parse_curve_file(f.string()));
    if (g_corpus.size() < 20) {
        std::fprintf(stderr, "corpus too small: %zu curves\n", g_corpus.size());
        return 2;
    }

    struct Criterion {
        const char* name;
        std::function<bool()> run;
    };
    std::vector<Criterion> cs = {
        {"exact erke identity on the 20-curve corpus", all_corpus_erke},
        {"height cross-validation and product formula", height_cross_validation},
        {"lgcd ground truth and (t^2, t^3) family", lgcd_ground_truth},
        {"inequality suite (100+ randomized instances each)", inequality_suite},
        {"main-theorem dichotomy, 20 curves x 50 points x 3 eps",
         theorem_dichotomy},
        {"auxiliary polynomial construction", auxiliary_polynomial},
        {"eisenstein divisor bound on all corpus branches", eisenstein_bound},
        {"siegel suite: subspace heights and kernel vectors", siegel_suite},
        {"bit-identical CSV across two seeded CLI runs", determinism},
    };
    int failures = 0;
    for (size_t i = 0; i < cs.size(); ++i) {
        fail_note.clear();
        auto t0 = Clock::now();
        bool ok = false;
        try {
            ok = cs[i].run();
        } catch (const std::exception& e) {
            fail_note = std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(Clock::now() - t0).count();
        std::printf("%s  criterion %zu: %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL",
                    i + 1, cs[i].name, secs, fail_note.empty() ? "" : " -- ",
                    fail_note.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
