#include "heightlab/eisenstein.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "heightlab/heights.hpp"

namespace hl {

EisensteinReport measure_eisenstein(const PuiseuxBranch& branch,
                                    const BivarPoly& F, mpfr_prec_t prec) {
    if (branch.truncation_order < 8)
        throw std::domain_error("too few coefficients (need truncation order >= 8)");
    const long n = F.deg_y(), m = F.deg_x();
    const long e = branch.e;
    if (n < 1 || m < 1) throw std::domain_error("degenerate curve");

    EisensteinReport rep;
    // archimedean: log A_inf = max(0, max_k (e/k) log|a_k|)
    RealInterval arch = RealInterval::zero(prec);
    for (auto& [k, a] : branch.coeffs) {
        if (a == 0) continue;
        Rat aa = abs(a);
        if (aa <= 1) continue;
        RealInterval cand = RealInterval::log_of(aa, prec) *
                            RealInterval::exact(make_rat(e, k), prec);
        arch = RealInterval::max(arch, cand);
    }
    rep.observed.arch_log = arch;

    // primes: A_p exponent = max_k (e/k) * max(0, -v_p(a_k))
    std::set<Int> primes;
    for (auto& [k, a] : branch.coeffs) {
        (void)k;
        if (a != 0 && den(a) != 1)
            for (auto& p : prime_divisors(den(a))) primes.insert(p);
    }
    for (auto& p : primes) {
        Rat best(0);
        for (auto& [k, a] : branch.coeffs) {
            if (a == 0) continue;
            long v = vp(a, p);
            if (v >= 0) continue;
            Rat cand = Rat(-v) * make_rat(e, k);
            if (cand > best) best = cand;
        }
        if (best > 0) rep.observed.prime_exponents[p] = best;
    }

    RealInterval h = arch;
    for (auto& [p, ex] : rep.observed.prime_exponents)
        h += RealInterval::exact(ex, prec) * RealInterval::log_of(Rat(p), prec);
    rep.observed.height = h;

    RealInterval hpF = height_poly(F, PolyHeightKind::projective, prec);
    rep.paper_bound =
        RealInterval::exact(4 * n, prec) * hpF +
        RealInterval::exact(3 * n, prec) * RealInterval::log_of(Rat(n * m), prec) +
        RealInterval::exact(10 * e * n, prec);
    rep.holds = h.definitely_le(rep.paper_bound) || !rep.paper_bound.definitely_lt(h);

    // coefficient growth rate from the last two nonzero coefficients
    rep.growth_estimate = 0.0;
    const auto& cs = branch.coeffs;
    if (cs.size() >= 2) {
        const auto& [k2, a2] = cs[cs.size() - 1];
        const auto& [k1, a1] = cs[cs.size() - 2];
        if (a1 != 0 && k2 > k1) {
            Rat ratio = abs(a2) / abs(a1);
            rep.growth_estimate =
                std::pow(std::abs(ratio.get_d()), 1.0 / (double(k2 - k1))) *
                1.0;
        }
    }
    return rep;
}

}  // namespace hl
