#include "heightlab/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "heightlab/factor.hpp"
#include "heightlab/newton_polygon.hpp"
#include "heightlab/puiseux.hpp"
#include "heightlab/resultant.hpp"

namespace hl {

namespace {

RealInterval log_rat(const Rat& q, mpfr_prec_t prec) {
    return RealInterval::log_of(q, prec);
}

RealInterval ri(long v, mpfr_prec_t prec) { return RealInterval::exact(v, prec); }
RealInterval ri(const Rat& v, mpfr_prec_t prec) { return RealInterval::exact(v, prec); }

}  // namespace

InequalityReport make_report(const std::string& name, const RealInterval& lhs,
                             const RealInterval& rhs) {
    InequalityReport rep;
    rep.name = name;
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.holds = lhs.definitely_le(rhs);
    rep.slack = rhs.mid_d() - lhs.mid_d();
    return rep;
}

InequalityReport check_schmidt(const BivarPoly& F, mpfr_prec_t prec) {
    const long n = F.deg_y(), m = F.deg_x();
    if (n < 1) throw std::domain_error("deg_Y F must be >= 1");
    RatPoly R = y_discriminant_resultant(F);
    if (R.is_zero())
        throw std::domain_error("resultant vanishes identically (F not squarefree in Y)");
    RealInterval lhs = height_poly(R, PolyHeightKind::projective, prec);
    RealInterval rhs =
        ri(2 * n - 1, prec) *
        (height_poly(F, PolyHeightKind::projective, prec) +
         log_rat(Rat((m + 1) * (n + 1)), prec) +
         log_rat(Rat(n), prec) * ri(make_rat(1, 2), prec));
    return make_report("schmidt", lhs, rhs);
}

std::vector<InequalityReport> check_root_height(const IntPoly& f,
                                                mpfr_prec_t prec) {
    if (f.degree() < 1) throw std::domain_error("degree must be >= 1");
    RealInterval rhs = height_poly(f, PolyHeightKind::projective, prec) +
                       log_rat(Rat(2), prec);
    std::vector<InequalityReport> out;
    for (auto& [g, mult] : factor(f).factors) {
        (void)mult;
        AlgebraicNumber root = AlgebraicNumber::roots_of(g, default_root_tol())[0];
        RealInterval h = height_algebraic(root, HeightRoute::mahler, prec).total;
        out.push_back(make_report("root_height:" + g.str(), h, rhs));
    }
    return out;
}

InequalityReport check_eval_bound2(const BivarPoly& F, const Rat& a,
                                   const AlgebraicNumber& b, mpfr_prec_t prec) {
    const long n = F.deg_y(), m = F.deg_x();
    RealInterval lhs = height_algebraic(b, HeightRoute::mahler, prec).total;
    RealInterval rhs = height_poly(F, PolyHeightKind::projective, prec) +
                       ri(m, prec) * height_rational(a, prec).total +
                       ri(n, prec) + log_rat(Rat(m + 1), prec);
    return make_report("eval_bound2", lhs, rhs);
}

InequalityReport check_eval_bound1(const BivarPoly& F, const Rat& a,
                                   const Rat& b, mpfr_prec_t prec) {
    const long n = F.deg_y(), m = F.deg_x();
    Rat v = F.eval(a, b);
    if (v == 0) throw std::domain_error("F(a,b) = 0; bound applies to nonzero values");
    RealInterval lhs = height_rational(v, prec).total;
    RealInterval rhs = height_poly(F, PolyHeightKind::affine, prec) +
                       ri(m, prec) * height_rational(a, prec).total +
                       ri(n, prec) * height_rational(b, prec).total +
                       log_rat(Rat((m + 1) * (n + 1)), prec);
    return make_report("eval_bound1", lhs, rhs);
}

InequalityReport check_coeff_vs_roots(const IntPoly& f, long ell,
                                      const Int& place, mpfr_prec_t prec) {
    const long n = f.degree();
    if (ell < 0 || ell > n - 1) throw std::domain_error("ell out of range");
    if (!is_squarefree(f)) throw std::domain_error("f must be squarefree");

    if (place == 0) {
        // archimedean: adversarial subset = the ell+1 smallest-modulus roots
        auto boxes = complex_roots(f, default_root_tol());
        std::sort(boxes.begin(), boxes.end(),
                  [prec](const CertifiedRootBox& x, const CertifiedRootBox& y) {
                      return x.abs_interval().mid_d() < y.abs_interval().mid_d();
                  });
        RealInterval maxmod = boxes[ell].abs_interval(prec);
        InequalityReport rep;
        if (f.coeff(ell) == 0) {
            rep = make_report("coeff_vs_roots:inf", RealInterval::zero(prec), maxmod);
            rep.holds = true;
            return rep;
        }
        RealInterval rhs_small =
            ri(Rat(abs(f.coeff(ell))), prec) /
            (ri(Rat((n + 1) * f.sup_norm()), prec) *
             ri(Rat(Int(1) << static_cast<unsigned long>(n)), prec));
        return make_report("coeff_vs_roots:inf", rhs_small, maxmod);
    }

    // p-adic: exact exponent comparison; c_v = 1
    const Int& p = place;
    long minv = -1;
    for (long i = 0; i <= n; ++i)
        if (f.coeff(i) != 0) {
            long v = vp(f.coeff(i), p);
            if (minv < 0 || v < minv) minv = v;
        }
    // valuations of all roots, descending = moduli ascending; zero roots first
    std::vector<Rat> vals;
    for (auto& [val, mult] : padic_root_valuations(f, p))
        for (long t = 0; t < mult; ++t) vals.push_back(val);
    std::sort(vals.begin(), vals.end(), std::greater<Rat>());
    long zero_roots = f.order_at_zero();
    InequalityReport rep;
    rep.name = "coeff_vs_roots:p=" + p.get_str();
    if (f.coeff(ell) == 0) {
        rep.lhs = RealInterval::zero(prec);
        rep.rhs = RealInterval::exact(1, prec);
        rep.holds = true;
        rep.slack = 1.0;
        return rep;
    }
    Rat rhs_exp = Rat(vp(f.coeff(ell), p) - minv);  // |a_ell|/|f| = p^-rhs_exp
    // a_ell != 0 forces ell >= order_at_zero, so the subset reaches past the
    // zero roots and its largest modulus is p^-vals[ell - zero_roots]
    Rat sel_val = vals[ell - zero_roots];
    bool holds = (sel_val <= rhs_exp);
    RealInterval logp = log_rat(Rat(p), prec);
    rep.lhs = (-(ri(rhs_exp, prec)) * logp).exp();
    rep.rhs = (-(ri(sel_val, prec)) * logp).exp();
    rep.holds = holds;
    rep.slack = rep.rhs.mid_d() - rep.lhs.mid_d();
    return rep;
}

InequalityReport check_system_bound(const BivarPoly& F1, const BivarPoly& F2,
                                    const Rat& a, mpfr_prec_t prec) {
    const long n1 = F1.deg_y(), n2 = F2.deg_y();
    const long m1 = F1.deg_x(), m2 = F2.deg_x();
    RatPoly R = resultant_y(F1, F2);
    if (R.is_zero()) throw std::domain_error("polynomials share a common factor");
    if (R.eval(a) != 0) throw std::domain_error("not a common point abscissa");
    RealInterval lhs = height_rational(a, prec).total;
    RealInterval rhs = ri(n1, prec) * height_poly(F2, PolyHeightKind::projective, prec) +
                       ri(n2, prec) * height_poly(F1, PolyHeightKind::projective, prec) +
                       ri(m1 * n2 + m2 * n1, prec) +
                       ri(n1 + n2, prec) * log_rat(Rat(n1 + n2), prec) +
                       log_rat(Rat(2), prec);
    return make_report("system_bound", lhs, rhs);
}

DichotomyReport main_theorem_check(const BivarPoly& F, const Rat& a,
                                   const AlgebraicNumber& b, const Rat& eps,
                                   mpfr_prec_t prec) {
    if (eps <= 0 || eps >= 1) throw std::domain_error("epsilon out of range (0,1)");
    DichotomyReport rep;
    rep.r = vanishing_order(F);
    rep.n = F.deg_y();
    rep.m = F.deg_x();
    rep.epsilon = eps;
    rep.h_alpha = height_rational(a, prec).total;
    rep.h_beta = height_algebraic(b, HeightRoute::mahler, prec).total;
    // the origin specialization is degenerate (lgcd(0, .) is +infinity
    // place-wise); report 0 so that lhs_main = |0 - 0| stays meaningful
    rep.lgcd_value = (a == 0) ? RealInterval::zero(prec) : lgcd(a, b, prec);

    RealInterval hp = height_poly(F, PolyHeightKind::projective, prec);
    const long n = rep.n, m = rep.m, r = rep.r;
    Int n6 = Int(n) * n * n * n * n * n;
    rep.threshold = ri(200, prec) * ri(Rat(1) / (eps * eps), prec) *
                    ri(Rat(Int(m) * n6), prec) * (hp + ri(5, prec));

    rep.lhs_main = (rep.lgcd_value * ri(make_rat(1, r), prec) -
                    rep.h_alpha * ri(make_rat(1, n), prec))
                       .abs();
    Int n4 = Int(n) * n * n * n;
    rep.rhs_main =
        ri(make_rat(1, r), prec) *
        (ri(eps, prec) * rep.h_alpha +
         ri(Rat(4000) / eps, prec) * ri(Rat(n4), prec) *
             (hp + log_rat(Rat(m * n), prec) + ri(1, prec)) +
         ri(Rat(30 * n * n * m), prec) * (hp + log_rat(Rat(n * m), prec)));

    bool small = !rep.threshold.definitely_lt(rep.h_alpha);
    rep.branch_taken = small ? DichotomyBranch::small_height
                             : DichotomyBranch::asymptotic;
    rep.invariant_holds =
        small ? true : rep.lhs_main.definitely_le(rep.rhs_main);
    return rep;
}

RealInterval main_lemma_rhs(const BivarPoly& F, const Rat& eps,
                            MainLemmaKind kind, long e,
                            const RealInterval& h_alpha, mpfr_prec_t prec) {
    if (eps <= 0 || eps > 1) throw std::domain_error("epsilon out of range (0,1]");
    const long n = F.deg_y(), m = F.deg_x();
    RealInterval hp = height_poly(F, PolyHeightKind::projective, prec);
    Int n4 = Int(n) * n * n * n;
    Int n2 = Int(n) * n;
    switch (kind) {
        case MainLemmaKind::eml1:
            return ri(Rat(200) / (eps * eps), prec) * ri(Rat(Int(m) * n4), prec) *
                   (hp + ri(5, prec));
        case MainLemmaKind::eml2:
            return ri(eps * Rat(n), prec) * h_alpha +
                   ri(Rat(200) / eps, prec) * ri(Rat(n2), prec) *
                       (hp + log_rat(Rat(m * n), prec) + ri(10, prec));
        case MainLemmaKind::erml1:
            return ri(Rat(200) / (eps * eps), prec) *
                   ri(Rat(Int(m) * e * e * n4), prec) * (hp + ri(5, prec));
        case MainLemmaKind::erml2:
            return ri(eps, prec) * h_alpha +
                   ri(Rat(200) / eps, prec) * ri(Rat(Int(e) * n2), prec) *
                       (hp + ri(2, prec) * log_rat(Rat(m * n), prec) +
                        ri(10, prec));
    }
    throw std::logic_error("unreachable");
}

}  // namespace hl
