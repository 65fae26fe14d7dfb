#ifndef HEIGHTLAB_BOUNDS_HPP
#define HEIGHTLAB_BOUNDS_HPP

#include "heightlab/heights.hpp"

namespace hl {

struct InequalityReport {
    std::string name;
    RealInterval lhs, rhs;
    bool holds;    // upper enclosure of lhs <= lower enclosure of rhs
    double slack;  // rhs - lhs midpoint estimate
};

InequalityReport make_report(const std::string& name, const RealInterval& lhs,
                             const RealInterval& rhs);

/// h_p(Res_Y(F, F'_Y)) <= (2n-1) h_p(F) + (2n-1) log((m+1)(n+1) sqrt(n)).
/// Throws if the resultant vanishes identically (F not squarefree in Y).
InequalityReport check_schmidt(const BivarPoly& F, mpfr_prec_t prec = 0);

/// h(root) <= h_p(f) + log 2, one report per irreducible factor of f.
std::vector<InequalityReport> check_root_height(const IntPoly& f,
                                                mpfr_prec_t prec = 0);

/// h(beta) <= h_p(F) + m h(alpha) + n + log(m+1) for F(alpha,beta)=0.
InequalityReport check_eval_bound2(const BivarPoly& F, const Rat& a,
                                   const AlgebraicNumber& b,
                                   mpfr_prec_t prec = 0);

/// h(F(alpha,beta)) <= h_a(F) + m h(alpha) + n h(beta) + log((m+1)(n+1)),
/// evaluated at a rational point (alpha, beta) with F(alpha,beta) != 0.
InequalityReport check_eval_bound1(const BivarPoly& F, const Rat& a,
                                   const Rat& b, mpfr_prec_t prec = 0);

/// max over the (adversarially chosen) ell+1 smallest-modulus roots of
/// |root|_v >= c_v(n) |a_ell|_v / |f|_v, with c_v(n) = (n+1)^-1 2^-n at the
/// archimedean place and 1 elsewhere. place = 0 means archimedean.
InequalityReport check_coeff_vs_roots(const IntPoly& f, long ell,
                                      const Int& place, mpfr_prec_t prec = 0);

/// h(alpha) <= n1 h_p(F2) + n2 h_p(F1) + (m1 n2 + m2 n1)
///             + (n1+n2) log(n1+n2) + log 2
/// for alpha a root of Res_Y(F1, F2), F1 and F2 coprime.
InequalityReport check_system_bound(const BivarPoly& F1, const BivarPoly& F2,
                                    const Rat& a, mpfr_prec_t prec = 0);

enum class DichotomyBranch { small_height, asymptotic };

struct DichotomyReport {
    RealInterval h_alpha, h_beta, lgcd_value;
    long r, n, m;
    Rat epsilon;
    DichotomyBranch branch_taken;
    RealInterval threshold;  // 200 eps^-2 m n^6 (h_p(F)+5)
    RealInterval lhs_main;   // |lgcd/r - h(alpha)/n|
    RealInterval rhs_main;
    bool invariant_holds;    // small-height branch, or lhs_main <= rhs_main
};

/// Evaluate the Main Theorem dichotomy at the point (a, b) on F.
DichotomyReport main_theorem_check(const BivarPoly& F, const Rat& a,
                                   const AlgebraicNumber& b, const Rat& eps,
                                   mpfr_prec_t prec = 0);

enum class MainLemmaKind { eml1, eml2, erml1, erml2 };

/// Closed-form right-hand sides of the (ramified) Main Lemma, for reporting.
/// h_alpha enters only the eml2/erml2 values.
RealInterval main_lemma_rhs(const BivarPoly& F, const Rat& eps,
                            MainLemmaKind kind, long e = 1,
                            const RealInterval& h_alpha = RealInterval(),
                            mpfr_prec_t prec = 0);

}  // namespace hl

#endif
