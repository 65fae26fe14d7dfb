#ifndef HEIGHTLAB_PUISEUX_HPP
#define HEIGHTLAB_PUISEUX_HPP

#include "heightlab/bivar_poly.hpp"
#include "heightlab/newton_polygon.hpp"

namespace hl {

/// Order of vanishing r of F at the origin: minimal total degree of a
/// monomial with nonzero coefficient. Requires F(0,0)=0.
long vanishing_order(const BivarPoly& F);

/// One group of Puiseux roots sharing the valuation nu = kappa/e (reduced).
struct PuiseuxExponent {
    Int kappa;          // reduced numerator (sign carried here)
    long e;             // reduced denominator >= 1 (ramification index)
    long multiplicity;  // number of Puiseux roots with this valuation
    Rat nu() const { return make_rat(kappa, Int(e)); }
};

struct BranchSummary {
    std::vector<PuiseuxExponent> exponents;  // valuations of nonzero roots
    long zero_roots = 0;  // roots y_i identically 0 (when Y | F)
    long ell = 0;         // number of roots with positive valuation (+ zero roots)
    Rat r_from_exponents; // sum over positive-valuation roots of min(1, nu)
};

/// Complete multiset of valuations nu_x(y_i) of the n Puiseux roots of F,
/// from the Newton polygon of {(j, ord_x f_j)}. Requires F(0,Y) != 0.
BranchSummary puiseux_exponents(const BivarPoly& F);

/// Verify: f_k(0) = 0 for k < ell and f_ell(0) != 0.
struct PfsReport {
    long ell;
    std::vector<std::pair<long, bool>> table;  // (k, f_k(0) == 0) for k <= ell
    bool holds;
};
PfsReport check_pfs(const BivarPoly& F);

/// Truncated Puiseux branch y = sum a_k x^{k/e}, exact rational coefficients.
struct PuiseuxBranch {
    long e = 1;                                 // ramification index
    std::vector<std::pair<long, Rat>> coeffs;   // (k, a_k), k in units of 1/e
    long truncation_order = 0;                  // coefficients known for k <= this
    bool exact = true;

    Rat coeff(long k) const;                    // a_k (0 if absent)
    /// Coefficients as a dense polynomial in t = x^{1/e}.
    RatPoly as_series() const;
};

/// Expand the branch_index-th rational origin branch (positive valuation) of
/// F to truncation order K (in units of 1/e for ramified branches, which are
/// expanded through F(x^e, Y)). Branches are enumerated deterministically.
/// Throws "irrational branch" when a Newton-Puiseux step needs an algebraic
/// coefficient, and "x divides F" / "origin not on curve" per preconditions.
PuiseuxBranch expand_branch(const BivarPoly& F, long e, size_t branch_index,
                            long K);

/// Number of rational unramified origin branches of F(x^e, Y) available to
/// expand_branch for the given e.
size_t count_rational_branches(const BivarPoly& F, long e);

/// Exact check: ord_x F(x^e, y~(x)) > K for the truncated branch.
bool branch_residual_ok(const BivarPoly& F, const PuiseuxBranch& branch);

}  // namespace hl

#endif
