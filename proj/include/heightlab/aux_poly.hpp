#ifndef HEIGHTLAB_AUX_POLY_HPP
#define HEIGHTLAB_AUX_POLY_HPP

#include "heightlab/eisenstein.hpp"
#include "heightlab/heights.hpp"

namespace hl {

struct AuxPolynomial {
    BivarPoly G;           // deg_X <= N, deg_Y <= n-1, nonzero
    long N;
    Rat delta;
    long target_order;     // q = ceil((1-delta) N n): forced vanishing order
    long achieved_order;   // exact ord_x G(x, y~(x))
    bool order_exact;      // false if the residual vanishes through the whole
                           // branch truncation (achieved_order is then a lower
                           // bound: truncation_order + 1)
    RealInterval h_p_G;
    RealInterval eauxh_bound;  // delta^-1 n N (h(A) + 3), A the measured divisor
    bool meets_bound;          // h_p(G) <= eauxh_bound
};

/// Siegel-style auxiliary polynomial: the smallest-height integer vector in
/// the lattice of (c_{i,l}) with ord_x sum c_{i,l} x^i y~(x)^l >= q, found by
/// saturated kernel + LLL reduction. Requires an unramified branch (e = 1)
/// with truncation_order >= max(N * deg_Y F, 8) and 0 < delta <= 1/2.
AuxPolynomial build_aux_poly(const BivarPoly& F, const PuiseuxBranch& branch,
                             long N, const Rat& delta, mpfr_prec_t prec = 0);

}  // namespace hl

#endif
