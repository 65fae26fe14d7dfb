#ifndef HEIGHTLAB_ROOTS_HPP
#define HEIGHTLAB_ROOTS_HPP

#include "heightlab/int_poly.hpp"

namespace hl {

/// Closed disc in the complex plane with exact rational center and radius,
/// certified to contain exactly one root of the polynomial it was computed
/// from.
struct CertifiedRootBox {
    Rat re, im;   // center
    Rat radius;   // 0 for exact rational roots

    /// Enclosure of |z| over the disc.
    RealInterval abs_interval(mpfr_prec_t prec = 0) const;
    /// Enclosure of log|z|; requires the disc to exclude 0.
    RealInterval log_abs_interval(mpfr_prec_t prec = 0) const;
    /// True if the disc certainly excludes the origin.
    bool excludes_zero() const;
    bool contains_origin_center() const { return re == 0 && im == 0 && radius == 0; }
};

/// Isolate all deg(f) complex roots of a squarefree polynomial in pairwise
/// disjoint certified discs of radius <= tol. Certification is exact: each
/// disc D(z, n|f(z)/f'(z)|) contains at least one root, and disjointness of
/// the deg(f) discs forces exactly one root per disc.
/// Throws on non-squarefree input; PrecisionExhausted if isolation fails at
/// the precision cap.
std::vector<CertifiedRootBox> complex_roots(const IntPoly& f, const Rat& tol,
                                            mpfr_prec_t prec_cap = 1 << 16);

/// Default tolerance 2^-80.
Rat default_root_tol();

}  // namespace hl

#endif
