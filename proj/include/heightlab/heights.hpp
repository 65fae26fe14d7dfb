#ifndef HEIGHTLAB_HEIGHTS_HPP
#define HEIGHTLAB_HEIGHTS_HPP

#include <map>

#include "heightlab/algebraic.hpp"

namespace hl {

/// h(x) = archimedean part + sum over p of coeff_p * log p, with the
/// nonarchimedean coefficients kept exact.
struct HeightBreakdown {
    RealInterval archimedean;
    std::map<Int, Rat> nonarch;  // prime -> exact coefficient of log p
    RealInterval total;
};

enum class HeightRoute { mahler, places };

HeightBreakdown height_rational(const Rat& a, mpfr_prec_t prec = 0);

/// Height of an algebraic number from its minimal polynomial.
///  - mahler: nonarch parts read off v_p(lead) (Gauss lemma), archimedean
///    part from the product |lead| * prod max(1, |root|) -- i.e.
///    h = (1/d) log M_infty(minpoly).
///  - places: nonarch parts from p-adic Newton polygons, archimedean part as
///    the sum of log+ over the embeddings.
/// Both enclose the same real number.
HeightBreakdown height_algebraic(const AlgebraicNumber& b, HeightRoute route,
                                 mpfr_prec_t prec = 0);

/// lgcd(a, b) = sum over places of min(h_v(a), h_v(b)), with b's places
/// realized as the roots of its minimal polynomial with uniform weight 1/d.
RealInterval lgcd(const Rat& a, const AlgebraicNumber& b, mpfr_prec_t prec = 0);
RealInterval lgcd(const Rat& a, const Rat& b, mpfr_prec_t prec = 0);

enum class VectorHeightKind { projective, affine, euclidean };

/// Height of a rational vector. projective/euclidean are scaling-invariant;
/// euclidean uses the 2-norm at the archimedean place (h_s).
RealInterval height_vector(const std::vector<Rat>& v, VectorHeightKind kind,
                           mpfr_prec_t prec = 0);

enum class PolyHeightKind { projective, affine };

RealInterval height_poly(const BivarPoly& F, PolyHeightKind kind,
                         mpfr_prec_t prec = 0);
RealInterval height_poly(const IntPoly& f, PolyHeightKind kind,
                         mpfr_prec_t prec = 0);
RealInterval height_poly(const RatPoly& f, PolyHeightKind kind,
                         mpfr_prec_t prec = 0);

}  // namespace hl

#endif
