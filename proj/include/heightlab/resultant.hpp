#ifndef HEIGHTLAB_RESULTANT_HPP
#define HEIGHTLAB_RESULTANT_HPP

#include "heightlab/bivar_poly.hpp"

namespace hl {

/// Resultant of two univariate integer polynomials (Sylvester determinant,
/// fraction-free Bareiss elimination). Res of two constants is 1 by
/// convention unless one is zero.
Int resultant(const IntPoly& f, const IntPoly& g);

/// Res_Y(F, G): the Sylvester resultant eliminating Y, a univariate
/// polynomial in X. Zero iff F and G share a factor of positive Y-degree.
/// Throws if both inputs are constant in Y.
RatPoly resultant_y(const BivarPoly& F, const BivarPoly& G);

/// Res_Y(F, dF/dY), used in the Schmidt bound and to detect degenerate
/// specializations.
RatPoly y_discriminant_resultant(const BivarPoly& F);

}  // namespace hl

#endif
