#ifndef HEIGHTLAB_ALGEBRAIC_HPP
#define HEIGHTLAB_ALGEBRAIC_HPP

#include "heightlab/bivar_poly.hpp"
#include "heightlab/roots.hpp"

namespace hl {

/// An exact algebraic number: irreducible primitive minimal polynomial with
/// positive leading coefficient, plus a certified box selecting one root.
struct AlgebraicNumber {
    IntPoly minpoly;
    CertifiedRootBox box;
    long degree() const { return minpoly.degree(); }

    bool is_rational() const { return degree() == 1; }
    Rat as_rational() const;  // requires degree 1

    /// All roots of an irreducible polynomial, in deterministic order
    /// (sorted by (re, im) of the certified centers).
    static std::vector<AlgebraicNumber> roots_of(const IntPoly& irreducible,
                                                 const Rat& tol,
                                                 mpfr_prec_t prec_cap = 1 << 16);
    static AlgebraicNumber from_rational(const Rat& q);
};

/// All roots beta of F(alpha, Y) = 0 as algebraic numbers, each carrying the
/// irreducible factor of the specialization that it is a root of. Order is
/// deterministic: factors sorted (degree, then coefficients), roots sorted
/// within each factor. Throws "vertical line" if F(alpha, Y) == 0.
std::vector<AlgebraicNumber> roots_of_specialization(const BivarPoly& F,
                                                     const Rat& alpha,
                                                     const Rat& tol,
                                                     mpfr_prec_t prec_cap = 1
                                                                            << 16);

/// The root_index-th root (0-based) in the order above.
AlgebraicNumber min_poly_of_root(const BivarPoly& F, const Rat& alpha,
                                 size_t root_index, const Rat& tol,
                                 mpfr_prec_t prec_cap = 1 << 16);

/// Specialization F(alpha, Y) as a primitive integer polynomial (content
/// dropped). Throws "vertical line" if identically zero.
IntPoly specialize_to_int(const BivarPoly& F, const Rat& alpha);

/// Superset of the primes at which alpha or any root of f has a nonzero
/// local height term: primes dividing lead(f), the lowest nonzero
/// coefficient of f, or num/den of alpha.
std::vector<Int> relevant_primes(const IntPoly& f, const Rat& alpha);

}  // namespace hl

#endif
