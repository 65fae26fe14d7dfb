#ifndef HEIGHTLAB_FACTOR_HPP
#define HEIGHTLAB_FACTOR_HPP

#include <utility>
#include <vector>

#include "heightlab/bivar_poly.hpp"

namespace hl {

/// Irreducible factors of a squarefree primitive polynomial of degree >= 1,
/// each primitive with positive leading coefficient, in a deterministic
/// order. Product equals +-f up to sign of lead(f).
/// (Modular factorization + Hensel lifting + subset recombination.)
std::vector<IntPoly> factor_squarefree(const IntPoly& f);

/// Full rational factorization of a nonzero polynomial:
/// f = content * prod factor_i ^ mult_i, factors primitive irreducible with
/// positive leading coefficient.
struct Factorization {
    Rat content;
    std::vector<std::pair<IntPoly, unsigned>> factors;
};
Factorization factor(const IntPoly& f);

bool is_irreducible(const IntPoly& f);

/// Exact Q-irreducibility of a bivariate polynomial via Kronecker
/// substitution Y -> X^(deg_X F + 1) and univariate factor recombination.
bool is_irreducible(const BivarPoly& F);

}  // namespace hl

#endif
