#ifndef HEIGHTLAB_LINALG_HPP
#define HEIGHTLAB_LINALG_HPP

#include "heightlab/numbers.hpp"

namespace hl {

using RatMatrix = std::vector<std::vector<Rat>>;
using IntMatrix = std::vector<std::vector<Int>>;

/// Determinant of a square integer matrix (fraction-free Bareiss).
Int int_det(IntMatrix a);

/// Basis of the rational kernel {x : A x = 0} (row-style A, x column vector).
RatMatrix rational_kernel(const RatMatrix& A, size_t ncols);

/// Basis of the saturated integer kernel lattice {x in Z^n : A x = 0} of an
/// integer matrix, via a column Hermite normal form. The lattice equals the
/// set of ALL integer solutions (saturation is automatic).
IntMatrix integer_kernel(const IntMatrix& A, size_t ncols);

/// LLL reduction (delta = 0.99) of the lattice generated by the rows of B
/// (assumed linearly independent). Exact rational Gram-Schmidt arithmetic.
IntMatrix lll_reduce(IntMatrix B);

/// Rank of a rational matrix.
size_t rational_rank(RatMatrix A);

/// Primitive integer vector proportional to a rational vector.
std::vector<Int> primitive_vector(const std::vector<Rat>& v);

}  // namespace hl

#endif
