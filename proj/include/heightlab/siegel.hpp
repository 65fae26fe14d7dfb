#ifndef HEIGHTLAB_SIEGEL_HPP
#define HEIGHTLAB_SIEGEL_HPP

#include "heightlab/heights.hpp"
#include "heightlab/linalg.hpp"

namespace hl {

struct SubspaceHeight {
    size_t dimension;
    std::vector<Int> plucker;  // content-normalized maximal minors
    RealInterval h_s;
};

/// h_s of the span of the given linearly independent rational vectors, via
/// Plucker coordinates (all maximal minors of the basis matrix).
/// The zero subspace (empty basis) has h_s = 0.
SubspaceHeight subspace_height(const RatMatrix& basis, mpfr_prec_t prec = 0);

/// Exact rational basis of the orthogonal complement (standard inner
/// product). h_s of the result equals h_s of the input subspace.
RatMatrix orthogonal_complement(const RatMatrix& basis, size_t ambient_dim);

struct KernelVectorReport {
    std::vector<Int> vector;   // primitive integer solution
    RealInterval h_p;          // its projective height
    RealInterval bound;        // right-hand side of the Siegel corollary
    bool meets_bound;
    bool certified_by_search;  // true if the exhaustive fallback ran
};

/// Nonzero rational solution of L_1(x)=...=L_m(x)=0 of small projective
/// height: saturated integer kernel, LLL-reduced, best vector by h_p; if it
/// misses the bound, an exhaustive search over short lattice vectors either
/// finds a compliant vector or flags the instance.
KernelVectorReport small_kernel_vector(const RatMatrix& forms, size_t nvars,
                                       mpfr_prec_t prec = 0);

}  // namespace hl

#endif
