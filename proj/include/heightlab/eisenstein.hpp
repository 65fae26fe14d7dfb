#ifndef HEIGHTLAB_EISENSTEIN_HPP
#define HEIGHTLAB_EISENSTEIN_HPP

#include <map>

#include "heightlab/puiseux.hpp"

namespace hl {

/// Effective divisor (A_v): archimedean bound plus prime bounds A_p =
/// p^exponent, all >= 1; height = log A_inf + sum exponent * log p.
struct EisensteinDivisor {
    RealInterval arch_log;               // log A_inf >= 0
    std::map<Int, Rat> prime_exponents;  // p -> exponent >= 0 (exact)
    RealInterval height;
};

struct EisensteinReport {
    EisensteinDivisor observed;   // minimal divisor dominating the computed a_k
    RealInterval paper_bound;     // 4n h_p(F) + 3n log(nm) + 10 e n
    bool holds;                   // height(observed) <= paper_bound
    double growth_estimate;       // |a_K / a_{K-1}|, coefficient growth rate
};

/// Measure the minimal effective divisor with |a_k|_v <= A_v^{k/e} over the
/// computed coefficients, and compare its height to the paper bound.
/// Requires at least 8 computed coefficients (truncation order >= 8).
EisensteinReport measure_eisenstein(const PuiseuxBranch& branch,
                                    const BivarPoly& F, mpfr_prec_t prec = 0);

}  // namespace hl

#endif
