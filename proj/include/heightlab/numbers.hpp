#ifndef HEIGHTLAB_NUMBERS_HPP
#define HEIGHTLAB_NUMBERS_HPP

#include <map>
#include <vector>

#include "heightlab/interval.hpp"

namespace hl {

/// Canonicalized rational from numerator/denominator.
Rat make_rat(const Int& num, const Int& den);
Rat make_rat(long num, long den = 1);

inline Int num(const Rat& q) { return q.get_num(); }
inline Int den(const Rat& q) { return q.get_den(); }

bool is_prime(const Int& n);

/// p-adic valuation of a nonzero integer.
long vp(const Int& n, const Int& p);
/// p-adic valuation of a nonzero rational.
long vp(const Rat& q, const Int& p);

/// Prime factorization of |n| for n != 0 (trial division up to 10^6, then
/// Miller-Rabin plus Pollard-Brent rho). Returns prime -> exponent.
std::map<Int, unsigned> factorize(const Int& n);

/// Distinct primes dividing |n|.
std::vector<Int> prime_divisors(const Int& n);

/// log max(|num|, den) of a rational, as an enclosure. h(0) = 0.
RealInterval rational_height(const Rat& q, mpfr_prec_t prec = 0);

}  // namespace hl

#endif
