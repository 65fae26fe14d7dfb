#include "heightlab/algebraic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "heightlab/factor.hpp"

namespace hl {

Rat AlgebraicNumber::as_rational() const {
    if (degree() != 1) throw std::domain_error("not a rational number");
    return make_rat(-minpoly.coeff(0), minpoly.coeff(1));
}

AlgebraicNumber AlgebraicNumber::from_rational(const Rat& q) {
    IntPoly mp({std::vector<Int>{-num(q), den(q)}});
    return {mp, CertifiedRootBox{q, Rat(0), Rat(0)}};
}

std::vector<AlgebraicNumber> AlgebraicNumber::roots_of(const IntPoly& irreducible,
                                                       const Rat& tol,
                                                       mpfr_prec_t prec_cap) {
    std::vector<AlgebraicNumber> out;
    for (auto& b : complex_roots(irreducible, tol, prec_cap))
        out.push_back({irreducible, b});
    return out;  // complex_roots already sorts by (re, im)
}

IntPoly specialize_to_int(const BivarPoly& F, const Rat& alpha) {
    RatPoly s = F.specialize_x(alpha);
    if (s.is_zero()) throw std::domain_error("vertical line");
    return s.clear_denominators().first;
}

std::vector<AlgebraicNumber> roots_of_specialization(const BivarPoly& F,
                                                     const Rat& alpha,
                                                     const Rat& tol,
                                                     mpfr_prec_t prec_cap) {
    IntPoly s = specialize_to_int(F, alpha);
    if (s.degree() < 1) return {};
    std::vector<AlgebraicNumber> out;
    for (auto& [g, mult] : factor(s).factors) {
        (void)mult;  // each distinct root listed once
        for (auto& r : AlgebraicNumber::roots_of(g, tol, prec_cap)) out.push_back(r);
    }
    return out;
}

AlgebraicNumber min_poly_of_root(const BivarPoly& F, const Rat& alpha,
                                 size_t root_index, const Rat& tol,
                                 mpfr_prec_t prec_cap) {
    auto roots = roots_of_specialization(F, alpha, tol, prec_cap);
    if (root_index >= roots.size())
        throw std::out_of_range("root index out of range");
    return roots[root_index];
}

std::vector<Int> relevant_primes(const IntPoly& f, const Rat& alpha) {
    if (f.is_zero()) throw std::domain_error("relevant_primes of zero polynomial");
    std::set<Int> ps;
    auto add = [&](const Int& v) {
        if (v == 0) return;
        for (auto& p : prime_divisors(v)) ps.insert(p);
    };
    add(f.lead());
    add(f.coeff(f.order_at_zero()));
    add(num(alpha));
    add(den(alpha));
    return std::vector<Int>(ps.begin(), ps.end());
}

}  // namespace hl
