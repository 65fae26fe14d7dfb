#ifndef HEIGHTLAB_INT_POLY_HPP
#define HEIGHTLAB_INT_POLY_HPP

#include <string>
#include <vector>

#include "heightlab/numbers.hpp"

namespace hl {

class IntPoly;

/// Dense univariate polynomial with rational coefficients, index = degree.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs);
    static RatPoly constant(const Rat& c);
    static RatPoly x();

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rat coeff(long i) const;
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat lead() const;

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const Rat& s) const;
    RatPoly operator-() const;
    bool operator==(const RatPoly& o) const { return c_ == o.c_; }

    Rat eval(const Rat& x) const;
    RatPoly derivative() const;
    /// Euclidean division; returns {quotient, remainder}.
    std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const;
    /// Monic gcd.
    static RatPoly gcd(RatPoly a, RatPoly b);
    /// Primitive integer polynomial c * this with minimal positive c; also
    /// returns the content so that this == content * result.
    std::pair<IntPoly, Rat> clear_denominators() const;

    /// Order of vanishing at 0 (index of lowest nonzero coefficient);
    /// degree+1... throws on zero polynomial.
    long order_at_zero() const;

private:
    void trim();
    std::vector<Rat> c_;
};

/// Dense univariate polynomial with integer coefficients, index = degree.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    static IntPoly constant(const Int& c);
    static IntPoly from_long(std::initializer_list<long> coeffs);
    static IntPoly x();

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Int coeff(long i) const;
    const std::vector<Int>& coeffs() const { return c_; }
    Int lead() const;
    Int constant_term() const { return coeff(0); }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const Int& s) const;
    IntPoly operator-() const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;
    IntPoly derivative() const;
    RatPoly to_rat() const;

    Int content() const;             // gcd of |coefficients|, 0 for zero poly
    IntPoly primitive_part() const;  // content 1, sign of lead preserved
    /// X^d f(1/X), the reversed polynomial (requires constant term != 0).
    IntPoly reversed() const;
    /// Exact division; throws if not divisible.
    IntPoly exact_div(const IntPoly& d) const;
    bool divides(const IntPoly& g) const;  // this | g
    /// Pseudo-remainder prem(this, d).
    IntPoly pseudo_rem(const IntPoly& d) const;
    /// Primitive gcd with positive leading coefficient.
    static IntPoly gcd(IntPoly a, IntPoly b);
    /// Largest k with X^k | f.
    long order_at_zero() const;
    /// max |coefficient|
    Int sup_norm() const;

    std::string str(const std::string& var = "X") const;

private:
    void trim();
    std::vector<Int> c_;
};

/// Product of the distinct irreducible factors of f, primitive with positive
/// leading coefficient.
IntPoly squarefree_part(const IntPoly& f);

bool is_squarefree(const IntPoly& f);

}  // namespace hl

#endif
