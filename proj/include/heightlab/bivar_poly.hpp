#ifndef HEIGHTLAB_BIVAR_POLY_HPP
#define HEIGHTLAB_BIVAR_POLY_HPP

#include <string>
#include <vector>

#include "heightlab/int_poly.hpp"

namespace hl {

/// Bivariate polynomial F(X,Y). Canonical representation: a dense integer
/// coefficient grid that is primitive (content 1, first nonzero coefficient
/// in (i,j)-lex order positive) together with a rational scale, so that
/// F = scale * sum grid[i][j] X^i Y^j. Projective heights read directly off
/// the grid; affine heights use the scale. Immutable after construction.
class BivarPoly {
public:
    BivarPoly() = default;

    /// grid[i][j] is the coefficient of X^i Y^j.
    static BivarPoly from_rational_grid(const std::vector<std::vector<Rat>>& grid);
    static BivarPoly from_int_grid(const std::vector<std::vector<Int>>& grid);
    /// F(X,Y) = sum_j coeff_of_y[j](X) * Y^j
    static BivarPoly from_y_coeffs(const std::vector<RatPoly>& coeff_of_y);

    bool is_zero() const { return grid_.empty(); }
    long deg_x() const { return m_; }
    long deg_y() const { return n_; }
    long max_deg() const { return std::max(m_, n_); }
    const Rat& scale() const { return scale_; }

    Int coeff_int(long i, long j) const;
    Rat coeff(long i, long j) const;  // scale * grid[i][j]

    /// Coefficient of Y^j as a polynomial in X (integer normal form).
    IntPoly y_coeff(long j) const;
    /// All nonzero grid entries, row-major.
    std::vector<Int> nonzero_int_coeffs() const;
    std::vector<Rat> nonzero_coeffs() const;

    /// F(x, Y) as a rational polynomial in Y (includes scale).
    RatPoly specialize_x(const Rat& x) const;
    /// F(X, y) as a rational polynomial in X (includes scale).
    RatPoly specialize_y(const Rat& y) const;
    Rat eval(const Rat& x, const Rat& y) const;

    BivarPoly derivative_y() const;
    BivarPoly derivative_x() const;
    /// F(X^e, Y)
    BivarPoly substitute_x_power(long e) const;
    /// Swap the roles of X and Y.
    BivarPoly transpose() const;

    bool vanishes_at_origin() const { return coeff_int(0, 0) == 0; }

    bool operator==(const BivarPoly& o) const {
        return grid_ == o.grid_ && scale_ == o.scale_;
    }

    std::string str() const;

private:
    void normalize();
    std::vector<std::vector<Int>> grid_;  // grid_[i][j] : X^i Y^j
    Rat scale_{1};
    long m_ = -1, n_ = -1;
};

}  // namespace hl

#endif
