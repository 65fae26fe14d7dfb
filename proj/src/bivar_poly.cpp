#include "heightlab/bivar_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace hl {

void BivarPoly::normalize() {
    // trim zero rows/columns, compute degrees, pull out content and sign
    long mi = -1, nj = -1;
    for (size_t i = 0; i < grid_.size(); ++i)
        for (size_t j = 0; j < grid_[i].size(); ++j)
            if (grid_[i][j] != 0) {
                mi = std::max<long>(mi, static_cast<long>(i));
                nj = std::max<long>(nj, static_cast<long>(j));
            }
    if (mi < 0) {
        grid_.clear();
        m_ = n_ = -1;
        scale_ = 0;
        return;
    }
    grid_.resize(mi + 1);
    for (auto& row : grid_) row.resize(nj + 1, Int(0));
    m_ = mi;
    n_ = nj;
    Int g(0);
    for (auto& row : grid_)
        for (auto& v : row) g = gcd(g, v);
    int sign = 0;
    for (auto& row : grid_) {
        for (auto& v : row) {
            if (sign == 0 && v != 0) sign = sgn(v);
        }
    }
    if (sign < 0) g = -g;
    if (g != 1) {
        for (auto& row : grid_)
            for (auto& v : row) v /= g;
        scale_ *= Rat(g);
    }
}

BivarPoly BivarPoly::from_rational_grid(const std::vector<std::vector<Rat>>& grid) {
    Int l(1);
    for (auto& row : grid)
        for (auto& v : row) l = lcm(l, den(v));
    BivarPoly f;
    f.grid_.resize(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) {
        f.grid_[i].resize(grid[i].size());
        for (size_t j = 0; j < grid[i].size(); ++j)
            f.grid_[i][j] = num(grid[i][j]) * (l / den(grid[i][j]));
    }
    f.scale_ = make_rat(Int(1), l);
    f.normalize();
    return f;
}

BivarPoly BivarPoly::from_int_grid(const std::vector<std::vector<Int>>& grid) {
    BivarPoly f;
    f.grid_ = grid;
    f.scale_ = 1;
    f.normalize();
    return f;
}

BivarPoly BivarPoly::from_y_coeffs(const std::vector<RatPoly>& coeff_of_y) {
    long m = 0;
    for (auto& p : coeff_of_y)
        if (!p.is_zero()) m = std::max(m, p.degree());
    std::vector<std::vector<Rat>> grid(m + 1,
                                       std::vector<Rat>(coeff_of_y.size(), Rat(0)));
    for (size_t j = 0; j < coeff_of_y.size(); ++j)
        for (long i = 0; i <= coeff_of_y[j].degree(); ++i)
            grid[i][j] = coeff_of_y[j].coeff(i);
    return from_rational_grid(grid);
}

Int BivarPoly::coeff_int(long i, long j) const {
    if (i < 0 || j < 0 || i > m_ || j > n_ || is_zero()) return Int(0);
    return grid_[i][j];
}

Rat BivarPoly::coeff(long i, long j) const { return Rat(coeff_int(i, j)) * scale_; }

IntPoly BivarPoly::y_coeff(long j) const {
    if (is_zero() || j < 0 || j > n_) return IntPoly();
    std::vector<Int> c(m_ + 1);
    for (long i = 0; i <= m_; ++i) c[i] = grid_[i][j];
    return IntPoly(std::move(c));
}

std::vector<Int> BivarPoly::nonzero_int_coeffs() const {
    std::vector<Int> out;
    for (auto& row : grid_)
        for (auto& v : row)
            if (v != 0) out.push_back(v);
    return out;
}

std::vector<Rat> BivarPoly::nonzero_coeffs() const {
    std::vector<Rat> out;
    for (auto& v : nonzero_int_coeffs()) out.push_back(Rat(v) * scale_);
    return out;
}

RatPoly BivarPoly::specialize_x(const Rat& x) const {
    if (is_zero()) return RatPoly();
    std::vector<Rat> c(n_ + 1, Rat(0));
    for (long j = 0; j <= n_; ++j) c[j] = Rat(y_coeff(j).eval(x)) * scale_;
    return RatPoly(std::move(c));
}

RatPoly BivarPoly::specialize_y(const Rat& y) const {
    if (is_zero()) return RatPoly();
    std::vector<Rat> c(m_ + 1, Rat(0));
    for (long i = 0; i <= m_; ++i) {
        Rat acc(0);
        for (long j = n_; j >= 0; --j) acc = acc * y + Rat(grid_[i][j]);
        c[i] = acc * scale_;
    }
    return RatPoly(std::move(c));
}

Rat BivarPoly::eval(const Rat& x, const Rat& y) const {
    return specialize_x(x).eval(y);
}

BivarPoly BivarPoly::derivative_y() const {
    if (is_zero() || n_ == 0) return BivarPoly();
    std::vector<std::vector<Rat>> grid(m_ + 1, std::vector<Rat>(n_, Rat(0)));
    for (long i = 0; i <= m_; ++i)
        for (long j = 1; j <= n_; ++j)
            grid[i][j - 1] = Rat(grid_[i][j]) * Rat(j) * scale_;
    return from_rational_grid(grid);
}

BivarPoly BivarPoly::derivative_x() const {
    if (is_zero() || m_ == 0) return BivarPoly();
    std::vector<std::vector<Rat>> grid(m_, std::vector<Rat>(n_ + 1, Rat(0)));
    for (long i = 1; i <= m_; ++i)
        for (long j = 0; j <= n_; ++j)
            grid[i - 1][j] = Rat(grid_[i][j]) * Rat(i) * scale_;
    return from_rational_grid(grid);
}

BivarPoly BivarPoly::substitute_x_power(long e) const {
    if (e < 1) throw std::domain_error("substitute_x_power requires e >= 1");
    if (is_zero() || e == 1) return *this;
    std::vector<std::vector<Rat>> grid(m_ * e + 1, std::vector<Rat>(n_ + 1, Rat(0)));
    for (long i = 0; i <= m_; ++i)
        for (long j = 0; j <= n_; ++j)
            grid[i * e][j] = Rat(grid_[i][j]) * scale_;
    return from_rational_grid(grid);
}

BivarPoly BivarPoly::transpose() const {
    if (is_zero()) return BivarPoly();
    std::vector<std::vector<Rat>> grid(n_ + 1, std::vector<Rat>(m_ + 1, Rat(0)));
    for (long i = 0; i <= m_; ++i)
        for (long j = 0; j <= n_; ++j) grid[j][i] = Rat(grid_[i][j]) * scale_;
    return from_rational_grid(grid);
}

std::string BivarPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long j = n_; j >= 0; --j) {
        for (long i = m_; i >= 0; --i) {
            Rat c = coeff(i, j);
            if (c == 0) continue;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            Rat a = abs(c);
            bool show_coef = (a != 1) || (i == 0 && j == 0);
            if (show_coef) {
                os << num(a).get_str();
                if (den(a) != 1) os << "/" << den(a).get_str();
            }
            bool star = show_coef;
            if (i > 0) {
                if (star) os << "*";
                os << "X";
                if (i > 1) os << "^" << i;
                star = true;
            }
            if (j > 0) {
                if (star) os << "*";
                os << "Y";
                if (j > 1) os << "^" << j;
            }
            first = false;
        }
    }
    return os.str();
}

}  // namespace hl
