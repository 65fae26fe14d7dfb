#include "heightlab/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace hl {

Int int_det(IntMatrix a) {
    const size_t n = a.size();
    if (n == 0) return Int(1);
    for (auto& row : a)
        if (row.size() != n) throw std::domain_error("determinant of non-square matrix");
    Int denom(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0) ++piv;
            if (piv == n) return Int(0);
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), denom.get_mpz_t());
            }
            a[i][k] = 0;
        }
        denom = a[k][k];
    }
    return sign < 0 ? Int(-a[n - 1][n - 1]) : a[n - 1][n - 1];
}

namespace {

/// Row-reduce in place; returns pivot column of each pivot row.
std::vector<long> rref(RatMatrix& A, size_t ncols) {
    std::vector<long> pivots;
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < A.size(); ++col) {
        size_t piv = row;
        while (piv < A.size() && A[piv][col] == 0) ++piv;
        if (piv == A.size()) continue;
        std::swap(A[row], A[piv]);
        Rat inv = Rat(1) / A[row][col];
        for (size_t j = col; j < ncols; ++j) A[row][j] *= inv;
        for (size_t i = 0; i < A.size(); ++i) {
            if (i == row || A[i][col] == 0) continue;
            Rat f = A[i][col];
            for (size_t j = col; j < ncols; ++j) A[i][j] -= f * A[row][j];
        }
        pivots.push_back(static_cast<long>(col));
        ++row;
    }
    return pivots;
}

}  // namespace

size_t rational_rank(RatMatrix A) {
    if (A.empty()) return 0;
    return rref(A, A[0].size()).size();
}

RatMatrix rational_kernel(const RatMatrix& A_in, size_t ncols) {
    RatMatrix A = A_in;
    for (auto& row : A) row.resize(ncols, Rat(0));
    std::vector<long> pivots = rref(A, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (long p : pivots) is_pivot[p] = true;
    RatMatrix basis;
    for (size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(ncols, Rat(0));
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -A[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

IntMatrix integer_kernel(const IntMatrix& A_in, size_t ncols) {
    IntMatrix A = A_in;
    for (auto& row : A) row.resize(ncols, Int(0));
    const size_t r = A.size();
    // U tracks the unimodular column operations; kernel columns of the
    // echelonized A correspond to columns of U.
    IntMatrix U(ncols, std::vector<Int>(ncols, Int(0)));
    for (size_t i = 0; i < ncols; ++i) U[i][i] = 1;

    auto col_sub = [&](size_t dst, size_t src, const Int& q) {
        // column dst -= q * column src
        for (size_t i = 0; i < r; ++i) A[i][dst] -= q * A[i][src];
        for (size_t i = 0; i < ncols; ++i) U[i][dst] -= q * U[i][src];
    };
    auto col_swap = [&](size_t a, size_t b) {
        for (size_t i = 0; i < r; ++i) std::swap(A[i][a], A[i][b]);
        for (size_t i = 0; i < ncols; ++i) std::swap(U[i][a], U[i][b]);
    };

    size_t col_pos = 0;
    for (size_t row = 0; row < r && col_pos < ncols; ++row) {
        // Euclid over the entries A[row][col_pos..]: reduce to one nonzero
        while (true) {
            size_t jmin = ncols;
            for (size_t j = col_pos; j < ncols; ++j) {
                if (A[row][j] == 0) continue;
                if (jmin == ncols || abs(A[row][j]) < abs(A[row][jmin])) jmin = j;
            }
            if (jmin == ncols) break;  // row already zero on the tail
            bool others = false;
            for (size_t j = col_pos; j < ncols; ++j) {
                if (j == jmin || A[row][j] == 0) continue;
                Int q = A[row][j] / A[row][jmin];  // truncated division
                if (q != 0) col_sub(j, jmin, q);
                if (A[row][j] != 0) others = true;
            }
            if (!others) {
                col_swap(col_pos, jmin);
                ++col_pos;
                break;
            }
        }
    }
    IntMatrix kernel;
    for (size_t j = col_pos; j < ncols; ++j) {
        std::vector<Int> v(ncols);
        for (size_t i = 0; i < ncols; ++i) v[i] = U[i][j];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

namespace {

Rat dotr(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

IntMatrix lll_reduce(IntMatrix B) {
    const size_t n = B.size();
    if (n <= 1) return B;
    const size_t dim = B[0].size();
    const Rat delta = make_rat(99, 100);

    std::vector<std::vector<Rat>> star(n, std::vector<Rat>(dim));
    std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n, Rat(0)));
    std::vector<Rat> Bn(n, Rat(0));

    auto gram_schmidt = [&]() {
        for (size_t i = 0; i < n; ++i) {
            for (size_t d = 0; d < dim; ++d) star[i][d] = Rat(B[i][d]);
            for (size_t j = 0; j < i; ++j) {
                std::vector<Rat> bi(dim);
                for (size_t d = 0; d < dim; ++d) bi[d] = Rat(B[i][d]);
                mu[i][j] = Bn[j] == 0 ? Rat(0) : dotr(bi, star[j]) / Bn[j];
                for (size_t d = 0; d < dim; ++d)
                    star[i][d] -= mu[i][j] * star[j][d];
            }
            Bn[i] = dotr(star[i], star[i]);
        }
    };
    gram_schmidt();

    auto size_reduce = [&](size_t k, size_t j) {
        Rat m = mu[k][j];
        Rat half = make_rat(1, 2);
        if (m > half || m < -half) {
            // nearest integer
            Int q;
            Rat shifted = m + half;
            mpz_fdiv_q(q.get_mpz_t(), num(shifted).get_mpz_t(),
                       den(shifted).get_mpz_t());
            for (size_t d = 0; d < dim; ++d) B[k][d] -= q * B[j][d];
            gram_schmidt();
        }
    };

    size_t k = 1;
    size_t guard = 0, guard_max = 10000;
    while (k < n && guard++ < guard_max) {
        size_reduce(k, k - 1);
        if (Bn[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * Bn[k - 1]) {
            for (size_t j = k >= 2 ? k - 2 : 0; j + 1 >= 1; --j) {
                size_reduce(k, j);
                if (j == 0) break;
            }
            ++k;
        } else {
            std::swap(B[k], B[k - 1]);
            gram_schmidt();
            k = std::max<size_t>(k - 1, 1);
        }
    }
    return B;
}

std::vector<Int> primitive_vector(const std::vector<Rat>& v) {
    Int L(1);
    for (auto& q : v) L = lcm(L, den(q));
    std::vector<Int> w(v.size());
    Int g(0);
    int sign = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        w[i] = num(v[i]) * (L / den(v[i]));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
        if (sign == 0 && w[i] != 0) sign = sgn(w[i]);
    }
    if (g == 0) return w;
    if (sign < 0) g = -g;
    for (auto& x : w) x /= g;
    return w;
}

}  // namespace hl
