#include "heightlab/resultant.hpp"

#include <stdexcept>

namespace hl {

namespace {

/// Determinant of a square integer matrix by Bareiss fraction-free
/// elimination. Exact divisions throughout.
Int bareiss_det(std::vector<std::vector<Int>> a) {
    const size_t n = a.size();
    if (n == 0) return Int(1);
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

Int sylvester_resultant(const IntPoly& f, const IntPoly& g) {
    const long n1 = f.degree(), n2 = g.degree();
    if (f.is_zero() || g.is_zero()) return Int(0);
    if (n1 == 0 && n2 == 0) return Int(1);
    if (n1 == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), f.coeff(0).get_mpz_t(), n2);
        return r;
    }
    if (n2 == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), g.coeff(0).get_mpz_t(), n1);
        return r;
    }
    const long s = n1 + n2;
    std::vector<std::vector<Int>> m(s, std::vector<Int>(s, Int(0)));
    for (long r = 0; r < n2; ++r)
        for (long i = 0; i <= n1; ++i) m[r][r + i] = f.coeff(n1 - i);
    for (long r = 0; r < n1; ++r)
        for (long i = 0; i <= n2; ++i) m[n2 + r][r + i] = g.coeff(n2 - i);
    return bareiss_det(std::move(m));
}

Rat pow_rat(const Rat& q, unsigned long e) {
    Rat r(1);
    for (unsigned long i = 0; i < e; ++i) r *= q;
    return r;
}

}  // namespace

Int resultant(const IntPoly& f, const IntPoly& g) {
    return sylvester_resultant(f, g);
}

RatPoly resultant_y(const BivarPoly& F, const BivarPoly& G) {
    const long n1 = F.deg_y(), n2 = G.deg_y();
    if (F.is_zero() || G.is_zero())
        throw std::domain_error("resultant of zero polynomial");
    if (n1 <= 0 && n2 <= 0)
        throw std::domain_error("no variable to eliminate");
    const Rat scale_factor =
        pow_rat(F.scale(), std::max<long>(n2, 0)) * pow_rat(G.scale(), std::max<long>(n1, 0));
    if (n2 == 0) {
        // Res_Y(F, g(X)) = g(X)^{deg_Y F}
        RatPoly g = G.y_coeff(0).to_rat();
        RatPoly r = RatPoly::constant(Rat(1));
        for (long i = 0; i < n1; ++i) r = r * g;
        return r * scale_factor;
    }
    if (n1 == 0) {
        RatPoly f = F.y_coeff(0).to_rat();
        RatPoly r = RatPoly::constant(Rat(1));
        for (long i = 0; i < n2; ++i) r = r * f;
        return r * scale_factor;
    }

    // Evaluation-interpolation on the integer grids. Degree bound for
    // Res_Y(F, G) in X:
    const long dbound = F.deg_x() * n2 + G.deg_x() * n1;
    const IntPoly lead_f = F.y_coeff(n1), lead_g = G.y_coeff(n2);

    std::vector<Rat> xs;
    std::vector<Int> vals;
    for (long t = 0; static_cast<long>(xs.size()) <= dbound; ++t) {
        // 0, 1, -1, 2, -2, ...
        long x0 = (t % 2 == 0) ? t / 2 : -(t / 2 + 1);
        Int xi(x0);
        if (lead_f.eval(xi) == 0 || lead_g.eval(xi) == 0) continue;
        std::vector<Int> fc(n1 + 1), gc(n2 + 1);
        for (long j = 0; j <= n1; ++j) fc[j] = F.y_coeff(j).eval(xi);
        for (long j = 0; j <= n2; ++j) gc[j] = G.y_coeff(j).eval(xi);
        xs.emplace_back(xi);
        vals.push_back(sylvester_resultant(IntPoly(std::move(fc)), IntPoly(std::move(gc))));
    }

    // Lagrange interpolation over Q.
    RatPoly acc;
    for (size_t i = 0; i < xs.size(); ++i) {
        RatPoly basis = RatPoly::constant(Rat(1));
        Rat denom(1);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = basis * RatPoly({-xs[j], Rat(1)});
            denom *= xs[i] - xs[j];
        }
        acc = acc + basis * (Rat(vals[i]) / denom);
    }
    return acc * scale_factor;
}

RatPoly y_discriminant_resultant(const BivarPoly& F) {
    BivarPoly dF = F.derivative_y();
    if (dF.is_zero())
        throw std::domain_error("no variable to eliminate");
    return resultant_y(F, dF);
}

}  // namespace hl
