#include "heightlab/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace hl {

namespace {

/// Minimal complex arithmetic over mpfr at a fixed precision, rounding to
/// nearest. Only used to drive the Aberth iteration; all certification is
/// done afterwards in exact rational arithmetic.
struct Cx {
    mpfr_t re, im;
    explicit Cx(mpfr_prec_t p) {
        mpfr_init2(re, p);
        mpfr_init2(im, p);
        mpfr_set_zero(re, 1);
        mpfr_set_zero(im, 1);
    }
    Cx(const Cx& o) {
        mpfr_init2(re, mpfr_get_prec(o.re));
        mpfr_init2(im, mpfr_get_prec(o.im));
        mpfr_set(re, o.re, MPFR_RNDN);
        mpfr_set(im, o.im, MPFR_RNDN);
    }
    Cx& operator=(const Cx& o) {
        mpfr_set(re, o.re, MPFR_RNDN);
        mpfr_set(im, o.im, MPFR_RNDN);
        return *this;
    }
    ~Cx() {
        mpfr_clear(re);
        mpfr_clear(im);
    }
};

void cx_add(Cx& r, const Cx& a, const Cx& b) {
    mpfr_add(r.re, a.re, b.re, MPFR_RNDN);
    mpfr_add(r.im, a.im, b.im, MPFR_RNDN);
}
void cx_sub(Cx& r, const Cx& a, const Cx& b) {
    mpfr_sub(r.re, a.re, b.re, MPFR_RNDN);
    mpfr_sub(r.im, a.im, b.im, MPFR_RNDN);
}
void cx_mul(Cx& r, const Cx& a, const Cx& b, mpfr_t t1, mpfr_t t2) {
    // r may not alias a or b
    mpfr_mul(t1, a.re, b.re, MPFR_RNDN);
    mpfr_mul(t2, a.im, b.im, MPFR_RNDN);
    mpfr_sub(t1, t1, t2, MPFR_RNDN);
    mpfr_mul(t2, a.re, b.im, MPFR_RNDN);
    mpfr_set(r.re, t1, MPFR_RNDN);
    mpfr_mul(t1, a.im, b.re, MPFR_RNDN);
    mpfr_add(r.im, t1, t2, MPFR_RNDN);
}
void cx_div(Cx& r, const Cx& a, const Cx& b, mpfr_t t1, mpfr_t t2, mpfr_t d) {
    mpfr_mul(t1, b.re, b.re, MPFR_RNDN);
    mpfr_mul(t2, b.im, b.im, MPFR_RNDN);
    mpfr_add(d, t1, t2, MPFR_RNDN);
    // re = (a.re b.re + a.im b.im)/d
    mpfr_mul(t1, a.re, b.re, MPFR_RNDN);
    mpfr_mul(t2, a.im, b.im, MPFR_RNDN);
    mpfr_add(t1, t1, t2, MPFR_RNDN);
    mpfr_div(t1, t1, d, MPFR_RNDN);
    // im = (a.im b.re - a.re b.im)/d
    mpfr_mul(t2, a.im, b.re, MPFR_RNDN);
    mpfr_set(r.re, t1, MPFR_RNDN);
    mpfr_mul(t1, a.re, b.im, MPFR_RNDN);
    mpfr_sub(t2, t2, t1, MPFR_RNDN);
    mpfr_div(r.im, t2, d, MPFR_RNDN);
}

/// Run Aberth-Ehrlich at the given precision; returns approximations.
std::vector<Cx> aberth(const IntPoly& f, mpfr_prec_t prec) {
    const long n = f.degree();
    std::vector<Cx> coef, dcoef;
    coef.reserve(n + 1);
    for (long i = 0; i <= n; ++i) {
        Cx c(prec);
        mpfr_set_z(c.re, f.coeff(i).get_mpz_t(), MPFR_RNDN);
        coef.push_back(c);
    }
    IntPoly fd = f.derivative();
    for (long i = 0; i < n; ++i) {
        Cx c(prec);
        mpfr_set_z(c.re, fd.coeff(i).get_mpz_t(), MPFR_RNDN);
        dcoef.push_back(c);
    }

    // initial guesses on a circle of radius 1 + max|a_i|/|a_n|, scaled down
    mpfr_t R, t1, t2, d, ang;
    mpfr_inits2(prec, R, t1, t2, d, ang, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_ui(R, 0, MPFR_RNDN);
    for (long i = 0; i < n; ++i) {
        mpfr_abs(t1, coef[i].re, MPFR_RNDN);
        if (mpfr_cmp(t1, R) > 0) mpfr_set(R, t1, MPFR_RNDN);
    }
    mpfr_abs(t1, coef[n].re, MPFR_RNDN);
    mpfr_div(R, R, t1, MPFR_RNDN);
    mpfr_add_ui(R, R, 1, MPFR_RNDN);
    mpfr_mul_d(R, R, 0.7, MPFR_RNDN);

    std::vector<Cx> z(n, Cx(prec));
    for (long i = 0; i < n; ++i) {
        mpfr_const_pi(ang, MPFR_RNDN);
        mpfr_mul_si(ang, ang, 2 * i, MPFR_RNDN);
        mpfr_div_ui(ang, ang, static_cast<unsigned long>(n), MPFR_RNDN);
        mpfr_add_d(ang, ang, 0.4, MPFR_RNDN);  // irrational-ish offset
        mpfr_cos(t1, ang, MPFR_RNDN);
        mpfr_sin(t2, ang, MPFR_RNDN);
        mpfr_mul(z[i].re, R, t1, MPFR_RNDN);
        mpfr_mul(z[i].im, R, t2, MPFR_RNDN);
    }

    auto eval = [&](const std::vector<Cx>& cs, const Cx& x, Cx& out) {
        Cx acc(prec), tmp(prec);
        for (long i = static_cast<long>(cs.size()) - 1; i >= 0; --i) {
            cx_mul(tmp, acc, x, t1, t2);
            cx_add(acc, tmp, cs[i]);
        }
        out = acc;
    };

    const long max_iter = 60 + 4 * static_cast<long>(mpfr_get_exp(R) > 0 ? 1 : 1) +
                          2 * prec / 10;
    mpfr_t eps;
    mpfr_init2(eps, prec);
    mpfr_set_ui_2exp(eps, 1, -(prec - prec / 8), MPFR_RNDN);

    for (long it = 0; it < max_iter; ++it) {
        bool moved = false;
        for (long i = 0; i < n; ++i) {
            Cx fv(prec), dv(prec), w(prec), s(prec), diff(prec), inv(prec),
                corr(prec), one(prec);
            eval(coef, z[i], fv);
            eval(dcoef, z[i], dv);
            if (mpfr_zero_p(dv.re) && mpfr_zero_p(dv.im)) {
                // nudge off a critical point
                mpfr_add(z[i].re, z[i].re, eps, MPFR_RNDN);
                moved = true;
                continue;
            }
            cx_div(w, fv, dv, t1, t2, d);
            for (long j = 0; j < n; ++j) {
                if (j == i) continue;
                cx_sub(diff, z[i], z[j]);
                if (mpfr_zero_p(diff.re) && mpfr_zero_p(diff.im)) continue;
                mpfr_set_ui(one.re, 1, MPFR_RNDN);
                mpfr_set_zero(one.im, 1);
                cx_div(inv, one, diff, t1, t2, d);
                cx_add(s, s, inv);
            }
            Cx ws(prec), den(prec);
            cx_mul(ws, w, s, t1, t2);
            mpfr_ui_sub(den.re, 1, ws.re, MPFR_RNDN);
            mpfr_neg(den.im, ws.im, MPFR_RNDN);
            if (mpfr_zero_p(den.re) && mpfr_zero_p(den.im)) {
                corr = w;
            } else {
                cx_div(corr, w, den, t1, t2, d);
            }
            cx_sub(z[i], z[i], corr);
            mpfr_abs(t1, corr.re, MPFR_RNDN);
            mpfr_abs(t2, corr.im, MPFR_RNDN);
            mpfr_add(t1, t1, t2, MPFR_RNDN);
            if (mpfr_cmp(t1, eps) > 0) moved = true;
        }
        if (!moved) break;
    }
    mpfr_clears(R, t1, t2, d, ang, eps, static_cast<mpfr_ptr>(nullptr));
    return z;
}

Rat mpfr_to_rat(const mpfr_t x) {
    if (!mpfr_number_p(x)) throw std::runtime_error("non-finite root iterate");
    Rat q;
    mpfr_get_q(q.get_mpq_t(), x);
    return q;
}

/// Rational upper bound for sqrt(q), q >= 0.
Rat sqrt_upper(const Rat& q) {
    if (q == 0) return Rat(0);
    mpfr_t t;
    mpfr_init2(t, 128);
    mpfr_set_q(t, q.get_mpq_t(), MPFR_RNDU);
    mpfr_sqrt(t, t, MPFR_RNDU);
    mpfr_nextabove(t);
    Rat r = mpfr_to_rat(t);
    mpfr_clear(t);
    return r;
}

struct CRat {
    Rat re, im;
};

CRat eval_crat(const IntPoly& f, const CRat& z) {
    CRat acc{Rat(0), Rat(0)};
    for (long i = f.degree(); i >= 0; --i) {
        Rat nre = acc.re * z.re - acc.im * z.im + Rat(f.coeff(i));
        Rat nim = acc.re * z.im + acc.im * z.re;
        acc = {nre, nim};
    }
    return acc;
}

/// Truncate a rational to a dyadic with about `bits` fractional bits, to keep
/// the exact certification arithmetic small.
Rat dyadic_truncate(const Rat& q, long bits) {
    Int scaled;
    Rat s = q;
    mpq_mul_2exp(s.get_mpq_t(), s.get_mpq_t(), static_cast<unsigned long>(bits));
    Int n = num(s), d = den(s);
    Int t = n / d;  // truncation toward zero is fine
    Rat r(t);
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(bits));
    return r;
}

}  // namespace

Rat default_root_tol() {
    Rat t(1);
    mpq_div_2exp(t.get_mpq_t(), t.get_mpq_t(), 80);
    return t;
}

RealInterval CertifiedRootBox::abs_interval(mpfr_prec_t prec) const {
    RealInterval r2 = RealInterval::exact(re * re + im * im, prec).sqrt();
    RealInterval rad = RealInterval::exact(radius, prec);
    RealInterval lo = r2 - rad;
    RealInterval zero = RealInterval::zero(prec);
    return RealInterval::hull(RealInterval::max(zero, lo), r2 + rad);
}

bool CertifiedRootBox::excludes_zero() const {
    return re * re + im * im > radius * radius;
}

RealInterval CertifiedRootBox::log_abs_interval(mpfr_prec_t prec) const {
    if (!excludes_zero())
        throw std::domain_error("log|z| of a disc containing 0");
    return abs_interval(prec).log();
}

std::vector<CertifiedRootBox> complex_roots(const IntPoly& f_in, const Rat& tol,
                                            mpfr_prec_t prec_cap) {
    IntPoly f = f_in.primitive_part();
    if (f.degree() < 1) throw std::domain_error("complex_roots: degree < 1");
    if (!is_squarefree(f)) throw std::domain_error("complex_roots: not squarefree");

    std::vector<CertifiedRootBox> out;
    if (f.order_at_zero() > 0) {
        out.push_back({Rat(0), Rat(0), Rat(0)});
        std::vector<Int> c(f.coeffs().begin() + 1, f.coeffs().end());
        f = IntPoly(std::move(c));
        if (f.degree() < 1) {
            return out;
        }
    }
    if (f.degree() == 1) {
        out.push_back({make_rat(-f.coeff(0), f.coeff(1)), Rat(0), Rat(0)});
        return out;
    }

    const long n = f.degree();
    IntPoly fd = f.derivative();
    for (mpfr_prec_t prec = 128; prec <= prec_cap; prec *= 2) {
        std::vector<Cx> zs = aberth(f, prec);
        std::vector<CertifiedRootBox> boxes;
        bool ok = true;
        for (long i = 0; i < n && ok; ++i) {
            CRat z{dyadic_truncate(mpfr_to_rat(zs[i].re), prec),
                   dyadic_truncate(mpfr_to_rat(zs[i].im), prec)};
            CRat fv = eval_crat(f, z);
            CRat dv = eval_crat(fd, z);
            Rat d2 = dv.re * dv.re + dv.im * dv.im;
            if (d2 == 0) {
                ok = false;
                break;
            }
            Rat f2 = fv.re * fv.re + fv.im * fv.im;
            Rat rad = sqrt_upper(Rat(n * n) * f2 / d2);
            if (rad > tol) {
                ok = false;
                break;
            }
            boxes.push_back({z.re, z.im, rad});
        }
        if (ok) {
            // pairwise disjointness makes the isolation exact
            for (size_t i = 0; i < boxes.size() && ok; ++i)
                for (size_t j = i + 1; j < boxes.size() && ok; ++j) {
                    Rat dx = boxes[i].re - boxes[j].re;
                    Rat dy = boxes[i].im - boxes[j].im;
                    Rat rr = boxes[i].radius + boxes[j].radius;
                    if (dx * dx + dy * dy <= rr * rr) ok = false;
                }
            // a disc overlapping an exact zero root must also be rejected
            if (ok && !out.empty())
                for (const auto& b : boxes)
                    if (b.re * b.re + b.im * b.im <= b.radius * b.radius) ok = false;
        }
        if (ok) {
            for (auto& b : boxes) out.push_back(std::move(b));
            std::sort(out.begin(), out.end(),
                      [](const CertifiedRootBox& a, const CertifiedRootBox& b) {
                          if (a.re != b.re) return a.re < b.re;
                          return a.im < b.im;
                      });
            return out;
        }
    }
    throw PrecisionExhausted("complex root isolation");
}

}  // namespace hl
