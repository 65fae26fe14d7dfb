#include "heightlab/heights.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "heightlab/newton_polygon.hpp"

namespace hl {

namespace {

RealInterval log_plus_rat(const Rat& a, mpfr_prec_t prec) {
    // log+ |a|, exact input
    Rat q = abs(a);
    if (q <= 1) return RealInterval::zero(prec);
    return RealInterval::log_of(q, prec);
}

RealInterval assemble_total(const RealInterval& arch,
                            const std::map<Int, Rat>& nonarch, mpfr_prec_t prec) {
    RealInterval t = arch;
    for (auto& [p, c] : nonarch) {
        if (c == 0) continue;
        t += RealInterval::exact(c, prec) * RealInterval::log_of(Rat(p), prec);
    }
    return t;
}

}  // namespace

HeightBreakdown height_rational(const Rat& a, mpfr_prec_t prec) {
    HeightBreakdown hb;
    hb.archimedean = log_plus_rat(a, prec);
    if (a != 0)
        for (auto& [p, e] : factorize(den(a))) hb.nonarch[p] = Rat(e);
    hb.total = assemble_total(hb.archimedean, hb.nonarch, prec);
    return hb;
}

HeightBreakdown height_algebraic(const AlgebraicNumber& b, HeightRoute route,
                                 mpfr_prec_t prec) {
    const IntPoly& f = b.minpoly;
    if (f.degree() < 1) throw std::domain_error("empty minimal polynomial");
    const long d = f.degree();
    const Rat wd = make_rat(1, d);
    HeightBreakdown hb;

    if (route == HeightRoute::mahler) {
        // Gauss lemma: sum of max(0, -val) over roots equals v_p(lead) for a
        // primitive polynomial.
        for (auto& [p, e] : factorize(f.lead()))
            if (p > 1) hb.nonarch[p] = Rat(e) * wd;
        // archimedean: (1/d) log prod max(1, |root|); the |lead|_infty factor
        // of the Mahler measure is exactly the sum of the nonarch parts above
        RealInterval prod = RealInterval::exact(1, prec);
        for (auto& box : complex_roots(f, default_root_tol())) {
            RealInterval m =
                RealInterval::max(RealInterval::exact(1, prec), box.abs_interval(prec));
            prod *= m;
        }
        hb.archimedean = prod.log() * RealInterval::exact(wd, prec);
    } else {
        for (auto& p : relevant_primes(f, Rat(0))) {
            Rat s(0);
            for (auto& [val, mult] : padic_root_valuations(f, p))
                if (val < 0) s += -val * Rat(mult);
            if (s != 0) hb.nonarch[p] = s * wd;
        }
        RealInterval sum = RealInterval::zero(prec);
        for (auto& box : complex_roots(f, default_root_tol())) {
            RealInterval m =
                RealInterval::max(RealInterval::exact(1, prec), box.abs_interval(prec));
            sum += m.log();
        }
        hb.archimedean = sum * RealInterval::exact(wd, prec);
    }
    hb.total = assemble_total(hb.archimedean, hb.nonarch, prec);
    return hb;
}

RealInterval lgcd(const Rat& a, const AlgebraicNumber& b, mpfr_prec_t prec) {
    const IntPoly& f = b.minpoly;
    if (f.degree() < 1) throw std::domain_error("empty minimal polynomial");
    const long d = f.degree();
    const bool a_zero = (a == 0);
    const long zero_roots = f.order_at_zero();  // roots equal to 0 (0 or 1)
    if (a_zero && f == IntPoly::x())
        throw std::domain_error("lgcd(0, 0) undefined");

    // nonarchimedean slots: one per root, weight 1/d
    std::map<Int, Rat> nonarch;
    std::set<Int> primes;
    for (auto& p : relevant_primes(f, a)) primes.insert(p);
    for (auto& p : primes) {
        // smallness exponent of alpha at p (infinite if a == 0)
        Rat sa = a_zero ? Rat(0) : Rat(std::max<long>(0, vp(a, p)));
        Rat acc(0);
        for (auto& [val, mult] : padic_root_valuations(f, p)) {
            Rat sb = val > 0 ? val : Rat(0);
            Rat m = a_zero ? sb : (sa < sb ? sa : sb);
            acc += m * Rat(mult);
        }
        // zero roots: beta-side smallness infinite, min = alpha side
        if (zero_roots > 0 && !a_zero) acc += sa * Rat(zero_roots);
        if (acc != 0) nonarch[p] = acc * make_rat(1, d);
    }

    // archimedean slots: one per embedding, weight 1/d
    RealInterval sa_arch =
        a_zero ? RealInterval::zero(prec) : log_plus_rat(make_rat(den(a), abs(num(a)) == 0 ? Int(1) : Int(abs(num(a)))), prec);
    RealInterval arch = RealInterval::zero(prec);
    for (auto& box : complex_roots(f, default_root_tol())) {
        RealInterval sb;
        if (box.contains_origin_center()) {
            // beta = 0 exactly: infinitely small, min picks the alpha side
            if (a_zero) throw std::domain_error("lgcd(0, 0) undefined");
            sb = sa_arch;
        } else {
            RealInterval la = box.log_abs_interval(prec);
            sb = RealInterval::max(RealInterval::zero(prec), -la);
            if (!a_zero) sb = RealInterval::min(sa_arch, sb);
        }
        arch += sb;
    }
    arch *= RealInterval::exact(make_rat(1, d), prec);

    return assemble_total(arch, nonarch, prec);
}

RealInterval lgcd(const Rat& a, const Rat& b, mpfr_prec_t prec) {
    return lgcd(a, AlgebraicNumber::from_rational(b), prec);
}

RealInterval height_vector(const std::vector<Rat>& v, VectorHeightKind kind,
                           mpfr_prec_t prec) {
    if (v.empty()) throw std::domain_error("height of empty vector");
    bool all_zero = std::all_of(v.begin(), v.end(),
                                [](const Rat& q) { return q == 0; });
    if (kind == VectorHeightKind::affine) {
        if (all_zero) return RealInterval::zero(prec);
        Rat maxabs(0);
        Int L(1);
        for (auto& q : v) {
            Rat aq = abs(q);
            if (aq > maxabs) maxabs = aq;
            L = lcm(L, den(q));
        }
        RealInterval arch = log_plus_rat(maxabs, prec);
        return arch + (L == 1 ? RealInterval::zero(prec)
                              : RealInterval::log_of(Rat(L), prec));
    }
    if (all_zero) throw std::domain_error("height of zero vector");
    // normalize to a coprime integer vector
    Int L(1);
    for (auto& q : v) L = lcm(L, den(q));
    std::vector<Int> w(v.size());
    Int g(0);
    for (size_t i = 0; i < v.size(); ++i) {
        w[i] = num(v[i]) * (L / den(v[i]));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
    }
    for (auto& x : w) x /= g;
    if (kind == VectorHeightKind::projective) {
        Int m(0);
        for (auto& x : w) {
            Int ax = abs(x);
            if (ax > m) m = ax;
        }
        return m == 1 ? RealInterval::zero(prec)
                      : RealInterval::log_of(Rat(m), prec);
    }
    // euclidean: (1/2) log sum of squares
    Int s(0);
    for (auto& x : w) s += x * x;
    return RealInterval::log_of(Rat(s), prec) * RealInterval::exact(make_rat(1, 2), prec);
}

RealInterval height_poly(const BivarPoly& F, PolyHeightKind kind,
                         mpfr_prec_t prec) {
    if (F.is_zero()) throw std::domain_error("height of zero polynomial");
    if (kind == PolyHeightKind::projective) {
        Int m(0);
        for (auto& c : F.nonzero_int_coeffs()) {
            Int ac = abs(c);
            if (ac > m) m = ac;
        }
        return m == 1 ? RealInterval::zero(prec)
                      : RealInterval::log_of(Rat(m), prec);
    }
    return height_vector(F.nonzero_coeffs(), VectorHeightKind::affine, prec);
}

RealInterval height_poly(const IntPoly& f, PolyHeightKind kind,
                         mpfr_prec_t prec) {
    if (f.is_zero()) throw std::domain_error("height of zero polynomial");
    std::vector<Rat> v;
    for (auto& c : f.coeffs())
        if (c != 0) v.emplace_back(c);
    if (kind == PolyHeightKind::projective)
        return height_vector(v, VectorHeightKind::projective, prec);
    return height_vector(v, VectorHeightKind::affine, prec);
}

RealInterval height_poly(const RatPoly& f, PolyHeightKind kind,
                         mpfr_prec_t prec) {
    if (f.is_zero()) throw std::domain_error("height of zero polynomial");
    std::vector<Rat> v;
    for (auto& c : f.coeffs())
        if (c != 0) v.push_back(c);
    if (kind == PolyHeightKind::projective)
        return height_vector(v, VectorHeightKind::projective, prec);
    return height_vector(v, VectorHeightKind::affine, prec);
}

}  // namespace hl
