#include "heightlab/factor.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace hl {

namespace {

// ---------- arithmetic in F_p[x], p a small odd prime ----------

long mod_inv(long a, long p) {
    long t = 0, nt = 1, r = p, nr = a % p;
    if (nr < 0) nr += p;
    while (nr != 0) {
        long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (t < 0) t += p;
    return t;
}

struct ModPoly {
    long p;
    std::vector<long> c;  // index = degree, coefficients in [0, p)

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    long deg() const { return static_cast<long>(c.size()) - 1; }
    bool zero() const { return c.empty(); }
    long lead() const { return c.back(); }
};

long mulmod(long a, long b, long p) {
    return static_cast<long>(static_cast<__int128>(a) * b % p);
}

ModPoly mp_from_int(const IntPoly& f, long p) {
    ModPoly r{p, {}};
    r.c.resize(f.coeffs().size());
    for (size_t i = 0; i < r.c.size(); ++i) {
        Int m = f.coeffs()[i] % p;
        long v = m.get_si();
        if (v < 0) v += p;
        r.c[i] = v;
    }
    r.trim();
    return r;
}

ModPoly mp_x(long p) { return ModPoly{p, {0, 1}}; }

ModPoly mp_sub(const ModPoly& a, const ModPoly& b) {
    ModPoly r{a.p, {}};
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = (r.c[i] - b.c[i] + a.p) % a.p;
    r.trim();
    return r;
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b) {
    ModPoly r{a.p, {}};
    if (a.zero() || b.zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = (r.c[i + j] + mulmod(a.c[i], b.c[j], a.p)) % a.p;
    r.trim();
    return r;
}

ModPoly mp_scale(const ModPoly& a, long s) {
    ModPoly r = a;
    for (auto& v : r.c) v = mulmod(v, s, a.p);
    r.trim();
    return r;
}

// division by arbitrary nonzero divisor
std::pair<ModPoly, ModPoly> mp_divmod(const ModPoly& a, const ModPoly& d) {
    ModPoly r = a, q{a.p, {}};
    if (d.zero()) throw std::domain_error("mod-p division by zero");
    long li = mod_inv(d.lead(), a.p);
    if (a.deg() >= d.deg()) q.c.assign(a.deg() - d.deg() + 1, 0);
    while (!r.zero() && r.deg() >= d.deg()) {
        long f = mulmod(r.lead(), li, a.p);
        long sh = r.deg() - d.deg();
        q.c[sh] = f;
        for (size_t i = 0; i < d.c.size(); ++i) {
            long& t = r.c[i + sh];
            t = (t - mulmod(f, d.c[i], a.p) % a.p + a.p) % a.p;
        }
        r.trim();
    }
    q.trim();
    return {q, r};
}

ModPoly mp_mod(const ModPoly& a, const ModPoly& d) { return mp_divmod(a, d).second; }

ModPoly mp_monic(const ModPoly& a) {
    if (a.zero()) return a;
    return mp_scale(a, mod_inv(a.lead(), a.p));
}

ModPoly mp_gcd(ModPoly a, ModPoly b) {
    while (!b.zero()) {
        ModPoly r = mp_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return mp_monic(a);
}

ModPoly mp_powmod(ModPoly base, Int e, const ModPoly& m) {
    ModPoly r{base.p, {1}};
    base = mp_mod(base, m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = mp_mod(mp_mul(r, base), m);
        base = mp_mod(mp_mul(base, base), m);
        e >>= 1;
    }
    return r;
}

// deterministic small RNG for equal-degree splitting
struct SplitRng {
    unsigned long s = 0x9E3779B97F4A7C15UL;
    unsigned long next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
};

void equal_degree_split(const ModPoly& f, long d, std::vector<ModPoly>& out,
                        SplitRng& rng) {
    if (f.deg() == d) {
        out.push_back(f);
        return;
    }
    const long p = f.p;
    Int e;
    mpz_ui_pow_ui(e.get_mpz_t(), p, d);
    e = (e - 1) / 2;
    while (true) {
        ModPoly r{p, {}};
        r.c.resize(f.deg(), 0);
        for (auto& v : r.c) v = static_cast<long>(rng.next() % p);
        r.trim();
        if (r.deg() < 1) continue;
        ModPoly g = mp_gcd(r, f);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            equal_degree_split(g, d, out, rng);
            equal_degree_split(mp_divmod(f, g).first, d, out, rng);
            return;
        }
        ModPoly w = mp_powmod(r, e, f);
        w.c.resize(std::max<size_t>(w.c.size(), 1), 0);
        w.c[0] = (w.c[0] + p - 1) % p;  // w - 1
        w.trim();
        g = mp_gcd(w, f);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            equal_degree_split(g, d, out, rng);
            equal_degree_split(mp_divmod(f, g).first, d, out, rng);
            return;
        }
    }
}

/// Factor a monic squarefree polynomial over F_p into monic irreducibles.
std::vector<ModPoly> mp_factor_squarefree(const ModPoly& f0) {
    std::vector<ModPoly> out;
    ModPoly f = mp_monic(f0);
    const long p = f.p;
    SplitRng rng;
    ModPoly h = mp_x(p);  // x^{p^d} mod f, incrementally
    ModPoly v = f;
    long d = 0;
    while (v.deg() > 2 * (d + 1) - 1 && v.deg() > 0) {
        ++d;
        h = mp_powmod(h, Int(p), v);
        ModPoly g = mp_gcd(mp_sub(h, mp_x(p)), v);
        if (g.deg() > 0) {
            equal_degree_split(g, d, out, rng);
            v = mp_divmod(v, g).first;
            h = mp_mod(h, v);
        }
    }
    if (v.deg() > 0) out.push_back(mp_monic(v));
    std::sort(out.begin(), out.end(), [](const ModPoly& a, const ModPoly& b) {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        return a.c < b.c;
    });
    return out;
}

// ---------- arithmetic in (Z/m)[x], m = p^k ----------

struct ZmPoly {
    Int m;
    std::vector<Int> c;

    void reduce() {
        for (auto& v : c) {
            v %= m;
            if (v < 0) v += m;
        }
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    long deg() const { return static_cast<long>(c.size()) - 1; }
    bool zero() const { return c.empty(); }
};

ZmPoly zm_from_int(const IntPoly& f, const Int& m) {
    ZmPoly r{m, f.coeffs()};
    r.reduce();
    return r;
}

ZmPoly zm_from_mod(const ModPoly& f, const Int& m) {
    ZmPoly r{m, {}};
    r.c.reserve(f.c.size());
    for (long v : f.c) r.c.emplace_back(v);
    r.reduce();
    return r;
}

ZmPoly zm_add(const ZmPoly& a, const ZmPoly& b) {
    ZmPoly r{a.m, {}};
    r.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.reduce();
    return r;
}

ZmPoly zm_sub(const ZmPoly& a, const ZmPoly& b) {
    ZmPoly r{a.m, {}};
    r.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.reduce();
    return r;
}

ZmPoly zm_mul(const ZmPoly& a, const ZmPoly& b) {
    ZmPoly r{a.m, {}};
    if (a.zero() || b.zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.reduce();
    return r;
}

/// Division by a divisor whose leading coefficient is invertible mod m.
std::pair<ZmPoly, ZmPoly> zm_divmod(const ZmPoly& a, const ZmPoly& d) {
    if (d.zero()) throw std::domain_error("zm division by zero");
    Int li;
    if (mpz_invert(li.get_mpz_t(), d.c.back().get_mpz_t(), a.m.get_mpz_t()) == 0)
        throw std::domain_error("zm division: leading coefficient not invertible");
    ZmPoly r = a, q{a.m, {}};
    if (a.deg() >= d.deg()) q.c.assign(a.deg() - d.deg() + 1, Int(0));
    while (!r.zero() && r.deg() >= d.deg()) {
        Int f = r.c.back() * li % a.m;
        long sh = r.deg() - d.deg();
        q.c[sh] = f;
        for (size_t i = 0; i < d.c.size(); ++i) r.c[i + sh] -= f * d.c[i];
        r.reduce();
    }
    q.reduce();
    return {q, r};
}

/// Coefficients lifted to the symmetric range (-m/2, m/2].
IntPoly zm_symmetric(const ZmPoly& a) {
    std::vector<Int> c = a.c;
    Int half = a.m / 2;
    for (auto& v : c)
        if (v > half) v -= a.m;
    return IntPoly(std::move(c));
}

/// One quadratic Hensel step: from modulus m to m^2 (capped by target).
/// Invariants: f = g h (mod m), s g + t h = 1 (mod m), h monic.
void hensel_step(const IntPoly& f, ZmPoly& g, ZmPoly& h, ZmPoly& s, ZmPoly& t,
                 Int& m) {
    Int m2 = m * m;
    auto up = [&](ZmPoly& x) {
        x.m = m2;
        x.reduce();
    };
    up(g);
    up(h);
    up(s);
    up(t);
    ZmPoly fz = zm_from_int(f, m2);
    ZmPoly e = zm_sub(fz, zm_mul(g, h));
    auto [q, r] = zm_divmod(zm_mul(s, e), h);
    ZmPoly h2 = zm_add(h, r);
    // recover the cofactor by exact division, which also keeps degrees tight
    auto [g2, rem] = zm_divmod(fz, h2);
    if (!rem.zero()) throw std::logic_error("hensel step lost divisibility");
    ZmPoly b = zm_sub(zm_add(zm_mul(s, g2), zm_mul(t, h2)), ZmPoly{m2, {Int(1)}});
    auto [q2, r2] = zm_divmod(zm_mul(s, b), h2);
    ZmPoly s2 = zm_sub(s, r2);
    ZmPoly t2 = zm_sub(zm_sub(t, zm_mul(t, b)), zm_mul(q2, g2));
    g = std::move(g2);
    h = std::move(h2);
    s = std::move(s2);
    t = std::move(t2);
    m = m2;
}

/// Bezout cofactors of coprime a, b over F_p: s a + t b = 1.
void mp_ext_gcd(const ModPoly& a, const ModPoly& b, ModPoly& s, ModPoly& t) {
    const long p = a.p;
    ModPoly r0 = a, r1 = b;
    ModPoly s0{p, {1}}, s1{p, {}}, t0{p, {}}, t1{p, {1}};
    while (!r1.zero()) {
        auto [q, r] = mp_divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        ModPoly s2 = mp_sub(s0, mp_mul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(s2);
        ModPoly t2 = mp_sub(t0, mp_mul(q, t1));
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.deg() != 0) throw std::logic_error("ext_gcd of non-coprime polynomials");
    long inv = mod_inv(r0.c[0], p);
    s = mp_scale(s0, inv);
    t = mp_scale(t0, inv);
}

/// Lift f = lc * h1 ... hr (mod p), hi monic, to modulus >= target.
/// Returns monic factors mod M and sets M.
std::vector<ZmPoly> hensel_lift_all(const IntPoly& f, std::vector<ModPoly> hs,
                                    long p, const Int& target, Int& modulus_out) {
    std::vector<ZmPoly> lifted;
    IntPoly fcur = f;
    for (size_t i = 0; i + 1 < hs.size(); ++i) {
        // split fcur = (monic hs[i]) * (cofactor carrying the lead)
        ModPoly h0 = hs[i];
        ModPoly g0{p, {1}};
        for (size_t j = i + 1; j < hs.size(); ++j) g0 = mp_mul(g0, hs[j]);
        g0 = mp_scale(g0, static_cast<long>(mpz_fdiv_ui(fcur.lead().get_mpz_t(),
                                                        static_cast<unsigned long>(p))));
        ModPoly s, t;
        mp_ext_gcd(g0, h0, s, t);
        ZmPoly g = zm_from_mod(g0, Int(p)), h = zm_from_mod(h0, Int(p)),
               sz = zm_from_mod(s, Int(p)), tz = zm_from_mod(t, Int(p));
        Int m(p);
        while (m < target) hensel_step(fcur, g, h, sz, tz, m);
        lifted.push_back(h);
        // cofactor becomes the next integer polynomial to split
        fcur = zm_symmetric(g);
        modulus_out = m;
    }
    // last factor: monicize the remaining cofactor mod M
    Int M = modulus_out;
    ZmPoly last = zm_from_int(fcur, M);
    Int li;
    if (mpz_invert(li.get_mpz_t(), last.c.back().get_mpz_t(), M.get_mpz_t()) == 0)
        throw std::logic_error("leading coefficient not invertible mod p^k");
    for (auto& v : last.c) v = v * li % M;
    last.reduce();
    lifted.push_back(last);
    return lifted;
}

}  // namespace

std::vector<IntPoly> factor_squarefree(const IntPoly& f_in) {
    IntPoly f = f_in.primitive_part();
    if (f.is_zero() || f.degree() < 1)
        throw std::domain_error("factor_squarefree requires degree >= 1");
    if (f.lead() < 0) f = -f;
    if (!is_squarefree(f)) throw std::domain_error("input not squarefree");
    if (f.degree() == 1) return {f};

    // choose a prime of good reduction
    long p = 0;
    ModPoly fbar{0, {}};
    for (long cand = 3;; cand += 2) {
        Int cp(cand);
        if (!is_prime(cp)) continue;
        if (f.lead() % cand == 0) continue;
        ModPoly fb = mp_from_int(f, cand);
        ModPoly der{cand, {}};
        der.c.resize(fb.c.size() - 1);
        for (size_t i = 1; i < fb.c.size(); ++i)
            der.c[i - 1] = mulmod(fb.c[i], static_cast<long>(i % cand), cand);
        der.trim();
        if (der.zero()) continue;
        if (mp_gcd(fb, der).deg() == 0) {
            p = cand;
            fbar = fb;
            break;
        }
    }

    std::vector<ModPoly> mod_factors = mp_factor_squarefree(fbar);
    if (mod_factors.size() == 1) return {f};

    // lifting target: twice the Landau-Mignotte factor bound times |lc|
    const long d = f.degree();
    Int B = f.sup_norm() * Int(d + 1) * abs(f.lead());
    mpz_mul_2exp(B.get_mpz_t(), B.get_mpz_t(), d + 1);
    Int target = 2 * B + 1;
    Int modulus(0);
    std::vector<ZmPoly> lifted = hensel_lift_all(f, mod_factors, p, target, modulus);

    // subset recombination
    std::vector<IntPoly> out;
    IntPoly rem = f;
    std::vector<ZmPoly> pool = lifted;
    bool restart = true;
    while (restart) {
        restart = false;
        const size_t r = pool.size();
        for (size_t cardinality = 1; cardinality <= r / 2 && !restart; ++cardinality) {
            // iterate subsets of given cardinality via bitmask
            for (unsigned long mask = 1; mask < (1UL << r) && !restart; ++mask) {
                if (static_cast<size_t>(__builtin_popcountl(mask)) != cardinality)
                    continue;
                ZmPoly prod = zm_from_int(IntPoly::constant(rem.lead()), modulus);
                for (size_t i = 0; i < r; ++i)
                    if (mask & (1UL << i)) prod = zm_mul(prod, pool[i]);
                IntPoly cand = zm_symmetric(prod).primitive_part();
                if (cand.degree() < 1) continue;
                if (cand.divides(rem)) {
                    if (cand.lead() < 0) cand = -cand;
                    out.push_back(cand);
                    rem = rem.exact_div(cand).primitive_part();
                    if (rem.lead() < 0) rem = -rem;
                    std::vector<ZmPoly> next;
                    for (size_t i = 0; i < r; ++i)
                        if (!(mask & (1UL << i))) next.push_back(pool[i]);
                    pool = std::move(next);
                    restart = true;
                }
            }
        }
    }
    if (rem.degree() > 0) out.push_back(rem);
    std::sort(out.begin(), out.end(), [](const IntPoly& a, const IntPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.coeffs() < b.coeffs();
    });
    return out;
}

namespace {

/// Squarefree decomposition: f primitive, lead > 0; returns (part, mult).
std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(IntPoly f) {
    std::vector<std::pair<IntPoly, unsigned>> out;
    unsigned i = 1;
    IntPoly g = IntPoly::gcd(f, f.derivative());
    IntPoly w = f.exact_div(g).primitive_part();
    if (w.lead() < 0) w = -w;
    while (w.degree() > 0) {
        IntPoly y = IntPoly::gcd(w, g);
        IntPoly z = w.exact_div(y).primitive_part();
        if (z.lead() < 0) z = -z;
        if (z.degree() > 0) out.emplace_back(z, i);
        ++i;
        g = g.exact_div(y).primitive_part();
        if (!g.is_zero() && g.lead() < 0) g = -g;
        w = y;
    }
    return out;
}

}  // namespace

Factorization factor(const IntPoly& f) {
    if (f.is_zero()) throw std::domain_error("factor(0)");
    Factorization out;
    Int c = f.content();
    if (f.lead() < 0) c = -c;
    out.content = Rat(c);
    IntPoly fp = f.primitive_part();
    if (fp.lead() < 0) fp = -fp;
    if (fp.degree() < 1) return out;
    for (auto& [part, mult] : squarefree_decomposition(fp))
        for (auto& irr : factor_squarefree(part)) out.factors.emplace_back(irr, mult);
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree())
            return a.first.degree() < b.first.degree();
        return a.first.coeffs() < b.first.coeffs();
    });
    return out;
}

bool is_irreducible(const IntPoly& f) {
    IntPoly g = f.primitive_part();
    if (g.degree() < 1) return false;
    if (!is_squarefree(g)) return false;
    return factor_squarefree(g).size() == 1;
}

namespace {

/// Pseudo-remainder of F by G viewed as polynomials in Y over Z[X].
/// Zero iff G divides lead_Y(G)^k * F.
bool bivar_pseudo_divides(const BivarPoly& G, const BivarPoly& F) {
    const long ng = G.deg_y(), nf = F.deg_y();
    if (ng > nf) return false;
    std::vector<IntPoly> r(nf + 1), g(ng + 1);
    for (long j = 0; j <= nf; ++j) r[j] = F.y_coeff(j);
    for (long j = 0; j <= ng; ++j) g[j] = G.y_coeff(j);
    IntPoly gl = g[ng];
    long rd = nf;
    auto deg_of = [&]() {
        while (rd >= 0 && r[rd].is_zero()) --rd;
    };
    deg_of();
    while (rd >= ng) {
        IntPoly rl = r[rd];
        for (long j = 0; j <= rd; ++j) r[j] = r[j] * gl;
        for (long j = 0; j <= ng; ++j)
            r[rd - ng + j] = r[rd - ng + j] - g[j] * rl;
        deg_of();
    }
    for (long j = 0; j <= nf; ++j)
        if (!r[j].is_zero()) return false;
    return true;
}

IntPoly column_poly(const BivarPoly& F, bool as_y) {
    // F constant in one variable: extract the univariate integer polynomial
    long d = as_y ? F.deg_y() : F.deg_x();
    std::vector<Int> c(d + 1);
    for (long k = 0; k <= d; ++k) c[k] = as_y ? F.coeff_int(0, k) : F.coeff_int(k, 0);
    return IntPoly(std::move(c));
}

}  // namespace

bool is_irreducible(const BivarPoly& F) {
    if (F.is_zero()) return false;
    const long m = F.deg_x(), n = F.deg_y();
    if (m == 0 && n == 0) return false;
    if (n == 0) return is_irreducible(column_poly(F, false));
    if (m == 0) return is_irreducible(column_poly(F, true));

    // content in each variable must be trivial
    IntPoly xc;
    for (long j = 0; j <= n; ++j) xc = IntPoly::gcd(xc, F.y_coeff(j));
    if (xc.degree() > 0) return false;
    BivarPoly Ft = F.transpose();
    IntPoly yc;
    for (long j = 0; j <= m; ++j) yc = IntPoly::gcd(yc, Ft.y_coeff(j));
    if (yc.degree() > 0) return false;

    // Kronecker substitution Y -> X^D
    const long D = m + 1;
    std::vector<Int> uc(m + n * D + 1, Int(0));
    for (long i = 0; i <= m; ++i)
        for (long j = 0; j <= n; ++j) uc[i + j * D] += F.coeff_int(i, j);
    IntPoly u{std::move(uc)};
    Factorization uf = factor(u);

    // expand multiplicities into a flat list
    std::vector<IntPoly> parts;
    for (auto& [g, mult] : uf.factors)
        for (unsigned k = 0; k < mult; ++k) parts.push_back(g);
    if (parts.size() == 1) return true;
    if (parts.size() > 24) throw std::domain_error("too many Kronecker factors");

    const long half = u.degree() / 2;
    for (unsigned long mask = 1; mask + 1 < (1UL << parts.size()); ++mask) {
        long dsum = 0;
        for (size_t i = 0; i < parts.size(); ++i)
            if (mask & (1UL << i)) dsum += parts[i].degree();
        if (dsum == 0 || dsum > half) continue;
        IntPoly c = IntPoly::constant(Int(1));
        for (size_t i = 0; i < parts.size(); ++i)
            if (mask & (1UL << i)) c = c * parts[i];
        // un-Kronecker into a candidate grid
        std::vector<std::vector<Int>> grid(D, std::vector<Int>(c.degree() / D + 1, Int(0)));
        for (long k = 0; k <= c.degree(); ++k) grid[k % D][k / D] = c.coeff(k);
        BivarPoly cand = BivarPoly::from_int_grid(grid);
        if (cand.deg_y() < 1 || cand.deg_y() >= n) continue;
        if (bivar_pseudo_divides(cand, F)) return false;
    }
    return true;
}

}  // namespace hl
