#include "heightlab/numbers.hpp"

#include <algorithm>
#include <stdexcept>

namespace hl {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

bool is_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 50) > 0;
}

long vp(const Int& n, const Int& p) {
    if (n == 0) throw std::domain_error("vp of zero");
    Int a = abs(n);
    long v = 0;
    Int q, r;
    while (true) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
        if (r != 0) break;
        a = q;
        ++v;
    }
    return v;
}

long vp(const Rat& q, const Int& p) {
    if (q == 0) throw std::domain_error("vp of zero");
    long v = 0;
    if (num(q) != 0) v += vp(num(q), p);
    v -= vp(den(q), p);
    return v;
}

namespace {

Int pollard_rho(const Int& n) {
    // Brent's variant; n odd composite, not a perfect power of a found factor.
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xB16B00B5UL);
    while (true) {
        Int y = rng.get_z_range(n - 3) + 2;
        Int c = rng.get_z_range(n - 2) + 1;
        Int x = y, d = 1, q = 1, ys = y;
        unsigned long r = 1;
        const unsigned long m = 128;
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && d == 1; k += m) {
                ys = y;
                unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                d = gcd(q, n);
            }
            r *= 2;
        }
        if (d == n) {
            d = 1;
            do {
                ys = (ys * ys + c) % n;
                d = gcd(abs(x - ys), n);
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

void factor_rec(const Int& n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    // perfect power?
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long e = 2; e <= mpz_sizeinbase(n.get_mpz_t(), 2); ++e) {
            Int root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0) {
                std::map<Int, unsigned> sub;
                factor_rec(root, sub);
                for (auto& [p, k] : sub) out[p] += k * e;
                return;
            }
        }
    }
    Int d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::map<Int, unsigned> factorize(const Int& n) {
    if (n == 0) throw std::domain_error("factorize(0)");
    std::map<Int, unsigned> out;
    Int a = abs(n);
    if (a == 1) return out;
    for (long p : {2L, 3L, 5L}) {
        while (a % p == 0) {
            out[Int(p)] += 1;
            a /= p;
        }
    }
    // wheel-free trial division up to 10^5 (single-limb remainders)
    for (unsigned long p = 7; p <= 100000 && a > 1; p += 2) {
        if (mpz_cmp_ui(a.get_mpz_t(), p * p) < 0) break;
        while (mpz_fdiv_ui(a.get_mpz_t(), p) == 0) {
            out[Int(p)] += 1;
            mpz_divexact_ui(a.get_mpz_t(), a.get_mpz_t(), p);
        }
    }
    if (a > 1) {
        if (a < Int("10000000000")) {
            // cofactor below (10^5)^2 is prime after the trial division above
            out[a] += 1;
        } else {
            factor_rec(a, out);
        }
    }
    return out;
}

std::vector<Int> prime_divisors(const Int& n) {
    std::vector<Int> ps;
    for (auto& [p, e] : factorize(n)) ps.push_back(p);
    return ps;
}

RealInterval rational_height(const Rat& q, mpfr_prec_t prec) {
    if (q == 0) return RealInterval::zero(prec);
    Int a = abs(num(q));
    Int m = std::max(a, den(q));
    return RealInterval::exact(m, prec).log();
}

}  // namespace hl
