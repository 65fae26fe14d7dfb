#include "heightlab/aux_poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "heightlab/linalg.hpp"

namespace hl {

namespace {

Int max_abs(const std::vector<Int>& w) {
    Int m(0);
    for (auto& x : w) {
        Int ax = abs(x);
        if (ax > m) m = ax;
    }
    return m;
}

}  // namespace

AuxPolynomial build_aux_poly(const BivarPoly& F, const PuiseuxBranch& branch,
                             long N, const Rat& delta, mpfr_prec_t prec) {
    const long n = F.deg_y();
    if (n < 1) throw std::domain_error("deg_Y F must be >= 1");
    if (N < 1) throw std::domain_error("N must be >= 1");
    if (delta <= 0 || delta > make_rat(1, 2))
        throw std::domain_error("delta out of range (0, 1/2]");
    if (branch.e != 1) throw std::domain_error("branch must be unramified (e = 1)");
    const long T = branch.truncation_order;
    if (T < std::max(N * n, 8L))
        throw std::domain_error("branch truncation too short");

    // dense series y~ and its powers y~^l, all truncated at x^T
    std::vector<Rat> y(T + 1, Rat(0));
    for (auto& [k, a] : branch.coeffs)
        if (k <= T) y[k] = a;
    std::vector<std::vector<Rat>> pw(n, std::vector<Rat>(T + 1, Rat(0)));
    pw[0][0] = 1;
    for (long l = 1; l < n; ++l)
        for (long i = 0; i <= T; ++i)
            for (long j = 0; j <= i; ++j) pw[l][i] += pw[l - 1][j] * y[i - j];

    // q vanishing conditions on the n(N+1) unknowns c_{i,l}; column order
    // (l, i) so the grid below reads back directly
    Rat qr = (Rat(1) - delta) * Rat(N * n);
    Int q_int;
    mpz_cdiv_q(q_int.get_mpz_t(), num(qr).get_mpz_t(), den(qr).get_mpz_t());
    const long q = q_int.get_si();
    const size_t ncols = static_cast<size_t>(n) * (N + 1);
    if (q >= static_cast<long>(ncols))
        throw std::logic_error("no kernel guaranteed: q >= n(N+1)");

    IntMatrix M;
    for (long k = 0; k < q; ++k) {
        std::vector<Rat> row(ncols, Rat(0));
        for (long l = 0; l < n; ++l)
            for (long i = 0; i <= N; ++i)
                if (i <= k) row[l * (N + 1) + i] = pw[l][k - i];
        M.push_back(primitive_vector(row));
    }

    IntMatrix kernel = integer_kernel(M, ncols);
    if (kernel.empty()) throw std::logic_error("kernel unexpectedly trivial");
    IntMatrix red = lll_reduce(kernel);
    std::vector<Int> best;
    for (auto& v : red) {
        std::vector<Rat> vq(v.size());
        for (size_t i = 0; i < v.size(); ++i) vq[i] = Rat(v[i]);
        std::vector<Int> w = primitive_vector(vq);
        if (max_abs(w) == 0) continue;
        if (best.empty() || max_abs(w) < max_abs(best) ||
            (max_abs(w) == max_abs(best) && w < best))
            best = w;
    }
    if (best.empty()) throw std::logic_error("kernel basis was all zero");

    AuxPolynomial out;
    out.N = N;
    out.delta = delta;
    out.target_order = q;

    std::vector<std::vector<Int>> grid(N + 1, std::vector<Int>(n, Int(0)));
    for (long l = 0; l < n; ++l)
        for (long i = 0; i <= N; ++i) grid[i][l] = best[l * (N + 1) + i];
    out.G = BivarPoly::from_int_grid(grid);

    // exact residual order of G(x, y~(x)) up to the branch truncation
    std::vector<Rat> res(T + 1, Rat(0));
    for (long l = 0; l < n; ++l)
        for (long i = 0; i <= N; ++i) {
            if (best[l * (N + 1) + i] == 0) continue;
            Rat c(best[l * (N + 1) + i]);
            for (long k = i; k <= T; ++k) res[k] += c * pw[l][k - i];
        }
    out.achieved_order = T + 1;
    out.order_exact = false;
    for (long k = 0; k <= T; ++k)
        if (res[k] != 0) {
            out.achieved_order = k;
            out.order_exact = true;
            break;
        }
    if (out.achieved_order < q)
        throw std::logic_error("kernel vector misses the target order");

    out.h_p_G = height_poly(out.G, PolyHeightKind::projective, prec);
    EisensteinReport eis = measure_eisenstein(branch, F, prec);
    out.eauxh_bound = RealInterval::exact(Rat(n * N) / delta, prec) *
                      (eis.observed.height + RealInterval::exact(3, prec));
    out.meets_bound = out.h_p_G.definitely_le(out.eauxh_bound);
    return out;
}

}  // namespace hl
