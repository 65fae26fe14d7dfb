#include "heightlab/puiseux.hpp"

#include <algorithm>
#include <stdexcept>

#include "heightlab/factor.hpp"

namespace hl {

long vanishing_order(const BivarPoly& F) {
    if (F.is_zero()) throw std::domain_error("vanishing order of zero polynomial");
    if (!F.vanishes_at_origin()) throw std::domain_error("origin not on curve");
    long r = F.deg_x() + F.deg_y() + 1;
    for (long i = 0; i <= F.deg_x(); ++i)
        for (long j = 0; j <= F.deg_y(); ++j)
            if (F.coeff_int(i, j) != 0) r = std::min(r, i + j);
    return r;
}

BranchSummary puiseux_exponents(const BivarPoly& F) {
    if (F.is_zero()) throw std::domain_error("zero polynomial");
    const long n = F.deg_y();
    if (n < 1) throw std::domain_error("deg_Y F must be >= 1");
    if (F.specialize_x(Rat(0)).is_zero()) throw std::domain_error("x divides F");

    BranchSummary out;
    std::vector<NewtonPolygon::Vertex> pts;
    long j0 = -1;
    for (long j = 0; j <= n; ++j) {
        IntPoly fj = F.y_coeff(j);
        if (fj.is_zero()) continue;
        if (j0 < 0) j0 = j;
        pts.push_back({j, Rat(fj.order_at_zero())});
    }
    out.zero_roots = j0;  // Y^j0 | F: j0 roots identically zero
    out.r_from_exponents = Rat(j0);
    out.ell = j0;
    NewtonPolygon np = NewtonPolygon::from_points(std::move(pts));
    for (auto& [nu, mult] : np.root_valuations()) {
        Rat nur = nu;  // already canonical
        PuiseuxExponent pe{num(nur), static_cast<long>(den(nur).get_si()), mult};
        out.exponents.push_back(pe);
        if (nur > 0) {
            out.ell += mult;
            out.r_from_exponents += (nur < 1 ? nur : Rat(1)) * Rat(mult);
        }
    }
    return out;
}

PfsReport check_pfs(const BivarPoly& F) {
    BranchSummary bs = puiseux_exponents(F);
    PfsReport rep;
    rep.ell = bs.ell;
    rep.holds = true;
    for (long k = 0; k <= bs.ell && k <= F.deg_y(); ++k) {
        bool zero_at_0 = (F.y_coeff(k).coeff(0) == 0);
        rep.table.emplace_back(k, zero_at_0);
        if (k < bs.ell && !zero_at_0) rep.holds = false;
        if (k == bs.ell && zero_at_0) rep.holds = false;
    }
    return rep;
}

Rat PuiseuxBranch::coeff(long k) const {
    for (auto& [i, a] : coeffs)
        if (i == k) return a;
    return Rat(0);
}

RatPoly PuiseuxBranch::as_series() const {
    std::vector<Rat> c(truncation_order + 1, Rat(0));
    for (auto& [k, a] : coeffs)
        if (k <= truncation_order) c[k] = a;
    return RatPoly(std::move(c));
}

namespace {

// Dense rational grid g[i][j] = coefficient of x^i Y^j; local work
// representation for Newton-Puiseux substitutions.
using Grid = std::vector<std::vector<Rat>>;

Grid grid_of(const BivarPoly& F) {
    Grid g(F.deg_x() + 1, std::vector<Rat>(F.deg_y() + 1, Rat(0)));
    for (long i = 0; i <= F.deg_x(); ++i)
        for (long j = 0; j <= F.deg_y(); ++j) g[i][j] = Rat(F.coeff_int(i, j));
    return g;
}

long grid_degy(const Grid& g) {
    long n = -1;
    for (auto& row : g)
        for (long j = static_cast<long>(row.size()) - 1; j >= 0; --j)
            if (row[j] != 0) n = std::max(n, j);
    return n;
}

/// y-coefficient column j as x-polynomial; empty if zero.
std::vector<Rat> grid_col(const Grid& g, long j) {
    std::vector<Rat> c;
    for (size_t i = 0; i < g.size(); ++i)
        if (j < static_cast<long>(g[i].size())) c.push_back(g[i][j]);
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

long ordx(const std::vector<Rat>& c) {
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) return static_cast<long>(i);
    return -1;  // zero column
}

/// G(x, x^kappa (c + Y)) divided by x^(minimal order).
Grid substitute_step(const Grid& g, long kappa, const Rat& c) {
    const long m = static_cast<long>(g.size()) - 1;
    const long n = grid_degy(g);
    Grid out(m + kappa * n + 1, std::vector<Rat>(n + 1, Rat(0)));
    // binomials
    std::vector<std::vector<Rat>> binom(n + 1, std::vector<Rat>(n + 1, Rat(0)));
    for (long j = 0; j <= n; ++j) {
        binom[j][0] = 1;
        for (long t = 1; t <= j; ++t)
            binom[j][t] = binom[j - 1][t - 1] + (t <= j - 1 ? binom[j - 1][t] : Rat(0));
    }
    std::vector<Rat> cpow(n + 1, Rat(1));
    for (long t = 1; t <= n; ++t) cpow[t] = cpow[t - 1] * c;
    for (long i = 0; i <= m; ++i)
        for (long j = 0; j <= n && j < static_cast<long>(g[i].size()); ++j) {
            if (g[i][j] == 0) continue;
            for (long t = 0; t <= j; ++t)
                out[i + kappa * j][t] += g[i][j] * binom[j][t] * cpow[j - t];
        }
    // shift down by the minimal x-order
    long sh = -1;
    for (size_t i = 0; i < out.size() && sh < 0; ++i)
        for (auto& v : out[i])
            if (v != 0) {
                sh = static_cast<long>(i);
                break;
            }
    if (sh > 0) out.erase(out.begin(), out.begin() + sh);
    return out;
}

RatPoly mul_trunc(const RatPoly& a, const RatPoly& b, long K) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Rat> c(std::min(a.degree() + b.degree(), K) + 1, Rat(0));
    for (long i = 0; i <= a.degree(); ++i) {
        if (a.coeff(i) == 0 || i > K) continue;
        for (long j = 0; j <= b.degree() && i + j <= K; ++j)
            c[i + j] += a.coeff(i) * b.coeff(j);
    }
    return RatPoly(std::move(c));
}

/// G(x, s(x)) truncated at x^K.
RatPoly eval_series(const Grid& g, const RatPoly& s, long K) {
    const long n = grid_degy(g);
    RatPoly acc;
    for (long j = n; j >= 0; --j) {
        acc = mul_trunc(acc, s, K);
        std::vector<Rat> col = grid_col(g, j);
        if (static_cast<long>(col.size()) - 1 > K) col.resize(K + 1);
        acc = acc + RatPoly(std::move(col));
    }
    return acc;
}

struct Enumerator {
    long K;
    bool lost_branches = false;  // irrational or (relatively) ramified branches
    std::vector<std::vector<Rat>> found;  // dense a_1..a_K (index 0 = a_1)

    void emit(const std::vector<std::pair<long, Rat>>& prefix) {
        std::vector<Rat> a(K, Rat(0));
        for (auto& [k, c] : prefix)
            if (k >= 1 && k <= K) a[k - 1] = c;
        found.push_back(std::move(a));
    }

    /// Regular case: dG/dY(0,0) != 0; unique small branch via the Hensel
    /// coefficient recurrence.
    void regular_tail(const Grid& g, long base,
                      std::vector<std::pair<long, Rat>> prefix) {
        const long rem = K - base;
        Rat g01 = (g.size() > 0 && g[0].size() > 1) ? g[0][1] : Rat(0);
        RatPoly s(std::vector<Rat>{Rat(0)});
        for (long k = 1; k <= rem; ++k) {
            RatPoly p = eval_series(g, s, k);
            Rat ck = p.coeff(k);
            Rat bk = -ck / g01;
            if (bk != 0) {
                std::vector<Rat> c(s.coeffs());
                c.resize(k + 1, Rat(0));
                c[k] = bk;
                s = RatPoly(std::move(c));
                prefix.emplace_back(base + k, bk);
            }
        }
        emit(prefix);
    }

    void recurse(const Grid& g, long base,
                 std::vector<std::pair<long, Rat>> prefix) {
        if (base >= K) {
            emit(prefix);
            return;
        }
        Grid cur = g;
        // zero tail: Y | G means the remaining branch is identically zero
        if (ordx(grid_col(cur, 0)) < 0) {
            if (!prefix.empty()) emit(prefix);
            // peel Y and look for further (nonzero-tail) branches
            for (auto& row : cur) {
                if (row.size() > 1)
                    row.erase(row.begin());
                else
                    row.assign(1, Rat(0));
            }
            if (grid_degy(cur) < 1) return;
        }
        std::vector<Rat> f0 = grid_col(cur, 0);
        if (!f0.empty() && f0[0] != 0) return;  // G(0,0) != 0: no small branch
        // regular shortcut
        if (cur.size() > 0 && cur[0].size() > 1 && cur[0][1] != 0) {
            regular_tail(cur, base, std::move(prefix));
            return;
        }
        // Newton polygon over (j, ord_x f_j)
        const long n = grid_degy(cur);
        std::vector<NewtonPolygon::Vertex> pts;
        for (long j = 0; j <= n; ++j) {
            long o = ordx(grid_col(cur, j));
            if (o >= 0) pts.push_back({j, Rat(o)});
        }
        if (pts.size() < 2) return;
        NewtonPolygon np = NewtonPolygon::from_points(pts);
        for (auto& [nu, mult] : np.root_valuations()) {
            (void)mult;
            if (nu <= 0) continue;
            if (den(nu) != 1) {
                lost_branches = true;  // ramified relative to current e
                continue;
            }
            long kappa = static_cast<long>(num(nu).get_si());
            // characteristic polynomial of the segment
            // segment endpoints: find hull vertices with slope -nu
            // points (j, w_j) with w_j = w_j1 - nu (j - j1) on the segment
            long j1 = -1, j2 = -1;
            Rat v1;
            for (size_t si = 0; si + 1 < np.vertices().size(); ++si) {
                Rat slope = (np.vertices()[si + 1].valuation -
                             np.vertices()[si].valuation) /
                            Rat(np.vertices()[si + 1].index -
                                np.vertices()[si].index);
                if (slope == -nu) {
                    j1 = np.vertices()[si].index;
                    j2 = np.vertices()[si + 1].index;
                    v1 = np.vertices()[si].valuation;
                }
            }
            if (j1 < 0) continue;
            std::vector<Rat> phi(j2 - j1 + 1, Rat(0));
            for (long j = j1; j <= j2; ++j) {
                Rat w = v1 - nu * Rat(j - j1);
                if (den(w) != 1) continue;
                long wi = static_cast<long>(num(w).get_si());
                std::vector<Rat> col = grid_col(cur, j);
                if (wi >= 0 && wi < static_cast<long>(col.size()))
                    phi[j - j1] = col[wi];
            }
            // rational roots c != 0 of phi
            auto [iphi, cont] = RatPoly(phi).clear_denominators();
            (void)cont;
            std::vector<Rat> roots;
            if (iphi.degree() >= 1) {
                for (auto& [fac, mu] : factor(iphi).factors) {
                    (void)mu;
                    if (fac.degree() == 1) {
                        Rat c = make_rat(-fac.coeff(0), fac.coeff(1));
                        if (c != 0) roots.push_back(c);
                    } else {
                        lost_branches = true;
                    }
                }
            }
            std::sort(roots.begin(), roots.end());
            for (auto& c : roots) {
                Grid next = substitute_step(cur, kappa, c);
                auto pref2 = prefix;
                pref2.emplace_back(base + kappa, c);
                recurse(next, base + kappa, std::move(pref2));
            }
        }
    }
};

Grid prepare(const BivarPoly& F, long e) {
    if (F.is_zero()) throw std::domain_error("zero polynomial");
    if (!F.vanishes_at_origin()) throw std::domain_error("origin not on curve");
    if (F.specialize_x(Rat(0)).is_zero()) throw std::domain_error("x divides F");
    if (e < 1) throw std::domain_error("ramification index must be >= 1");
    return grid_of(e == 1 ? F : F.substitute_x_power(e));
}

}  // namespace

PuiseuxBranch expand_branch(const BivarPoly& F, long e, size_t branch_index,
                            long K) {
    Grid g = prepare(F, e);
    Enumerator en;
    en.K = K;
    en.recurse(g, 0, {});
    if (branch_index >= en.found.size()) {
        if (en.lost_branches) throw std::domain_error("irrational branch");
        throw std::out_of_range("branch index out of range");
    }
    PuiseuxBranch b;
    b.e = e;
    b.truncation_order = K;
    b.exact = true;
    for (long k = 1; k <= K; ++k)
        if (en.found[branch_index][k - 1] != 0)
            b.coeffs.emplace_back(k, en.found[branch_index][k - 1]);
    return b;
}

size_t count_rational_branches(const BivarPoly& F, long e) {
    Grid g = prepare(F, e);
    Enumerator en;
    en.K = 30;
    en.recurse(g, 0, {});
    return en.found.size();
}

bool branch_residual_ok(const BivarPoly& F, const PuiseuxBranch& branch) {
    BivarPoly Fe = branch.e == 1 ? F : F.substitute_x_power(branch.e);
    RatPoly s = branch.as_series();
    // exact evaluation F(t, s(t)) with no truncation
    RatPoly acc;
    for (long j = Fe.deg_y(); j >= 0; --j) {
        acc = acc * s + Fe.y_coeff(j).to_rat();
    }
    if (acc.is_zero()) return true;
    return acc.order_at_zero() > branch.truncation_order;
}

}  // namespace hl
